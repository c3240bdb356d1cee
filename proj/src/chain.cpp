#include "qme/chain.hpp"

#include <algorithm>

namespace qme {

bool ChainLess::operator()(const ChainTerm& a, const ChainTerm& b) const {
  if (a.g != b.g) return a.g < b.g;
  if (a.n != b.n) return a.n < b.n;
  if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
  return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
                                      BlockLess{});
}

int block_parity(const Space& space, const Block& b) {
  int p = 0;
  for (const auto& w : b) p ^= factor_parity(space, w);
  return p;
}

std::size_t chain_order(const ChainTerm& t) {
  std::size_t o = 2 * t.g + t.n;
  for (const auto& b : t.blocks) o += b.size() - 1;
  return o;
}

ChainSum ChainSum::one() {
  ChainSum c;
  c.add(ChainTerm{}, 1);
  return c;
}

void ChainSum::add(const ChainTerm& t, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void ChainSum::add(const ChainSum& other, const Q& c) {
  for (const auto& [t, v] : other.terms_) add(t, c * v);
}

void ChainSum::add_normalized(const Space& space, unsigned g, unsigned n, std::vector<Block> blocks, const Q& c) {
  if (c == 0) return;
  if (space.nu_parity() && n >= 2) return;
  int sign = 1;
  std::vector<int> ps;
  for (const auto& b : blocks) ps.push_back(block_parity(space, b));
  BlockLess less;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    for (std::size_t j = i; j > 0 && less(blocks[j], blocks[j - 1]); --j) {
      if (ps[j] && ps[j - 1]) sign = -sign;
      std::swap(blocks[j], blocks[j - 1]);
      std::swap(ps[j], ps[j - 1]);
    }
  }
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (ps[i] && blocks[i] == blocks[i - 1]) return;
  add(ChainTerm{g, n, std::move(blocks)}, sign * c);
}

ChainSum ChainSum::scaled(const Q& c) const {
  ChainSum s;
  s.add(*this, c);
  return s;
}

ChainSum chain_from_lambda(const TensorSum& x) {
  ChainSum c;
  for (const auto& [t, v] : x.terms()) c.add(ChainTerm{t.g, t.n, {t.factors}}, v);
  return c;
}

ChainSum chain_product(const Space& space, const ChainSum& a, const ChainSum& b) {
  ChainSum out;
  const int nu = space.nu_parity();
  for (const auto& [ta, va] : a.terms()) {
    int pa = 0;
    for (const auto& bl : ta.blocks) pa ^= block_parity(space, bl);
    for (const auto& [tb, vb] : b.terms()) {
      std::vector<Block> bs = ta.blocks;
      bs.insert(bs.end(), tb.blocks.begin(), tb.blocks.end());
      out.add_normalized(space, ta.g + tb.g, ta.n + tb.n, std::move(bs), sign_of(tb.n * nu * pa) * va * vb);
    }
  }
  return out;
}

ChainSum chain_truncate(const ChainSum& c, const Profile& p) {
  ChainSum out;
  for (const auto& [t, v] : c.terms())
    if (t.blocks.size() <= p.K && chain_order(t) <= p.P && t.g <= p.G && t.n <= p.N) out.add(t, v);
  return out;
}

ChainSum chain_max_blocks(const ChainSum& c, std::size_t max_blocks) {
  ChainSum out;
  for (const auto& [t, v] : c.terms())
    if (t.blocks.size() <= max_blocks) out.add(t, v);
  return out;
}

namespace {

TensorSum block_element(const Block& b) { return TensorSum::single(Tensor{0, 0, b}); }

ChainSum rest_chain(const ChainTerm& t, std::size_t i, std::size_t j = static_cast<std::size_t>(-1)) {
  ChainTerm r;
  for (std::size_t a = 0; a < t.blocks.size(); ++a)
    if (a != i && a != j) r.blocks.push_back(t.blocks[a]);
  ChainSum c;
  c.add(r, 1);
  return c;
}

int prefix(const std::vector<int>& ps, std::size_t end) {
  int s = 0;
  for (std::size_t a = 0; a < end; ++a) s ^= ps[a];
  return s;
}

// Adds gamma^g nu^n (already signed) times the chain r.
void add_prefixed(const Space& space, ChainSum& out, unsigned g, unsigned n, const ChainSum& r, const Q& c) {
  for (const auto& [t, v] : r.terms()) out.add_normalized(space, g + t.g, n + t.n, t.blocks, c * v);
}

}  // namespace

ChainSum chain_delta(const Space& space, Variant v, const ChainSum& c) {
  ChainSum out;
  const int nu = space.nu_parity();
  for (const auto& [t, val] : c.terms()) {
    const std::size_t m = t.blocks.size();
    std::vector<int> ps;
    for (const auto& b : t.blocks) ps.push_back(block_parity(space, b));
    const int pre = static_cast<int>(t.n) * nu;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const int p = ps[i] * prefix(ps, i) + ps[j] * prefix(ps, j) + ps[i] * ps[j];
        TensorSum br = symmetric_bracket(space, v, block_element(t.blocks[i]), block_element(t.blocks[j]));
        if (br.is_zero()) continue;
        add_prefixed(space, out, t.g, t.n, chain_product(space, chain_from_lambda(br), rest_chain(t, i, j)),
                     sign_of(p + pre) * val);
      }
      const int q = ps[i] * prefix(ps, i);
      TensorSum db = differential(space, v, block_element(t.blocks[i]));
      if (db.is_zero()) continue;
      add_prefixed(space, out, t.g, t.n, chain_product(space, chain_from_lambda(db), rest_chain(t, i)),
                   sign_of(q + pre) * val);
    }
  }
  return out;
}

ChainSum chain_exp(const Space& space, const TensorSum& x, const Profile& p) {
  ChainSum out = ChainSum::one(), term = ChainSum::one();
  const ChainSum cx = chain_from_lambda(x);
  for (std::size_t k = 1; k <= p.K; ++k) {
    term = chain_truncate(chain_product(space, term, cx), p).scaled(Q(1) / Q(static_cast<long>(k)));
    if (term.is_zero()) break;
    out.add(term);
  }
  return out;
}

ChainSum s_y(const Space& space, const TensorSum& y, const ChainSum& c) {
  return chain_product(space, chain_from_lambda(y), c);
}

ChainSum gamma_y(const Space& space, Variant v, const TensorSum& y, const ChainSum& c) {
  ChainSum out = chain_product(space, chain_from_lambda(differential(space, v, y)), c);
  for (const auto& [t, val] : c.terms()) {
    std::vector<int> ps;
    for (const auto& b : t.blocks) ps.push_back(block_parity(space, b));
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
      TensorSum br = symmetric_bracket(space, v, y, block_element(t.blocks[i]));
      if (br.is_zero()) continue;
      add_prefixed(space, out, t.g, t.n, chain_product(space, chain_from_lambda(br), rest_chain(t, i)),
                   sign_of(ps[i] * prefix(ps, i)) * val);
    }
  }
  return out;
}

ChainSum exp_gamma_y(const Space& space, Variant v, const TensorSum& y, const ChainSum& c, const Profile& p) {
  constexpr std::size_t kCap = 64;
  ChainSum out = chain_truncate(c, p), term = out;
  for (std::size_t k = 1;; ++k) {
    term = chain_truncate(gamma_y(space, v, y, term), p).scaled(Q(1) / Q(static_cast<long>(k)));
    if (term.is_zero()) return out;
    if (k > kCap) throw Error(ErrorKind::Range, "exp(gamma_y) did not terminate within the truncation");
    out.add(term);
  }
}

}  // namespace qme
