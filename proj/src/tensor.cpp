#include "qme/tensor.hpp"

#include <algorithm>

namespace qme {

bool TensorLess::operator()(const Tensor& a, const Tensor& b) const {
  if (a.g != b.g) return a.g < b.g;
  if (a.n != b.n) return a.n < b.n;
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
                                      WordLess{});
}

Orders orders(const Tensor& t) {
  Orders o;
  o.definition = t.g + t.n;
  for (const auto& w : t.factors) o.definition += w.size();
  o.filtration = 2 * t.g + t.n + t.factors.size() - 1;
  return o;
}

int tensor_parity(const Space& space, const Tensor& t) {
  int p = (t.n * space.nu_parity()) & 1;
  for (const auto& w : t.factors) p ^= factor_parity(space, w);
  return p;
}

std::optional<SignedTensor> normalize_tensor(const Space& space, unsigned g, unsigned n, std::vector<Word> words) {
  int sign = 1;
  const int nu = space.nu_parity();
  std::vector<Word> ws;
  std::vector<int> ps;
  ws.reserve(words.size());
  int acc = 0;
  for (auto& w : words) {
    if (w.empty()) {
      // the empty word is nu; move it in front of the words already seen
      if (nu && acc) sign = -sign;
      ++n;
      continue;
    }
    auto nw = normalize_word(space, w);
    if (!nw) return std::nullopt;
    sign *= nw->sign;
    ws.push_back(std::move(nw->word));
    ps.push_back(factor_parity(space, ws.back()));
    acc ^= ps.back();
  }
  if (nu && n >= 2) return std::nullopt;
  WordLess less;
  for (std::size_t i = 1; i < ws.size(); ++i) {
    for (std::size_t j = i; j > 0 && less(ws[j], ws[j - 1]); --j) {
      if (ps[j] && ps[j - 1]) sign = -sign;
      std::swap(ws[j], ws[j - 1]);
      std::swap(ps[j], ps[j - 1]);
    }
  }
  for (std::size_t i = 1; i < ws.size(); ++i)
    if (ps[i] && ws[i] == ws[i - 1]) return std::nullopt;
  return SignedTensor{Tensor{g, n, std::move(ws)}, sign};
}

TensorSum TensorSum::single(const Tensor& t, const Q& c) {
  TensorSum s;
  s.add(t, c);
  return s;
}

void TensorSum::add(const Tensor& t, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorSum::add(const TensorSum& other, const Q& c) {
  for (const auto& [t, v] : other.terms_) add(t, c * v);
}

void TensorSum::add_normalized(const Space& space, unsigned g, unsigned n, std::vector<Word> words, const Q& c,
                               bool keep_scalars) {
  if (c == 0) return;
  auto st = normalize_tensor(space, g, n, std::move(words));
  if (!st) return;
  if (st->tensor.factors.empty() && !keep_scalars) return;
  add(st->tensor, st->sign * c);
}

TensorSum TensorSum::scaled(const Q& c) const {
  TensorSum s;
  s.add(*this, c);
  return s;
}

TensorSum operator+(const TensorSum& a, const TensorSum& b) {
  TensorSum s = a;
  s.add(b);
  return s;
}

TensorSum operator-(const TensorSum& a, const TensorSum& b) {
  TensorSum s = a;
  s.add(b, -1);
  return s;
}

TensorSum product(const Space& space, const TensorSum& a, const TensorSum& b, bool keep_scalars) {
  TensorSum out;
  const int nu = space.nu_parity();
  for (const auto& [ta, va] : a.terms()) {
    int pa = 0;
    for (const auto& w : ta.factors) pa ^= factor_parity(space, w);
    for (const auto& [tb, vb] : b.terms()) {
      // nu^{n_b} moves left past the words of a
      const int s = sign_of(tb.n * nu * pa);
      std::vector<Word> ws = ta.factors;
      ws.insert(ws.end(), tb.factors.begin(), tb.factors.end());
      out.add_normalized(space, ta.g + tb.g, ta.n + tb.n, std::move(ws), s * va * vb, keep_scalars);
    }
  }
  return out;
}

TensorSum embed(const Hamiltonian& h) {
  TensorSum s;
  for (const auto& [w, v] : h.terms()) s.add(Tensor{0, 0, {w}}, v);
  return s;
}

Hamiltonian to_hamiltonian(const TensorSum& x) {
  Hamiltonian h;
  for (const auto& [t, v] : x.terms()) {
    if (t.g || t.n || t.k() != 1) throw Error(ErrorKind::Usage, "element is not a single-word combination");
    h.add(t.factors[0], v);
  }
  return h;
}

}  // namespace qme
