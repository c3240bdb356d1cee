#include "qme/lambda.hpp"

#include <sstream>

namespace qme {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::HGe2: return "hq2";
    case Variant::LambdaGamma: return "lg";
    case Variant::LambdaGammaNu: return "lgv";
  }
  return "?";
}

Variant parse_variant(const std::string& name) {
  if (name == "hq2") return Variant::HGe2;
  if (name == "lg") return Variant::LambdaGamma;
  if (name == "lgv") return Variant::LambdaGammaNu;
  throw Error(ErrorKind::Usage, "unknown variant '" + name + "' (expected hq2, lg or lgv)");
}

Profile parse_profile(const std::string& text) {
  std::vector<long> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long x = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "malformed truncation profile '" + text + "'");
    }
  }
  if (v.size() != 5) throw Error(ErrorKind::Parse, "truncation profile needs five values L,K,G,N,P");
  if (v[0] < 1 || v[1] < 1 || v[2] < 1 || v[3] < 0 || v[4] < 1)
    throw Error(ErrorKind::Usage, "truncation bounds must be >= 1 (N >= 0)");
  return Profile{static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]), static_cast<unsigned>(v[2]),
                 static_cast<unsigned>(v[3]), static_cast<unsigned>(v[4])};
}

std::string render_profile(const Profile& p) {
  std::ostringstream os;
  os << p.L << ',' << p.K << ',' << p.G << ',' << p.N << ',' << p.P;
  return os.str();
}

bool is_member(Variant v, const Tensor& t) {
  const Orders o = orders(t);
  switch (v) {
    case Variant::LambdaGammaNu: return t.k() >= 1 && o.definition >= 2;
    case Variant::LambdaGamma: return t.k() >= 1 && o.definition >= 2 && t.n == 0;
    case Variant::HGe2: return t.g == 0 && t.n == 0 && t.k() == 1 && t.factors[0].size() >= 2;
  }
  return false;
}

void validate(Variant v, const TensorSum& x) {
  for (const auto& [t, c] : x.terms()) {
    if (is_member(v, t)) continue;
    std::ostringstream os;
    os << "term with g=" << t.g << " n=" << t.n << " k=" << t.k() << " (definition order "
       << orders(t).definition << ") is not in " << variant_name(v);
    throw Error(ErrorKind::Usage, os.str());
  }
}

TensorSum truncate(const TensorSum& x, const Profile& p) {
  TensorSum out;
  for (const auto& [t, c] : x.terms())
    if (t.g <= p.G && t.n <= p.N && filtration_order(t) <= p.P) out.add(t, c);
  return out;
}

TensorSum filtration_part(const TensorSum& x, std::size_t order) {
  TensorSum out;
  for (const auto& [t, c] : x.terms())
    if (filtration_order(t) == order) out.add(t, c);
  return out;
}

std::size_t min_filtration_order(const TensorSum& x) {
  std::size_t m = kUnbounded;
  for (const auto& [t, c] : x.terms()) m = std::min(m, filtration_order(t));
  return m;
}

TensorSum drop_nu(const TensorSum& x) {
  TensorSum out;
  for (const auto& [t, c] : x.terms())
    if (t.n == 0) out.add(t, c);
  return out;
}

namespace {

std::vector<int> parities(const Space& space, const std::vector<Word>& ws) {
  std::vector<int> ps;
  ps.reserve(ws.size());
  for (const auto& w : ws) ps.push_back(factor_parity(space, w));
  return ps;
}

int prefix_sum(const std::vector<int>& ps, std::size_t end) {
  int s = 0;
  for (std::size_t i = 0; i < end; ++i) s ^= ps[i];
  return s;
}

template <class F>
void for_each_term(const Hamiltonian& h, F&& f) {
  if (h.scalar() != 0) f(Word{}, h.scalar());
  for (const auto& [w, c] : h.terms()) f(w, c);
}

std::vector<Word> without(const std::vector<Word>& ws, std::size_t i, std::size_t j = kUnbounded) {
  std::vector<Word> rest;
  rest.reserve(ws.size());
  for (std::size_t a = 0; a < ws.size(); ++a)
    if (a != i && a != j) rest.push_back(ws[a]);
  return rest;
}

// Sign exponent of the CE differential for the pair (i, j), including the
// symmetric normalization of the bracket.
int pair_exponent(const std::vector<int>& ps, std::size_t i, std::size_t j) {
  return ps[i] * prefix_sum(ps, i) + ps[j] * prefix_sum(ps, j) + ps[i] * ps[j] + ps[i];
}

}  // namespace

TensorSum ce_delta(const Space& space, const TensorSum& x, bool keep_scalars) {
  TensorSum out;
  const int nu = space.nu_parity();
  for (const auto& [t, v] : x.terms()) {
    const auto ps = parities(space, t.factors);
    const std::size_t k = t.k();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const int s = sign_of(pair_exponent(ps, i, j) + static_cast<int>(t.n) * nu);
        const auto rest = without(t.factors, i, j);
        for_each_term(bracket(space, t.factors[i], t.factors[j]), [&](const Word& w, const Q& c) {
          std::vector<Word> ws{w};
          ws.insert(ws.end(), rest.begin(), rest.end());
          out.add_normalized(space, t.g, t.n, std::move(ws), s * v * c, keep_scalars);
        });
      }
    }
  }
  return out;
}

TensorSum extend_cobracket(const Space& space, const TensorSum& x, bool keep_scalars) {
  TensorSum out;
  const int nu = space.nu_parity();
  for (const auto& [t, v] : x.terms()) {
    const auto ps = parities(space, t.factors);
    for (std::size_t i = 0; i < t.k(); ++i) {
      const int s = sign_of(ps[i] * prefix_sum(ps, i) + static_cast<int>(t.n) * nu);
      const auto rest = without(t.factors, i);
      for (const auto& [pair, c] : cobracket(space, t.factors[i]).terms()) {
        std::vector<Word> ws{pair.first, pair.second};
        ws.insert(ws.end(), rest.begin(), rest.end());
        out.add_normalized(space, t.g, t.n, std::move(ws), s * v * c, keep_scalars);
      }
    }
  }
  return out;
}

TensorSum differential(const Space& space, Variant v, const TensorSum& x) {
  if (v == Variant::HGe2) return {};
  TensorSum out = extend_cobracket(space, x);
  for (const auto& [t, c] : ce_delta(space, x).terms()) out.add(Tensor{t.g + 1, t.n, t.factors}, c);
  return v == Variant::LambdaGamma ? drop_nu(out) : out;
}

TensorSum lambda_bracket(const Space& space, Variant v, const TensorSum& x, const TensorSum& y,
                         bool keep_scalars) {
  TensorSum out;
  const int nu = space.nu_parity();
  for (const auto& [ta, va] : x.terms()) {
    const auto pa = parities(space, ta.factors);
    const int sum_a = prefix_sum(pa, pa.size());
    const int par_a = sum_a ^ ((ta.n * nu) & 1);
    for (const auto& [tb, vb] : y.terms()) {
      std::vector<Word> ws = ta.factors;
      ws.insert(ws.end(), tb.factors.begin(), tb.factors.end());
      auto ps = pa;
      const auto pb = parities(space, tb.factors);
      ps.insert(ps.end(), pb.begin(), pb.end());
      const int base = static_cast<int>(tb.n) * nu * sum_a + static_cast<int>(ta.n + tb.n) * nu + par_a;
      for (std::size_t i = 0; i < ta.k(); ++i) {
        for (std::size_t j = ta.k(); j < ws.size(); ++j) {
          const int s = sign_of(base + pair_exponent(ps, i, j));
          const auto rest = without(ws, i, j);
          for_each_term(bracket(space, ws[i], ws[j]), [&](const Word& w, const Q& c) {
            std::vector<Word> out_ws{w};
            out_ws.insert(out_ws.end(), rest.begin(), rest.end());
            out.add_normalized(space, ta.g + tb.g, ta.n + tb.n, std::move(out_ws), s * va * vb * c,
                               keep_scalars);
          });
        }
      }
    }
  }
  return v == Variant::LambdaGamma ? drop_nu(out) : out;
}

TensorSum symmetric_bracket(const Space& space, Variant v, const TensorSum& x, const TensorSum& y) {
  TensorSum out;
  for (const auto& [t, c] : x.terms())
    out.add(lambda_bracket(space, v, TensorSum::single(t, c), y), sign_of(tensor_parity(space, t)));
  return out;
}

TensorSum project(const TensorSum& x, Variant from, Variant to) {
  auto rank = [](Variant v) { return v == Variant::LambdaGammaNu ? 0 : v == Variant::LambdaGamma ? 1 : 2; };
  if (rank(to) < rank(from))
    throw Error(ErrorKind::Usage, "cannot project " + variant_name(from) + " to " + variant_name(to));
  TensorSum out;
  for (const auto& [t, c] : x.terms()) {
    if (rank(to) >= 1 && t.n > 0) continue;
    if (rank(to) == 2 && !(t.g == 0 && t.k() == 1 && t.factors[0].size() >= 2)) continue;
    out.add(t, c);
  }
  return out;
}

void add_pair(PairSum& s, const TensorPair& p, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = s.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

PairSum coproduct(const Space& space, const TensorSum& x) {
  PairSum out;
  for (const auto& [t, v] : x.terms()) {
    const auto ps = parities(space, t.factors);
    const std::size_t k = t.k();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Tensor left{t.g, t.n, {}}, right{0, 0, {}};
      int e = 0, right_par = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          left.factors.push_back(t.factors[i]);
          e += ps[i] * right_par;
        } else {
          right.factors.push_back(t.factors[i]);
          right_par ^= ps[i];
        }
      }
      add_pair(out, {left, right}, sign_of(e) * v);
    }
  }
  return out;
}

PairSum delta_on_pairs(const Space& space, const PairSum& x) {
  PairSum out;
  for (const auto& [p, v] : x) {
    for (const auto& [t, c] : ce_delta(space, TensorSum::single(p.first)).terms()) add_pair(out, {t, p.second}, v * c);
    const int s = sign_of(tensor_parity(space, p.first));
    for (const auto& [t, c] : ce_delta(space, TensorSum::single(p.second)).terms())
      add_pair(out, {p.first, t}, s * v * c);
  }
  return out;
}

}  // namespace qme
