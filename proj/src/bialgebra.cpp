#include "qme/bialgebra.hpp"

#include "qme/basis.hpp"
#include "qme/lambda.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace qme {

Hamiltonian bracket(const Space& space, const Word& a, const Word& b) {
  Hamiltonian out;
  const std::size_t n = a.size(), m = b.size();
  Word seq;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Q& c = space.dual(a[i], b[j]);
      if (c == 0) continue;
      // a rotated so that a_i is last, b rotated so that b_j is first
      const int s = rotation_sign(space, a, i + 1) * rotation_sign(space, b, j);
      seq.clear();
      for (std::size_t r = 1; r < n; ++r) seq.push_back(a[(i + r) % n]);
      for (std::size_t r = 1; r < m; ++r) seq.push_back(b[(j + r) % m]);
      out.add_sequence(space, seq, s * c);
    }
  }
  return out;
}

Hamiltonian bracket(const Space& space, const Hamiltonian& a, const Hamiltonian& b, std::size_t max_len) {
  Hamiltonian out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add(bracket(space, wa, wb), ca * cb);
  return max_len == kUnbounded ? out : out.truncated(max_len);
}

void CobracketValue::add(const Word& left, const Word& right, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Pair{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CobracketValue::add(const CobracketValue& other, const Q& c) {
  for (const auto& [p, v] : other.terms_) add(p.first, p.second, c * v);
}

CobracketValue cobracket(const Space& space, const Word& w) {
  CobracketValue out;
  const std::size_t n = w.size();
  const int shift = space.shift();
  const Q half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Q& c = space.dual(w[i], w[j]);
      if (c == 0) continue;
      // w rotated to a_i X a_j Y
      Word x, y;
      for (std::size_t r = i + 1; r < j; ++r) x.push_back(w[r]);
      for (std::size_t r = j + 1; r < n + i; ++r) y.push_back(w[r % n]);
      const int px = word_parity(space, x);
      const int e = space.parity(w[j]) * px + shift * px + space.parity(w[i]) + 1;
      auto nx = normalize_word(space, x);
      auto ny = normalize_word(space, y);
      if (!nx || !ny) continue;
      const Q coeff = rotation_sign(space, w, i) * sign_of(e) * nx->sign * ny->sign * c;
      const int fx = px ^ shift, fy = word_parity(space, y) ^ shift;
      out.add(nx->word, ny->word, half * coeff);
      out.add(ny->word, nx->word, half * sign_of(fx * fy) * coeff);
    }
  }
  return out;
}

CobracketValue cobracket(const Space& space, const Hamiltonian& h) {
  CobracketValue out;
  for (const auto& [w, c] : h.terms()) out.add(cobracket(space, w), c);
  return out;
}

namespace {

// A sample is a combination of words sharing one factor parity.
struct Sample {
  Hamiltonian h;
  int parity = 0;
};

std::string describe(const Space& space, const Hamiltonian& h) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : h.terms()) {
    os << (first ? "" : " + ") << c.get_str() << " * " << render_word(space, w);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

class Checker {
public:
  Checker(const Space& space) : space_(space) {}

  void record(AxiomResult& r, bool ok, const std::function<std::string()>& witness) {
    ++r.checked;
    if (!ok && r.pass) {
      r.pass = false;
      r.witness = witness();
    }
  }

  Hamiltonian br(const Hamiltonian& a, const Hamiltonian& b) const { return bracket(space_, a, b); }

  bool antisymmetry(const Sample& x, const Sample& y) const {
    const int px = x.parity ^ 1, py = y.parity ^ 1;
    return (br(x.h, y.h) + br(y.h, x.h).scaled(sign_of(px * py))).is_zero();
  }

  bool jacobi(const Sample& x, const Sample& y, const Sample& z) const {
    const int px = x.parity ^ 1, py = y.parity ^ 1;
    Hamiltonian lhs = br(x.h, br(y.h, z.h));
    Hamiltonian rhs = br(br(x.h, y.h), z.h) + br(y.h, br(x.h, z.h)).scaled(sign_of(px * py));
    return lhs == rhs;
  }

  // Delta applied to the left leg of Delta(x), collected in S^3 with empty
  // legs as nu.
  bool cojacobi(const Sample& x) const {
    TensorSum acc;
    for (const auto& [p, c] : cobracket(space_, x.h).terms()) {
      if (p.first.empty()) continue;
      for (const auto& [q, c2] : cobracket(space_, p.first).terms())
        acc.add_normalized(space_, 0, 0, {q.first, q.second, p.second}, c * c2, true);
    }
    return acc.is_zero();
  }

  // Delta{x,y} = [Delta x, y] + (-1)^{|x|+1} [x, Delta y]
  bool compatibility(const Sample& x, const Sample& y) const {
    const auto v = Variant::LambdaGammaNu;
    const TensorSum ex = embed(x.h), ey = embed(y.h);
    TensorSum lhs = extend_cobracket(space_, embed(br(x.h, y.h)), true);
    TensorSum rhs = lambda_bracket(space_, v, extend_cobracket(space_, ex, true), ey, true);
    rhs.add(lambda_bracket(space_, v, ex, extend_cobracket(space_, ey, true), true), sign_of(x.parity + 1));
    return lhs == rhs;
  }

  // Symmetric bracket applied to the legs of Delta(x).
  bool involutivity(const Sample& x) const {
    Hamiltonian acc;
    for (const auto& [p, c] : cobracket(space_, x.h).terms()) {
      if (p.first.empty() || p.second.empty()) continue;
      acc.add(bracket(space_, p.first, p.second), c * sign_of(factor_parity(space_, p.first)));
    }
    return acc.is_zero();
  }

private:
  const Space& space_;
};

}  // namespace

AxiomReport check_bialgebra_axioms(const Space& space, std::size_t max_len, std::size_t samples,
                                   std::uint64_t seed) {
  AxiomReport report;
  auto named = [](const char* n) {
    AxiomResult r;
    r.name = n;
    return r;
  };
  AxiomResult anti = named("antisymmetry"), jac = named("jacobi"), cojac = named("cojacobi"),
              compat = named("compatibility"), invol = named("involutivity");
  Checker ck(space);

  std::vector<Sample> exhaustive;
  const auto small = enumerate_basis(space, WordConstraints{1, 3, std::nullopt});
  for (const auto& w : small.elements())
    exhaustive.push_back({Hamiltonian::word(w), factor_parity(space, w)});

  auto wit1 = [&](const Sample& a) { return [&, a] { return "x = " + describe(space, a.h); }; };
  auto wit2 = [&](const Sample& a, const Sample& b) {
    return [&, a, b] { return "x = " + describe(space, a.h) + ", y = " + describe(space, b.h); };
  };

  auto run_single = [&](const std::vector<Sample>& ss) {
    for (const auto& x : ss) {
      ck.record(cojac, ck.cojacobi(x), wit1(x));
      ck.record(invol, ck.involutivity(x), wit1(x));
    }
  };
  run_single(exhaustive);
  for (const auto& x : exhaustive) {
    for (const auto& y : exhaustive) {
      ck.record(anti, ck.antisymmetry(x, y), wit2(x, y));
      ck.record(compat, ck.compatibility(x, y), wit2(x, y));
      for (const auto& z : exhaustive)
        ck.record(jac, ck.jacobi(x, y, z), [&, x, y, z] {
          return "x = " + describe(space, x.h) + ", y = " + describe(space, y.h) + ", z = " + describe(space, z.h);
        });
    }
  }

  const auto pool_slice = enumerate_basis(space, WordConstraints{1, max_len, std::nullopt});
  const auto& pool = pool_slice.elements();
  std::vector<std::vector<Word>> by_parity(2);
  for (const auto& w : pool) by_parity[factor_parity(space, w)].push_back(w);
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    Sample s;
    s.parity = static_cast<int>(rng() % 2);
    if (by_parity[s.parity].empty()) s.parity ^= 1;
    const auto& ws = by_parity[s.parity];
    const std::size_t terms = 1 + rng() % 3;
    for (std::size_t t = 0; t < terms && !ws.empty(); ++t) {
      const long num = static_cast<long>(rng() % 7) - 3;
      const long den = 1 + static_cast<long>(rng() % 3);
      s.h.add(ws[rng() % ws.size()], make_q(num, den));
    }
    return s;
  };
  for (std::size_t i = 0; i < samples && !pool.empty(); ++i) {
    Sample x = draw(), y = draw(), z = draw();
    ck.record(anti, ck.antisymmetry(x, y), wit2(x, y));
    ck.record(jac, ck.jacobi(x, y, z), wit2(x, y));
    ck.record(cojac, ck.cojacobi(x), wit1(x));
    ck.record(compat, ck.compatibility(x, y), wit2(x, y));
    ck.record(invol, ck.involutivity(x), wit1(x));
  }
  report.results = {anti, jac, cojac, compat, invol};
  for (const auto& r : report.results) report.pass = report.pass && r.pass;
  return report;
}

}  // namespace qme
