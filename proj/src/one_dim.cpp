#include "qme/one_dim.hpp"

#include "qme/expression.hpp"

#include <random>

namespace qme {

Space one_dim_space(const Q& scale) {
  if (scale == 0) throw Error(ErrorKind::Usage, "form scale must be nonzero");
  return Space({{"t", 1}}, {{scale}}, 0);
}

Word t_power(std::size_t k) { return Word(k, 0); }

OneDimFamily make_family(const std::map<std::size_t, Q>& coeffs, const Q& scale) {
  OneDimFamily f{one_dim_space(scale), {}};
  for (const auto& [k, c] : coeffs) {
    if (c == 0) continue;
    if (k % 2 == 0) throw Error(ErrorKind::Usage, "t^" + std::to_string(k) + " has even order and vanishes");
    if (k < 3) throw Error(ErrorKind::Usage, "t^" + std::to_string(k) + " is not in h_{>=2}");
    f.h.add(t_power(k), c);
  }
  require_classical_mc(f.space, f.h);
  return f;
}

namespace {

void record(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail) {
  rep.checks.push_back({name, pass, detail});
  rep.pass = rep.pass && pass;
}

}  // namespace

SuiteReport verify_kontsevich_suite(const Profile& p, const std::map<std::size_t, Q>& coeffs) {
  SuiteReport rep;
  const OneDimFamily fam = make_family(coeffs);
  const Space& sp = fam.space;

  {
    const std::size_t n_max = std::max<std::size_t>(5, (p.L - 1) / 2);
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const TensorSum d = extend_cobracket(sp, TensorSum::single(Tensor{0, 0, {t_power(2 * n + 1)}}));
      const TensorSum want = TensorSum::single(Tensor{0, 1, {t_power(2 * n - 1)}}, static_cast<long>(2 * n + 1));
      if (!(d == want)) {
        ok = false;
        detail = "Delta(t^" + std::to_string(2 * n + 1) + ") = " + render(sp, d);
        break;
      }
    }
    record(rep, "cobracket sign rule", ok, ok ? "Delta(t^(2n+1)) = (2n+1) v t^(2n-1) for n <= " + std::to_string(n_max) : detail);
  }
  {
    const std::size_t k_max = std::max<std::size_t>(4, p.L / 2);
    bool ok = true;
    for (std::size_t k = 1; k <= k_max; ++k) ok = ok && !normalize_word(sp, t_power(2 * k));
    record(rep, "even powers vanish", ok, "t^(2k) = 0 for k <= " + std::to_string(k_max));
  }
  {
    const std::size_t len = std::max<std::size_t>(9, p.L);
    bool ok = true;
    for (std::size_t a = 1; a <= len && ok; ++a)
      for (std::size_t b = 1; b <= len && ok; ++b) {
        const Hamiltonian br = bracket(sp, t_power(a), t_power(b));
        ok = br.terms().empty() && (a == 1 && b == 1 ? br.scalar() == 1 : br.scalar() == 0);
      }
    record(rep, "bracket is trivial", ok,
           "zero in h_{>=1} on all word pairs up to length " + std::to_string(len) + "; {t,t} = 1 is a constant");
  }
  {
    const auto words = enumerate_basis(sp, WordConstraints{1, p.L, std::nullopt});
    WordSlice cod = enumerate_basis(sp, WordConstraints{1, p.L + fam.h.max_length(), std::nullopt});
    const SparseMatrix m = matrix_of_operator(
        [&](const Word& w) { return hochschild_differential(sp, fam.h, Hamiltonian::word(w)); }, words, cod);
    const HochschildResult hc = hochschild_cohomology(sp, fam.h, WordConstraints{1, p.L, std::nullopt});
    Hamiltonian span;
    bool basis_ok = hc.representatives.size() == (p.L + 1) / 2;
    for (std::size_t i = 0; i < hc.representatives.size() && basis_ok; ++i)
      basis_ok = hc.representatives[i] == Hamiltonian::word(t_power(2 * i + 1));
    record(rep, "Hochschild differential is zero", m.is_zero(), "lengths <= " + std::to_string(p.L));
    record(rep, "Hochschild cohomology = odd powers", basis_ok && hc.odd_vanishes,
           std::to_string(hc.representatives.size()) + " classes, odd part vanishes: " + (hc.odd_vanishes ? "yes" : "no"));
  }
  {
    TensorSum want;
    for (const auto& [k, c] : coeffs)
      if (c != 0) want.add(Tensor{0, 1, {t_power(k - 2)}}, c * static_cast<long>(k));
    const LiftResult lv = lift(sp, fam.h, 1, Variant::LambdaGammaNu, p);
    const bool ok = fam.h.is_zero() ? lv.success
                                    : (!lv.success && lv.failure && lv.failure->level == 1 &&
                                       lv.failure->cocycle == want && !lv.failure->class_vanishes);
    record(rep, "lgv obstruction at level 1", ok,
           lv.failure ? "o_1 = " + render(sp, lv.failure->cocycle) + ", class nonzero" : "no obstruction");
  }
  {
    const LiftResult lg = lift(sp, fam.h, p.P, Variant::LambdaGamma, p);
    const bool ok = lg.success && (lg.residual.is_zero() || min_filtration_order(lg.residual) > p.P);
    record(rep, "lg lifts to order " + std::to_string(p.P), ok,
           ok ? "residual in F_" + std::to_string(p.P + 1) : "failed");
  }
  {
    const TensorSum x = embed(fam.h);
    const ChainSum ch = char_class(sp, Variant::LambdaGamma, x, p);
    const ChainSum d = chain_truncate(chain_max_blocks(chain_delta(sp, Variant::LambdaGamma, ch), p.K - 1), p);
    record(rep, "ch(h) is a cycle", d.is_zero(), "delta_CE ch(h) = " + render(sp, d));
  }
  return rep;
}

GeneralSample general_solution_sample(const std::vector<GeneralTerm>& assignment, const Profile& p) {
  const Space sp = one_dim_space();
  GeneralSample s;
  for (const auto& term : assignment) {
    if (term.a == 0) continue;
    if (term.g > p.G || term.r.empty() || term.r.size() > p.K)
      throw Error(ErrorKind::Usage, "coefficient index outside the truncation");
    std::vector<Word> ws;
    for (auto r : term.r) {
      if (2 * r + 1 > p.L) throw Error(ErrorKind::Usage, "t^" + std::to_string(2 * r + 1) + " exceeds L");
      ws.push_back(t_power(2 * r + 1));
    }
    TensorSum t;
    t.add_normalized(sp, term.g, 0, std::move(ws), term.a);
    validate(Variant::LambdaGamma, t);
    s.element.add(t);
  }
  s.residual = mc_residual(sp, Variant::LambdaGamma, s.element, p);
  return s;
}

std::vector<GeneralTerm> random_assignment(std::uint64_t seed, const Profile& p, std::size_t terms) {
  std::mt19937_64 rng(seed);
  std::vector<GeneralTerm> out;
  const std::size_t r_max = (p.L - 1) / 2;
  while (out.size() < terms) {
    GeneralTerm t;
    t.g = static_cast<unsigned>(rng() % (p.G + 1));
    const std::size_t k = 1 + rng() % p.K;
    for (std::size_t i = 0; i < k; ++i) t.r.push_back(rng() % (r_max + 1));
    t.a = make_q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
    const bool single_t = t.g == 0 && k == 1 && t.r[0] == 0;
    if (t.a != 0 && !single_t) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace qme
