#include "doctest.h"
#include "oracles/oracles.hpp"
#include "support.hpp"

#include "qme/obstruction.hpp"

#include <functional>

using namespace qme;
using testing::el;

namespace {

Q dot(const TensorSum& a, const TensorSum& b) {
  Q s = 0;
  for (const auto& [t, c] : a.terms()) {
    auto it = b.terms().find(t);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

std::vector<Word> classical_mc_words(const Space& s, std::size_t len) {
  std::vector<Word> out;
  for (const auto& w : enumerate_basis(s, WordConstraints{len, len, kCandidateParity}).elements())
    if (bracket(s, Hamiltonian::word(w), Hamiltonian::word(w)).is_zero()) out.push_back(w);
  return out;
}

// Total cohomology of ad(h) on words of length n, from oracle brackets and
// dense ranks.  ad(h) preserves length for length-2 h.
std::size_t oracle_cohomology(const Space& s, const Word& h, std::size_t n) {
  const auto words = enumerate_basis(s, WordConstraints{n, n, std::nullopt}).elements();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  oracle::Dense m(words.size(), std::vector<Q>(words.size(), Q(0)));
  for (std::size_t j = 0; j < words.size(); ++j)
    for (const auto& [w, c] : oracle::bracket(s, h, words[j])) m[index.at(w)][j] += c;
  const std::size_t rank = oracle::dense_solve(m).rank;
  return words.size() - 2 * rank;
}

}  // namespace

TEST_CASE("Hochschild cohomology in one dimension is spanned by odd powers") {
  const Space s = testing::one();
  const auto r = hochschild_cohomology(s, Hamiltonian::word(t_power(3)), WordConstraints{1, 9, std::nullopt});
  CHECK(r.dim_even + r.dim_odd == 5);
  for (const auto& rep : r.representatives) {
    REQUIRE(rep.terms().size() == 1);
    CHECK(rep.terms().begin()->first.size() % 2 == 1);
  }
  CHECK(hochschild_differential(s, Hamiltonian::word(t_power(3)), Hamiltonian::word(t_power(5))).is_zero());
}

TEST_CASE("h = 0 has the whole slice as cohomology") {
  for (const auto& s : {testing::odd2(), testing::even2()}) {
    const auto r = hochschild_cohomology(s, Hamiltonian{}, WordConstraints{1, 4, std::nullopt});
    CHECK(r.dim_even + r.dim_odd == enumerate_basis(s, WordConstraints{1, 4, std::nullopt}).size());
  }
}

TEST_CASE("Hochschild cohomology agrees with the oracle for length-2 MC words") {
  for (const auto& s : {testing::odd2(), testing::even2(), testing::even2ev()}) {
    for (const auto& h : classical_mc_words(s, 2)) {
      const auto r = hochschild_cohomology(s, Hamiltonian::word(h), WordConstraints{1, 5, std::nullopt});
      for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t ours = 0;
        for (const auto& c : r.cells)
          if (c.length == n) ours += c.dim_cohomology;
        CHECK(ours == oracle_cohomology(s, h, n));
      }
    }
  }
}

TEST_CASE("obstruction certificate for t^3 in Lambda_{gamma,nu}") {
  const Space s = testing::one();
  const Profile p{7, 3, 2, 2, 6};
  const MCState st = initial_state(s, Variant::LambdaGammaNu, Hamiltonian::word(t_power(3)));
  const ObstructionReport r = obstruction_class(s, st, p);
  CHECK(r.level == 1);
  CHECK(r.is_cocycle);
  CHECK_FALSE(r.class_vanishes);
  CHECK(r.cocycle == el(s, "3 * v^1 * w[t]"));
  CHECK(dot(r.certificate, r.cocycle) != 0);
  // the certificate annihilates [f, h] for every candidate f of order 1
  const auto domain = enumerate_basis(
      s, TensorConstraints{p.L, p.K, p.G, p.N, 1, 1, Variant::LambdaGammaNu, std::size_t{1}, kCandidateParity});
  CHECK(domain.size() == r.domain_dim);
  const TensorSum h = embed(Hamiltonian::word(t_power(3)));
  for (const auto& f : domain.elements())
    CHECK(dot(r.certificate, lambda_bracket(s, Variant::LambdaGammaNu, TensorSum::single(f), h)) == 0);
}

TEST_CASE("obstruction solutions agree with the dense oracle") {
  const Space s = testing::odd2();
  const Profile p{4, 3, 2, 2, 3};
  const Hamiltonian h = Hamiltonian::word(Word{0, 0});
  MCState st = initial_state(s, Variant::LambdaGammaNu, h);
  for (int level = 0; level < 3; ++level) {
    const ObstructionReport r = obstruction_class(s, st, p);
    const TensorSum hx = embed(h);
    if (r.class_vanishes) {
      const TensorSum image = lambda_bracket(s, Variant::LambdaGammaNu, r.solution, hx);
      CHECK((image + r.cocycle).is_zero());
    } else {
      CHECK(dot(r.certificate, r.cocycle) != 0);
    }
    const StepResult step = extend_step(s, st, p);
    if (!step.extended) break;
    st = step.state;
  }
}

TEST_CASE("lifting in one dimension") {
  const Space s = testing::one();
  const Profile p{9, 3, 3, 2, 6};
  const LiftResult ok = lift(s, Hamiltonian::word(t_power(3)), 6, Variant::LambdaGamma, p);
  CHECK(ok.success);
  CHECK(truncate(ok.residual, p).is_zero());
  CHECK(ok.state.level() == 6);

  const LiftResult bad = lift(s, Hamiltonian::word(t_power(3)), 6, Variant::LambdaGammaNu, p);
  CHECK_FALSE(bad.success);
  REQUIRE(bad.failure);
  CHECK(bad.failure->level == 1);
  CHECK(render(s, bad.failure->cocycle) == "3 * v^1 * w[t]");

  CHECK_THROWS_AS(initial_state(s, Variant::HGe2, Hamiltonian::word(t_power(3))), Error);
}

TEST_CASE("odd 2-d lift in Lambda_{gamma,nu}") {
  const Space s = testing::odd2();
  const Profile p{4, 3, 2, 2, 3};
  const LiftResult r = lift(s, Hamiltonian::word(Word{0, 0}), 3, Variant::LambdaGammaNu, p);
  CHECK(r.success);
  CHECK(truncate(r.residual, p).is_zero());
  check_state(s, r.state);
}

TEST_CASE("non-MC Hamiltonians are rejected") {
  const Space s = testing::odd2();
  const Hamiltonian h = Hamiltonian::word(Word{0, 1}) + Hamiltonian::word(Word{0, 0});
  if (!bracket(s, h, h).is_zero()) {
    try {
      require_classical_mc(s, h);
      FAIL("expected a precondition error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Precondition);
    }
  }
}

TEST_CASE("extensions form a torsor over the cocycles") {
  const Space s = testing::odd2();
  const Profile p{4, 2, 1, 1, 2};
  const MCState st = initial_state(s, Variant::LambdaGammaNu, Hamiltonian{});
  const ExtensionSpace e = extension_space(s, st, p);
  CHECK(e.particular.is_zero());
  CHECK(e.dim_coboundaries == 0);
  CHECK(e.parameter_basis.size() == e.dim_cocycles);
  CHECK(e.parameter_basis.size() ==
        enumerate_basis(s, TensorConstraints{p.L, p.K, p.G, p.N, 1, 1, Variant::LambdaGammaNu, std::size_t{1},
                                             kCandidateParity})
            .size());

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Q> a, b;
    for (std::size_t i = 0; i < e.parameter_basis.size(); ++i) {
      a.push_back(testing::random_q(rng));
      b.push_back(testing::random_q(rng));
    }
    const StepResult ea = extend_step(s, st, p, a);
    const StepResult eb = extend_step(s, st, p, b);
    REQUIRE(ea.extended);
    REQUIRE(eb.extended);
    check_state(s, ea.state);
    check_state(s, eb.state);
  }
  CHECK_THROWS_AS(extend_step(s, st, p, std::vector<Q>(e.parameter_basis.size() + 1, Q(1))), Error);
}

TEST_CASE("difference of two extensions is a cocycle") {
  const Space s = testing::odd2();
  const Profile p{4, 3, 2, 2, 3};
  const Hamiltonian h = Hamiltonian::word(Word{0, 0});
  const LiftResult base = lift(s, h, 1, Variant::LambdaGammaNu, p);
  REQUIRE(base.success);
  const ExtensionSpace e = extension_space(s, base.state, p);
  const TensorSum hx = embed(h);
  for (const auto& f : e.parameter_basis) {
    CHECK(lambda_bracket(s, Variant::LambdaGammaNu, f, hx).is_zero());
    CHECK(min_filtration_order(f) == 2);
  }
  if (!e.parameter_basis.empty()) {
    std::vector<Q> choice(e.parameter_basis.size(), Q(0));
    choice.front() = 1;
    const StepResult a = extend_step(s, base.state, p);
    const StepResult b = extend_step(s, base.state, p, choice);
    const TensorSum diff = b.state.components.back() - a.state.components.back();
    CHECK(lambda_bracket(s, Variant::LambdaGammaNu, diff, hx).is_zero());
  }
}

TEST_CASE("quantum constraint") {
  const Space s = testing::one();
  const Profile p{7, 3, 2, 2, 6};
  const QuantumConstraint q = quantum_constraint_check(s, Hamiltonian::word(t_power(3)), p);
  CHECK_FALSE(q.in_k);
  CHECK(q.deficit == el(s, "3 * v^1 * w[t]"));
  CHECK_FALSE(q.mc_certified);

  const Space o = testing::odd2();
  const QuantumConstraint z = quantum_constraint_check(o, Hamiltonian{}, p);
  CHECK(z.in_k);
  CHECK(z.deficit.is_zero());
}

TEST_CASE("Kunneth check") {
  CHECK(kunneth_check(testing::one(), Hamiltonian::word(t_power(3)), Profile{5, 2, 1, 1, 4}).agree);
  const KunnethReport xx = kunneth_check(testing::odd2(), Hamiltonian::word(Word{0, 0}), Profile{5, 2, 1, 1, 4});
  CHECK(xx.agree);
  const KunnethReport zero = kunneth_check(testing::odd2(), Hamiltonian{}, Profile{4, 2, 1, 1, 3});
  CHECK(zero.agree);
  for (const auto& c : zero.cells) CHECK(c.direct > 0);
  // {xx, xxxx} = 0, but ad(xxxx) raises word length
  const Hamiltonian mixed = Hamiltonian::word(Word{0, 0}) + Hamiltonian::word(Word{0, 0, 0, 0});
  CHECK_NOTHROW(require_classical_mc(testing::odd2(), mixed));
  CHECK_THROWS_AS(kunneth_check(testing::odd2(), mixed, Profile{5, 2, 1, 1, 4}), Error);
}

TEST_CASE("symmetric power dimensions by brute force") {
  // count monomials generator by generator: even ones with any exponent,
  // odd ones with exponent 0 or 1
  const std::function<void(std::size_t, std::size_t, std::size_t, std::size_t, int, std::size_t*)> walk =
      [&](std::size_t e, std::size_t o, std::size_t left, std::size_t gen, int parity, std::size_t* count) {
        if (gen == e + o) {
          if (left == 0) ++count[parity];
          return;
        }
        const std::size_t top = gen < e ? left : std::min<std::size_t>(left, 1);
        for (std::size_t x = 0; x <= top; ++x)
          walk(e, o, left - x, gen + 1, gen < e ? parity : (parity + static_cast<int>(x)) % 2, count);
      };
  for (std::size_t e = 0; e <= 3; ++e)
    for (std::size_t o = 0; o <= 3; ++o)
      for (std::size_t k = 0; k <= 4; ++k) {
        std::size_t count[2] = {0, 0};
        walk(e, o, k, 0, 0, count);
        CHECK(symmetric_power_dim(e, o, k, 0) == count[0]);
        CHECK(symmetric_power_dim(e, o, k, 1) == count[1]);
      }
}
