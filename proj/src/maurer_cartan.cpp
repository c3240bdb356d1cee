#include "qme/maurer_cartan.hpp"

#include "qme/basis.hpp"
#include "qme/expression.hpp"

#include <random>

namespace qme {

void require_parity(const Space& space, const TensorSum& x, int parity, const std::string& what) {
  for (const auto& [t, c] : x.terms())
    if (tensor_parity(space, t) != parity)
      throw Error(ErrorKind::Usage, what + " must be " + (parity ? "odd" : "even") + " (shifted grading); term " +
                                        render(space, TensorSum::single(t, c)) + " is not");
}

TensorSum mc_residual(const Space& space, Variant v, const TensorSum& x, const Profile& p) {
  validate(v, x);
  require_parity(space, x, kCandidateParity, "MC candidate");
  TensorSum r = differential(space, v, x);
  r.add(lambda_bracket(space, v, x, x), Q(1, 2));
  return truncate(r, p);
}

TensorSum gauge_act(const Space& space, Variant v, const TensorSum& y, const TensorSum& x, const Profile& p) {
  validate(v, x);
  validate(v, y);
  require_parity(space, x, kCandidateParity, "MC candidate");
  require_parity(space, y, kGaugeParity, "gauge parameter");
  constexpr std::size_t kCap = 64;
  TensorSum out = truncate(x, p);
  TensorSum term = truncate(differential(space, v, y) + symmetric_bracket(space, v, y, x), p);
  Q factorial = 1;
  for (std::size_t k = 1; !term.is_zero(); ++k) {
    if (k > kCap) throw Error(ErrorKind::Range, "gauge series did not terminate within the truncation");
    factorial *= static_cast<long>(k);
    out.add(term, 1 / factorial);
    term = truncate(symmetric_bracket(space, v, y, term), p);
  }
  return out;
}

ChainSum char_class(const Space& space, Variant v, const TensorSum& x, const Profile& p) {
  const TensorSum r = mc_residual(space, v, x, p);
  if (!r.is_zero()) throw Error(ErrorKind::Precondition, "not a Maurer-Cartan element: residual " + render(space, r));
  return chain_exp(space, x, p);
}

ChainSum ch_defect(const Space& space, Variant v, const TensorSum& x, const Profile& p) {
  TensorSum r = differential(space, v, x);
  r.add(lambda_bracket(space, v, x, x), Q(1, 2));
  const ChainSum e = chain_exp(space, x, p);
  ChainSum out = chain_delta(space, v, e);
  out.add(chain_product(space, chain_from_lambda(r), e), -1);
  // exp is cut at K blocks, so delta(exp) is only determined below that.
  return chain_truncate(chain_max_blocks(out, p.K - 1), p);
}

HomotopyReport homotopy_check(const Space& space, Variant v, const TensorSum& y, const TensorSum& x,
                              const Profile& p, std::size_t samples, std::uint64_t seed) {
  require_parity(space, y, kGaugeParity, "gauge parameter");
  HomotopyReport rep;
  const auto basis = enumerate_basis(space, TensorConstraints{std::min<std::size_t>(p.L, 3), 2, std::min(p.G, 1u),
                                                             std::min(p.N, 1u), 1, 1, v, std::nullopt, std::nullopt});
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples && !basis.empty(); ++s) {
    ChainSum c;
    const std::size_t terms = 1 + rng() % 2;
    for (std::size_t i = 0; i < terms; ++i) {
      ChainSum part = ChainSum::one();
      const std::size_t blocks = rng() % 3;
      for (std::size_t b = 0; b < blocks; ++b)
        part = chain_product(space, part, chain_from_lambda(TensorSum::single(basis[rng() % basis.size()])));
      c.add(part, make_q(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2)));
    }
    const ChainSum lhs = gamma_y(space, v, y, c);
    ChainSum rhs = chain_delta(space, v, s_y(space, y, c));
    rhs.add(s_y(space, y, chain_delta(space, v, c)));
    ++rep.chains_checked;
    if (!(lhs == rhs) && rep.homotopy_pass) {
      rep.homotopy_pass = false;
      rep.witness = "gamma_y differs from delta s_y + s_y delta on " + render(space, c);
    }
  }

  const TensorSum gx = gauge_act(space, v, y, x, p);
  const TensorSum r0 = mc_residual(space, v, x, p);
  if (r0.is_zero() && !mc_residual(space, v, gx, p).is_zero()) {
    rep.invariance_pass = false;
    if (rep.witness.empty()) rep.witness = "gauge transform of an MC element is not MC: " + render(space, gx);
  }
  if (r0.is_zero()) {
    const ChainSum lhs = chain_truncate(exp_gamma_y(space, v, y, chain_exp(space, x, p), p), p);
    const ChainSum rhs = chain_truncate(chain_exp(space, gx, p), p);
    if (!(lhs == rhs)) {
      rep.exp_pass = false;
      if (rep.witness.empty()) rep.witness = "exp(gamma_y) ch(x) - ch(exp(y).x) = " + render(space, [&] {
        ChainSum d = lhs;
        d.add(rhs, -1);
        return d;
      }());
    }
  }
  return rep;
}

}  // namespace qme
