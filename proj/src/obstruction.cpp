#include "qme/obstruction.hpp"

#include "qme/expression.hpp"

#include <set>

namespace qme {

namespace {

struct CellData {
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
  std::vector<SparseVector> representatives;  // over the target
};

template <class T, class Less, class Op>
SparseMatrix build(const Op& op, const BasisSlice<T, Less>& domain, BasisSlice<T, Less>& codomain) {
  std::vector<SparseVector> cols;
  cols.reserve(domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    SparseVector v;
    for (const auto& [key, c] : op(domain[j])) axpy(v, c, SparseVector{{codomain.intern(key), Q(1)}});
    cols.push_back(std::move(v));
  }
  SparseMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, std::move(cols[j]));
  return m;
}

// Cohomology at `target` of a square-zero operator.  The incoming image is
// taken from those combinations of `source` that land inside the target.
template <class T, class Less, class Op>
CellData cell_cohomology(const BasisSlice<T, Less>& target, const BasisSlice<T, Less>& source, const Op& op) {
  CellData out;
  BasisSlice<T, Less> next;
  const SparseMatrix d_out = build(op, target, next);
  const auto kernel = solve_and_kernel(d_out).kernel;
  out.dim_kernel = kernel.size();

  BasisSlice<T, Less> cod = target;
  const SparseMatrix d_in = build(op, source, cod);
  const std::size_t inside = target.size();
  SparseMatrix outside(cod.size() - inside, source.size());
  for (std::size_t j = 0; j < source.size(); ++j)
    for (const auto& [r, c] : d_in.column(j))
      if (r >= inside) outside.add(r - inside, j, c);
  std::vector<SparseVector> admissible;
  if (outside.is_zero()) {
    for (std::size_t j = 0; j < source.size(); ++j) admissible.push_back({{j, Q(1)}});
  } else {
    admissible = solve_and_kernel(outside).kernel;
  }
  IncrementalSpan span;
  for (const auto& a : admissible) {
    SparseVector v;
    for (const auto& [r, c] : d_in.apply(a))
      if (r < inside) v[r] = c;
    if (!d_out.apply(v).empty()) throw Error(ErrorKind::Integrity, "differential does not square to zero");
    span.add(std::move(v));
  }
  out.dim_image = span.dim();
  for (const auto& k : kernel)
    if (span.add(k)) out.representatives.push_back(k);
  if (out.dim_image + out.representatives.size() != out.dim_kernel)
    throw Error(ErrorKind::Integrity, "image is not contained in the kernel");
  return out;
}

std::vector<std::pair<Word, Q>> word_terms(const Hamiltonian& h) {
  std::vector<std::pair<Word, Q>> v;
  if (h.scalar() != 0) v.emplace_back(Word{}, h.scalar());
  for (const auto& [w, c] : h.terms()) v.emplace_back(w, c);
  return v;
}

std::vector<std::pair<Tensor, Q>> tensor_terms(const TensorSum& x) {
  return {x.terms().begin(), x.terms().end()};
}

TensorSum residual_of(const Space& space, Variant v, const TensorSum& x) {
  TensorSum r = differential(space, v, x);
  r.add(lambda_bracket(space, v, x, x), Q(1, 2));
  return r;
}

TensorConstraints order_slice(const Profile& p, Variant v, std::size_t order, int parity) {
  return TensorConstraints{p.L, p.K, p.G, p.N, 1, 1, v, order, parity};
}

struct Solved {
  ObstructionReport report;
  TensorSlice domain;
};

Solved solve_obstruction(const Space& space, const MCState& s, const Profile& p) {
  check_state(space, s);
  const Variant v = s.variant;
  const std::size_t level = s.level() + 1;
  Solved out;
  ObstructionReport& rep = out.report;
  rep.level = level;
  rep.cocycle = filtration_part(state_residual(space, s), level);
  const TensorSum h = embed(s.base);
  rep.is_cocycle = lambda_bracket(space, v, h, rep.cocycle).is_zero();
  if (!rep.is_cocycle)
    throw Error(ErrorKind::Integrity, "obstruction is not a cocycle: " + render(space, rep.cocycle));

  out.domain = enumerate_basis(space, order_slice(p, v, level, kCandidateParity));
  rep.domain_dim = out.domain.size();
  TensorSlice cod;
  for (const auto& [t, c] : rep.cocycle.terms()) cod.intern(t);
  const SparseMatrix m = matrix_into(
      [&](const Tensor& f) { return lambda_bracket(space, v, TensorSum::single(f), h); }, out.domain, cod);
  const SparseVector b = coordinates(rep.cocycle.scaled(-1), cod);
  const SolveResult sol = solve_and_kernel(m, b);
  rep.class_vanishes = sol.solvable;
  if (sol.solvable) rep.solution = from_coordinates(sol.solution, out.domain);
  else rep.certificate = from_coordinates(sol.certificate, cod);
  return out;
}

ExtensionSpace extension_from(const Space& space, const MCState& s, const Profile& p, const Solved& solved) {
  if (!solved.report.class_vanishes)
    throw Error(ErrorKind::Precondition, "obstruction at level " + std::to_string(solved.report.level) +
                                             " does not vanish: " + render(space, solved.report.cocycle));
  ExtensionSpace ext;
  ext.level = solved.report.level;
  ext.particular = solved.report.solution;
  const TensorSum h = embed(s.base);
  const auto source = enumerate_basis(space, order_slice(p, s.variant, ext.level, kGaugeParity));
  const auto cell = cell_cohomology(solved.domain, source, [&](const Tensor& f) {
    return tensor_terms(lambda_bracket(space, s.variant, h, TensorSum::single(f)));
  });
  ext.dim_cocycles = cell.dim_kernel;
  ext.dim_coboundaries = cell.dim_image;
  for (const auto& r : cell.representatives) ext.parameter_basis.push_back(from_coordinates(r, solved.domain));
  return ext;
}

}  // namespace

void require_classical_mc(const Space& space, const Hamiltonian& h) {
  if (h.scalar() != 0 || (!h.terms().empty() && h.min_length() < 2))
    throw Error(ErrorKind::Precondition, "h must lie in h_{>=2}");
  const Hamiltonian hh = bracket(space, h, h);
  if (!hh.is_zero()) throw Error(ErrorKind::Precondition, "{h,h} = " + render(space, hh) + " is not zero");
}

Hamiltonian hochschild_differential(const Space& space, const Hamiltonian& h, const Hamiltonian& f,
                                    std::size_t max_len) {
  require_classical_mc(space, h);
  return bracket(space, h, f, max_len);
}

HochschildResult hochschild_cohomology(const Space& space, const Hamiltonian& h, const WordConstraints& slice) {
  require_classical_mc(space, h);
  std::set<std::size_t> lengths;
  for (const auto& [w, c] : h.terms()) lengths.insert(w.size());
  const bool homogeneous = lengths.size() <= 1;
  const long shift = lengths.empty() ? 0 : static_cast<long>(*lengths.begin()) - 2;

  const auto all = enumerate_basis(space, WordConstraints{slice.min_len, slice.max_len, std::nullopt});
  auto cell_of = [&](std::size_t len, int parity) {
    std::vector<Word> ws;
    for (const auto& w : all.elements())
      if ((len == 0 || w.size() == len) && factor_parity(space, w) == parity) ws.push_back(w);
    return WordSlice(std::move(ws));
  };
  auto op = [&](const Word& w) { return word_terms(bracket(space, h, Hamiltonian::word(w))); };

  HochschildResult res;
  std::vector<std::size_t> cell_lengths;
  if (homogeneous)
    for (std::size_t len = std::max<std::size_t>(slice.min_len, 1); len <= slice.max_len; ++len)
      cell_lengths.push_back(len);
  else
    cell_lengths.push_back(0);
  for (const std::size_t len : cell_lengths) {
    for (int parity = 0; parity < 2; ++parity) {
      if (slice.parity && *slice.parity != parity) continue;
      const WordSlice target = cell_of(len, parity);
      const long src_len = static_cast<long>(len) - shift;
      const WordSlice source =
          len == 0 ? cell_of(0, parity ^ 1)
                   : (src_len >= 1 ? cell_of(static_cast<std::size_t>(src_len), parity ^ 1) : WordSlice{});
      const CellData cd = cell_cohomology(target, source, op);
      CohomologyCell cell{len, parity, cd.dim_kernel, cd.dim_image, cd.representatives.size()};
      res.cells.push_back(cell);
      for (const auto& r : cd.representatives) {
        res.representatives.push_back(from_coordinates(r, target));
        res.representative_parity.push_back(parity);
      }
      (parity ? res.dim_odd : res.dim_even) += cell.dim_cohomology;
    }
  }
  res.odd_vanishes = res.dim_odd == 0;
  return res;
}

TensorSum MCState::total() const {
  TensorSum x;
  for (const auto& c : components) x.add(c);
  return x;
}

MCState initial_state(const Space& space, Variant v, const Hamiltonian& h) {
  if (v == Variant::HGe2) throw Error(ErrorKind::Usage, "lifting needs a Lambda variant (lg or lgv)");
  require_classical_mc(space, h);
  MCState s{v, h, {embed(h)}};
  check_state(space, s);
  return s;
}

TensorSum state_residual(const Space& space, const MCState& s) { return residual_of(space, s.variant, s.total()); }

void check_state(const Space& space, const MCState& s) {
  if (s.components.empty()) throw Error(ErrorKind::Usage, "MC state without components");
  if (!(s.components.front() == embed(s.base))) throw Error(ErrorKind::Usage, "h_0 differs from the base");
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    validate(s.variant, s.components[i]);
    require_parity(space, s.components[i], kCandidateParity, "state component");
    for (const auto& [t, c] : s.components[i].terms())
      if (filtration_order(t) != i)
        throw Error(ErrorKind::Usage, "component h_" + std::to_string(i) + " has a term of order " +
                                          std::to_string(filtration_order(t)));
  }
  const TensorSum r = state_residual(space, s);
  if (!r.is_zero() && min_filtration_order(r) <= s.level())
    throw Error(ErrorKind::Usage, "residual of the state is not in F_" + std::to_string(s.level() + 1));
}

ObstructionReport obstruction_class(const Space& space, const MCState& s, const Profile& p) {
  return solve_obstruction(space, s, p).report;
}

ExtensionSpace extension_space(const Space& space, const MCState& s, const Profile& p) {
  return extension_from(space, s, p, solve_obstruction(space, s, p));
}

StepResult extend_step(const Space& space, const MCState& s, const Profile& p, const std::optional<std::vector<Q>>& choice) {
  const Solved solved = solve_obstruction(space, s, p);
  StepResult out{false, s, solved.report};
  if (!solved.report.class_vanishes) return out;
  const ExtensionSpace ext = extension_from(space, s, p, solved);
  TensorSum next = ext.particular;
  if (choice) {
    if (choice->size() != ext.parameter_basis.size())
      throw Error(ErrorKind::Usage, "choice vector has " + std::to_string(choice->size()) + " entries, expected " +
                                        std::to_string(ext.parameter_basis.size()));
    for (std::size_t i = 0; i < choice->size(); ++i) next.add(ext.parameter_basis[i], (*choice)[i]);
  }
  out.extended = true;
  out.state.components.push_back(std::move(next));
  return out;
}

LiftResult lift(const Space& space, const Hamiltonian& h, std::size_t target_order, Variant v, const Profile& p) {
  LiftResult out;
  out.state = initial_state(space, v, h);
  while (out.state.level() < target_order) {
    StepResult step = extend_step(space, out.state, p);
    if (!step.extended) {
      out.failure = std::move(step.report);
      out.residual = state_residual(space, out.state);
      return out;
    }
    out.state = std::move(step.state);
  }
  out.success = true;
  out.residual = state_residual(space, out.state);
  return out;
}

QuantumConstraint quantum_constraint_check(const Space& space, const Hamiltonian& h, const Profile& p) {
  QuantumConstraint q;
  q.in_k = cobracket(space, h).is_zero();
  q.deficit = extend_cobracket(space, embed(h), true);
  if (!q.in_k || h.scalar() != 0 || (!h.terms().empty() && h.min_length() < 2)) return q;
  if (!bracket(space, h, h).is_zero()) return q;
  const TensorSum x = embed(h);
  for (const auto& [t, c] : x.terms())
    if (tensor_parity(space, t) != kCandidateParity) return q;
  q.mc_certified = mc_residual(space, Variant::LambdaGammaNu, x, p).is_zero();
  return q;
}

std::size_t symmetric_power_dim(std::size_t e, std::size_t o, std::size_t k, int q) {
  mpz_class total = 0;
  for (std::size_t j = static_cast<std::size_t>(q & 1); j <= std::min(k, o); j += 2) {
    const std::size_t r = k - j;
    mpz_class multisets = 0;
    if (e == 0) multisets = r == 0 ? 1 : 0;
    else mpz_bin_uiui(multisets.get_mpz_t(), e + r - 1, r);
    mpz_class subsets;
    mpz_bin_uiui(subsets.get_mpz_t(), o, j);
    total += multisets * subsets;
  }
  return total.get_ui();
}

KunnethReport kunneth_check(const Space& space, const Hamiltonian& h, const Profile& p) {
  require_classical_mc(space, h);
  const auto words = enumerate_basis(space, WordConstraints{1, p.L, std::nullopt});
  for (const auto& w : words.elements()) {
    const Hamiltonian out = bracket(space, h, Hamiltonian::word(w));
    if (out.scalar() != 0 || (!out.terms().empty() && out.max_length() > p.L))
      throw Error(ErrorKind::Usage, "ad(h) does not preserve the word-length slice; use a length-2 or central h");
  }
  KunnethReport rep;
  const HochschildResult hc = hochschild_cohomology(space, h, WordConstraints{1, p.L, std::nullopt});
  rep.hc_even = hc.dim_even;
  rep.hc_odd = hc.dim_odd;

  const TensorSum hx = embed(h);
  auto op = [&](const Tensor& f) {
    return tensor_terms(lambda_bracket(space, Variant::LambdaGammaNu, hx, TensorSum::single(f)));
  };
  const int nu = space.nu_parity();
  const unsigned n_max = nu ? std::min(p.N, 1u) : p.N;
  for (std::size_t order = 0; order <= p.P; ++order) {
    for (int parity = 0; parity < 2; ++parity) {
      auto slice = [&](int q) {
        return enumerate_basis(space, TensorConstraints{p.L, p.K, p.G, p.N, 1, 1, std::nullopt, order, q});
      };
      const TensorSlice target = slice(parity);
      const CellData cd = cell_cohomology(target, slice(parity ^ 1), op);
      KunnethCell cell{order, parity, cd.representatives.size(), 0};
      for (unsigned g = 0; g <= p.G; ++g)
        for (unsigned n = 0; n <= n_max; ++n)
          for (std::size_t k = 1; k <= p.K; ++k)
            if (2 * g + n + k - 1 == order)
              cell.predicted += symmetric_power_dim(hc.dim_even, hc.dim_odd, k, parity ^ static_cast<int>((n * nu) & 1));
      if (cell.direct != cell.predicted) rep.agree = false;
      rep.cells.push_back(cell);
    }
  }
  return rep;
}

}  // namespace qme
