#pragma once

#include "qme/basis.hpp"
#include "qme/maurer_cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qme {

// Throws a precondition error unless h lies in h_{>=2} and {h,h} = 0.
void require_classical_mc(const Space& space, const Hamiltonian& h);

// ad(h) f = {h, f}, words longer than max_len dropped.
Hamiltonian hochschild_differential(const Space& space, const Hamiltonian& h, const Hamiltonian& f,
                                    std::size_t max_len = kUnbounded);

struct CohomologyCell {
  std::size_t length = 0;  // 0 when cells are per parity only
  int parity = 0;          // shifted
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
  std::size_t dim_cohomology = 0;
};

struct HochschildResult {
  std::vector<CohomologyCell> cells;
  std::vector<Hamiltonian> representatives;
  std::vector<int> representative_parity;
  std::size_t dim_even = 0;
  std::size_t dim_odd = 0;
  // Cohomology in the obstruction-carrying (odd) parity vanishes on the slice.
  bool odd_vanishes = true;
};

// Cohomology of ad(h) on words of length in [min_len, max_len].  Cells are
// per (length, parity) when h is homogeneous in length, per parity otherwise.
HochschildResult hochschild_cohomology(const Space& space, const Hamiltonian& h, const WordConstraints& slice);

// x_n = h_0 + ... + h_n with h_i of filtration order i and h_0 = h.
struct MCState {
  Variant variant = Variant::LambdaGamma;
  Hamiltonian base;
  std::vector<TensorSum> components;

  std::size_t level() const { return components.size() - 1; }
  TensorSum total() const;
};

// Level-0 state for h; h must be classical MC.
MCState initial_state(const Space& space, Variant v, const Hamiltonian& h);
// d x + 1/2 [x,x] for x = s.total(), exact.
TensorSum state_residual(const Space& space, const MCState& s);
// Throws a usage error unless the residual lies in F_{n+1} and each h_i is
// even of order i.
void check_state(const Space& space, const MCState& s);

struct ObstructionReport {
  std::size_t level = 0;  // n+1
  TensorSum cocycle;      // o_{n+1}
  bool is_cocycle = true;
  bool class_vanishes = true;
  TensorSum solution;  // h_{n+1} with [h_{n+1}, h] = -o_{n+1}
  // Functional on the codomain: certificate.dot(o) != 0 and it kills the
  // image of ad(h) on the order-(n+1) candidate slice.
  TensorSum certificate;
  std::size_t domain_dim = 0;
};

ObstructionReport obstruction_class(const Space& space, const MCState& s, const Profile& p);

struct ExtensionSpace {
  std::size_t level = 0;
  TensorSum particular;
  std::vector<TensorSum> parameter_basis;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
};

// Throws a precondition error when the obstruction does not vanish.
ExtensionSpace extension_space(const Space& space, const MCState& s, const Profile& p);

struct StepResult {
  bool extended = false;
  MCState state;
  ObstructionReport report;
};

// Extends by particular + sum choice_i * parameter_i (zero choice by default).
StepResult extend_step(const Space& space, const MCState& s, const Profile& p,
                       const std::optional<std::vector<Q>>& choice = std::nullopt);

struct LiftResult {
  bool success = false;
  MCState state;
  std::optional<ObstructionReport> failure;
  TensorSum residual;  // of the final state
};

LiftResult lift(const Space& space, const Hamiltonian& h, std::size_t target_order, Variant v, const Profile& p);

struct QuantumConstraint {
  bool in_k = false;
  TensorSum deficit;  // Delta(h), empty legs as nu
  bool mc_certified = false;
};

QuantumConstraint quantum_constraint_check(const Space& space, const Hamiltonian& h, const Profile& p);

struct KunnethCell {
  std::size_t order = 0;
  int parity = 0;
  std::size_t direct = 0;
  std::size_t predicted = 0;
};

struct KunnethReport {
  bool agree = true;
  std::size_t hc_even = 0, hc_odd = 0;
  std::vector<KunnethCell> cells;
};

// Dimensions of H(S^{>=1}(h_{>=1})[gamma,nu], ad h) per (order, parity)
// against the symmetric-power prediction from hochschild_cohomology.
KunnethReport kunneth_check(const Space& space, const Hamiltonian& h, const Profile& p);

// Dimension of the parity-q part of S^k(E + O) with dim E = e, dim O = o.
std::size_t symmetric_power_dim(std::size_t e, std::size_t o, std::size_t k, int q);

}  // namespace qme
