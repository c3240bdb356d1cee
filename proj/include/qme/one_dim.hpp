#pragma once

#include "qme/obstruction.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qme {

// One odd generator t with <t,t> = scale.
Space one_dim_space(const Q& scale = 1);
Word t_power(std::size_t k);

struct OneDimFamily {
  Space space;
  Hamiltonian h;
};

// h = sum c_k t^k over the supplied powers; even powers or t^1 are rejected.
OneDimFamily make_family(const std::map<std::size_t, Q>& coeffs, const Q& scale = 1);

struct SuiteCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  bool pass = true;
  std::vector<SuiteCheck> checks;
};

// The golden battery for h (default t^3) under the profile.
SuiteReport verify_kontsevich_suite(const Profile& p, const std::map<std::size_t, Q>& coeffs = {{3, 1}});

// a * gamma^g * t^{2 r_1 + 1} ... t^{2 r_k + 1}
struct GeneralTerm {
  unsigned g = 0;
  std::vector<std::size_t> r;
  Q a;
};

struct GeneralSample {
  TensorSum element;
  TensorSum residual;  // in Lambda_gamma
};

GeneralSample general_solution_sample(const std::vector<GeneralTerm>& assignment, const Profile& p);
std::vector<GeneralTerm> random_assignment(std::uint64_t seed, const Profile& p, std::size_t terms = 4);

}  // namespace qme
