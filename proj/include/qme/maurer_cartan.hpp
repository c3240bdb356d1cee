#pragma once

#include "qme/chain.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qme {

// Candidates are even and gauge parameters odd in the shifted grading.  For
// even forms this is odd word parity.
constexpr int kCandidateParity = 0;
constexpr int kGaugeParity = 1;

// Throws a usage error unless every term of x has the given shifted parity.
void require_parity(const Space& space, const TensorSum& x, int parity, const std::string& what);

// d x + 1/2 [x,x], truncated by the profile.  On h_{>=2} this is 1/2 {x,x}.
TensorSum mc_residual(const Space& space, Variant v, const TensorSum& x, const Profile& p);

// exp(y).x = x + sum_n (ad<<y>>)^n / (n+1)! (dy + <<y,x>>)
TensorSum gauge_act(const Space& space, Variant v, const TensorSum& y, const TensorSum& x, const Profile& p);

// exp(x) in the CE complex of the variant; x must be MC within truncation.
ChainSum char_class(const Space& space, Variant v, const TensorSum& x, const Profile& p);

struct HomotopyReport {
  bool homotopy_pass = true;  // gamma_y = delta s_y + s_y delta
  bool exp_pass = true;       // exp(gamma_y) ch(x) = ch(exp(y).x)
  bool invariance_pass = true;
  std::size_t chains_checked = 0;
  std::string witness;
  bool pass() const { return homotopy_pass && exp_pass && invariance_pass; }
};

// Verifies the homotopy identities for y acting on x.  Identity (a) runs on
// `samples` seeded random chains built from the variant's basis.
HomotopyReport homotopy_check(const Space& space, Variant v, const TensorSum& y, const TensorSum& x,
                              const Profile& p, std::size_t samples = 8, std::uint64_t seed = 1);

// delta_CE(exp x) - (dx + 1/2[x,x]) exp x, truncated; zero for every x.
ChainSum ch_defect(const Space& space, Variant v, const TensorSum& x, const Profile& p);

}  // namespace qme
