#pragma once

#include "qme/bialgebra.hpp"
#include "qme/tensor.hpp"

#include <map>
#include <string>
#include <utility>

namespace qme {

enum class Variant { HGe2, LambdaGamma, LambdaGammaNu };

std::string variant_name(Variant v);  // hq2, lg, lgv
Variant parse_variant(const std::string& name);

struct Profile {
  std::size_t L = 5;  // max word length (bases)
  std::size_t K = 2;  // max factor count (bases, chain blocks)
  unsigned G = 2;     // max gamma exponent
  unsigned N = 2;     // max nu exponent
  unsigned P = 6;     // max filtration order retained
};

Profile parse_profile(const std::string& text);  // "L,K,G,N,P"
std::string render_profile(const Profile& p);

bool is_member(Variant v, const Tensor& t);
// Throws a usage error naming the first tensor outside the variant.
void validate(Variant v, const TensorSum& x);

// Drops terms beyond the monotone bounds G, N, P.
TensorSum truncate(const TensorSum& x, const Profile& p);
TensorSum filtration_part(const TensorSum& x, std::size_t order);
std::size_t min_filtration_order(const TensorSum& x);  // of a nonzero element
TensorSum drop_nu(const TensorSum& x);

// Pairwise-bracket part of the CE differential (without the factor gamma).
TensorSum ce_delta(const Space& space, const TensorSum& x, bool keep_scalars = false);
// Leibniz extension of the cobracket; empty legs become nu.
TensorSum extend_cobracket(const Space& space, const TensorSum& x, bool keep_scalars = false);
// d = gamma.delta + Delta, its nu-free part on Lambda_gamma, zero on h_{>=2}.
TensorSum differential(const Space& space, Variant v, const TensorSum& x);
// Leibniz bi-extension of the word bracket.
TensorSum lambda_bracket(const Space& space, Variant v, const TensorSum& x, const TensorSum& y,
                         bool keep_scalars = false);
// The graded-symmetric normalization <<x,y>> = (-1)^{|x|}[x,y] used by the
// CE complex of Lambda, the gauge action and gamma_y.
TensorSum symmetric_bracket(const Space& space, Variant v, const TensorSum& x, const TensorSum& y);

TensorSum project(const TensorSum& x, Variant from, Variant to);

using TensorPair = std::pair<Tensor, Tensor>;
struct TensorPairLess {
  bool operator()(const TensorPair& a, const TensorPair& b) const {
    TensorLess l;
    if (!(a.first == b.first)) return l(a.first, b.first);
    return l(a.second, b.second);
  }
};
using PairSum = std::map<TensorPair, Q, TensorPairLess>;

// Unshuffle coproduct on S(h); gamma and nu stay on the left leg.
PairSum coproduct(const Space& space, const TensorSum& x);
// (delta (x) 1 + 1 (x) delta) applied to a pair combination.
PairSum delta_on_pairs(const Space& space, const PairSum& x);
void add_pair(PairSum& s, const TensorPair& p, const Q& c);

}  // namespace qme
