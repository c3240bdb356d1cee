#pragma once

#include "qme/basis.hpp"
#include "qme/expression.hpp"
#include "qme/one_dim.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using qme::Q;

// x even, xi odd, odd symplectic form.
inline qme::Space odd2() { return qme::Space({{"x", 0}, {"xi", 1}}, {{0, 1}, {-1, 0}}, 1); }
// two odd letters, identity (even) form.
inline qme::Space even2() { return qme::Space({{"a", 1}, {"b", 1}}, {{1, 0}, {0, 1}}, 0); }
// two even letters, even symplectic form.
inline qme::Space even2ev() { return qme::Space({{"p", 0}, {"q", 0}}, {{0, 1}, {-1, 0}}, 0); }
inline qme::Space one() { return qme::one_dim_space(); }

inline std::vector<qme::Space> all_spaces() { return {odd2(), even2(), even2ev(), one()}; }

inline qme::TensorSum el(const qme::Space& s, const std::string& text) { return qme::parse_expression(s, text); }

inline Q random_q(std::mt19937_64& rng) {
  return qme::make_q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
}

// Random combination of basis tensors of one parity.
inline qme::TensorSum random_element(const qme::TensorSlice& basis, std::mt19937_64& rng, const qme::Space& s,
                                     int parity, std::size_t terms = 3) {
  std::vector<qme::Tensor> pool;
  for (const auto& t : basis.elements())
    if (qme::tensor_parity(s, t) == parity) pool.push_back(t);
  qme::TensorSum x;
  for (std::size_t i = 0; i < terms && !pool.empty(); ++i) x.add(pool[rng() % pool.size()], random_q(rng));
  return x;
}

}  // namespace testing
