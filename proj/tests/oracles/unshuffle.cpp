#include "oracles/oracles.hpp"

namespace oracle {

std::map<std::pair<qme::Tensor, qme::Tensor>, Q, qme::TensorPairLess> unshuffle(const qme::Space& space,
                                                                                 const qme::Tensor& t) {
  std::map<std::pair<qme::Tensor, qme::Tensor>, Q, qme::TensorPairLess> out;
  const std::size_t k = t.k();
  std::vector<int> ps;
  for (const auto& w : t.factors) ps.push_back(qme::factor_parity(space, w));
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) perm.push_back(i);
    const std::size_t split = perm.size();
    for (std::size_t i = 0; i < k; ++i)
      if (!(mask >> i & 1)) perm.push_back(i);
    qme::Tensor left{t.g, t.n, {}}, right{0, 0, {}};
    for (std::size_t a = 0; a < k; ++a) (a < split ? left : right).factors.push_back(t.factors[perm[a]]);
    auto& slot = out[{left, right}];
    slot += koszul_sign(ps, perm);
    if (slot == 0) out.erase({left, right});
  }
  return out;
}

}  // namespace oracle
