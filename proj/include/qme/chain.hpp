#pragma once

#include "qme/lambda.hpp"

#include <utility>
#include <map>
#include <vector>

namespace qme {

// An element of Lambda without its gamma/nu prefix: a sorted word multiset.
using Block = std::vector<Word>;

struct BlockLess {
  bool operator()(const Block& a, const Block& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), WordLess{});
  }
};

struct ChainTerm {
  unsigned g = 0;
  unsigned n = 0;
  std::vector<Block> blocks;
  bool operator==(const ChainTerm& o) const { return g == o.g && n == o.n && blocks == o.blocks; }
};

struct ChainLess {
  bool operator()(const ChainTerm& a, const ChainTerm& b) const;
};

int block_parity(const Space& space, const Block& b);
// 2g + n + sum over blocks of (k_b - 1)
std::size_t chain_order(const ChainTerm& t);

// Truncated element of the CE complex S(Lambda).
class ChainSum {
public:
  using Terms = std::map<ChainTerm, Q, ChainLess>;

  static ChainSum one();
  void add(const ChainTerm& t, const Q& c);
  void add(const ChainSum& other, const Q& c = 1);
  void add_normalized(const Space& space, unsigned g, unsigned n, std::vector<Block> blocks, const Q& c);
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  ChainSum scaled(const Q& c) const;
  bool operator==(const ChainSum& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

ChainSum chain_from_lambda(const TensorSum& x);
ChainSum chain_product(const Space& space, const ChainSum& a, const ChainSum& b);
// Keeps terms with at most K blocks, chain order <= P, g <= G, n <= N.
ChainSum chain_truncate(const ChainSum& c, const Profile& p);
ChainSum chain_max_blocks(const ChainSum& c, std::size_t max_blocks);

// CE differential of the dg Lie algebra Lambda (variant v).
ChainSum chain_delta(const Space& space, Variant v, const ChainSum& c);

// exp(x) = 1 + x + x.x/2 + ..., truncated by the profile.
ChainSum chain_exp(const Space& space, const TensorSum& x, const Profile& p);

// Multiplication by y.
ChainSum s_y(const Space& space, const TensorSum& y, const ChainSum& c);
// gamma_y(G) = dy.G + sum_i (-1)^{|g_i|(|g_1|+..+|g_{i-1}|)} <<y,g_i>> G\g_i
ChainSum gamma_y(const Space& space, Variant v, const TensorSum& y, const ChainSum& c);
// exp(gamma_y) applied to c with truncation after every step.
ChainSum exp_gamma_y(const Space& space, Variant v, const TensorSum& y, const ChainSum& c, const Profile& p);

}  // namespace qme
