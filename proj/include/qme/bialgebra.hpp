#pragma once

#include "qme/word.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qme {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Bracket of two cyclic words.  Result lives in words of length n+m-2 (the
// empty word goes to the scalar part).
Hamiltonian bracket(const Space& space, const Word& a, const Word& b);
Hamiltonian bracket(const Space& space, const Hamiltonian& a, const Hamiltonian& b,
                    std::size_t max_len = kUnbounded);

// Combination of ordered pairs of words; an empty Word is the Empty component.
// Values produced by cobracket() are symmetric under the graded flip.
class CobracketValue {
public:
  using Pair = std::pair<Word, Word>;
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
      WordLess l;
      if (a.first != b.first) return l(a.first, b.first);
      return l(a.second, b.second);
    }
  };
  using Terms = std::map<Pair, Q, PairLess>;

  void add(const Word& left, const Word& right, const Q& c);
  void add(const CobracketValue& other, const Q& c = 1);
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const CobracketValue& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

CobracketValue cobracket(const Space& space, const Word& w);
CobracketValue cobracket(const Space& space, const Hamiltonian& h);

// Parity of x in the parity-reversed Lie algebra, where the bracket is even.
inline int lie_parity(const Space& space, const Word& w) { return factor_parity(space, w) ^ 1; }

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string witness;
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomResult> results;
};

// Exhaustive sweep over words of length <= 3 plus `samples` seeded random
// homogeneous combinations of words of length <= max_len.
AxiomReport check_bialgebra_axioms(const Space& space, std::size_t max_len, std::size_t samples,
                                   std::uint64_t seed);

}  // namespace qme
