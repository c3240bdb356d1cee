#pragma once

#include "qme/lambda.hpp"
#include "qme/linalg.hpp"

#include <utility>
#include <functional>

#include <map>
#include <optional>
#include <vector>

namespace qme {

template <class T, class Less>
class BasisSlice {
public:
  BasisSlice() = default;
  explicit BasisSlice(std::vector<T> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (!index_.emplace(elems_[i], i).second) throw Error(ErrorKind::Integrity, "duplicate basis element");
  }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const T& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<T>& elements() const& { return elems_; }
  std::vector<T> elements() && { return std::move(elems_); }
  std::optional<std::size_t> find(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  // Appends x if absent; returns its index.
  std::size_t intern(const T& x) {
    auto [it, inserted] = index_.emplace(x, elems_.size());
    if (inserted) elems_.push_back(x);
    return it->second;
  }

private:
  std::vector<T> elems_;
  std::map<T, std::size_t, Less> index_;
};

using WordSlice = BasisSlice<Word, WordLess>;
using TensorSlice = BasisSlice<Tensor, TensorLess>;

struct WordConstraints {
  std::size_t min_len = 1;
  std::size_t max_len = 1;
  std::optional<int> parity;  // factor parity
};

struct TensorConstraints {
  std::size_t L = 1;  // word length
  std::size_t K = 1;  // factor count
  unsigned G = 0;
  unsigned N = 0;
  std::size_t min_len = 1;
  std::size_t min_k = 1;
  std::optional<Variant> variant;
  std::optional<std::size_t> order;  // exact filtration order
  std::optional<int> parity;
};

// Nonzero canonical words, ordered by length then lexicographically.
WordSlice enumerate_basis(const Space& space, const WordConstraints& c);
TensorSlice enumerate_basis(const Space& space, const TensorConstraints& c);

using TensorOp = std::function<TensorSum(const Tensor&)>;
using WordOp = std::function<Hamiltonian(const Word&)>;

// Column j holds the coordinates of op(domain[j]).  Components outside the
// codomain raise a range error unless truncate is set.
SparseMatrix matrix_of_operator(const TensorOp& op, const TensorSlice& domain, const TensorSlice& codomain,
                                bool truncate = false);
SparseMatrix matrix_of_operator(const WordOp& op, const WordSlice& domain, const WordSlice& codomain,
                                bool truncate = false);
// As above, but the codomain is extended by every tensor that occurs.
SparseMatrix matrix_into(const TensorOp& op, const TensorSlice& domain, TensorSlice& codomain);

SparseVector coordinates(const TensorSum& x, const TensorSlice& slice, bool truncate = false);
TensorSum from_coordinates(const SparseVector& v, const TensorSlice& slice);
SparseVector coordinates(const Hamiltonian& h, const WordSlice& slice, bool truncate = false);
Hamiltonian from_coordinates(const SparseVector& v, const WordSlice& slice);

}  // namespace qme
