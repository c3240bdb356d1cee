#pragma once

#include "qme/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qme {

using SparseVector = std::map<std::size_t, Q>;

void axpy(SparseVector& y, const Q& a, const SparseVector& x);  // y += a x

class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(rows ? cols : cols), data_(cols) {}
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Q>>& m, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void add(std::size_t r, std::size_t c, const Q& v);
  Q get(std::size_t r, std::size_t c) const;
  const SparseVector& column(std::size_t c) const { return data_.at(c); }
  void set_column(std::size_t c, SparseVector v);
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseVector apply(const SparseVector& x) const;
  std::vector<std::vector<Q>> to_dense() const;
  // Same matrix with rows/columns reordered: new row i is old row_perm[i].
  SparseMatrix permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const;
  bool operator==(const SparseMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVector> data_;  // columns
};

struct SolveResult {
  std::size_t rank = 0;
  std::vector<SparseVector> kernel;
  bool solvable = true;
  SparseVector solution;     // particular solution when solvable
  SparseVector certificate;  // y with y^T M = 0 and y.b = 1 otherwise
};

// Exact Gauss-Jordan elimination over Q.
SolveResult solve_and_kernel(const SparseMatrix& m, const std::optional<SparseVector>& b = std::nullopt);
std::size_t rank(const SparseMatrix& m);

// Echelon basis of a growing subspace.
class IncrementalSpan {
public:
  // Returns true when v was independent of the vectors added so far.
  bool add(SparseVector v);
  bool contains(SparseVector v) const;
  std::size_t dim() const { return rows_.size(); }

private:
  void reduce(SparseVector& v) const;
  std::map<std::size_t, SparseVector> rows_;  // leading index -> row with leading 1
};

struct HomologyResult {
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
  std::size_t dim_homology = 0;
  std::vector<SparseVector> representatives;
};

// Homology at C_k of C_{k+1} --d_in--> C_k --d_out--> C_{k-1}.
HomologyResult homology_dims(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace qme
