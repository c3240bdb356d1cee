#include "qme/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace qme {

void axpy(SparseVector& y, const Q& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Q>>& d, std::size_t cols) {
  const std::size_t c = d.empty() ? cols : d[0].size();
  SparseMatrix m(d.size(), c);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.add(i, j, d[i][j]);
  return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Q& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::Usage, "matrix index out of range");
  if (v == 0) return;
  auto& col = data_[c];
  auto [it, inserted] = col.try_emplace(r, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  }
}

Q SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& col = data_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Q(0) : it->second;
}

void SparseMatrix::set_column(std::size_t c, SparseVector v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->first >= rows_) throw Error(ErrorKind::Usage, "column entry outside matrix");
    it = it->second == 0 ? v.erase(it) : std::next(it);
  }
  data_.at(c) = std::move(v);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : data_[c]) t.data_[r].emplace(c, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::Usage, "matrix dimensions do not compose");
  SparseMatrix m(rows_, o.cols_);
  for (std::size_t c = 0; c < o.cols_; ++c) m.data_[c] = apply(o.data_[c]);
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [j, v] : x) {
    if (j >= cols_) throw Error(ErrorKind::Usage, "vector longer than matrix width");
    axpy(y, v, data_[j]);
  }
  return y;
}

std::vector<std::vector<Q>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Q>> d(rows_, std::vector<Q>(cols_));
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : data_[c]) d[r][c] = v;
  return d;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) const {
  std::vector<std::size_t> row_inv(rows_);
  for (std::size_t i = 0; i < rows_; ++i) row_inv.at(row_perm.at(i)) = i;
  SparseMatrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : data_[col_perm.at(c)]) m.data_[c].emplace(row_inv[r], v);
  return m;
}

namespace {

struct Reduced {
  std::vector<SparseVector> rows;
  std::vector<std::optional<std::size_t>> pivot_row;  // per column
  std::size_t rank = 0;
};

// Row-reduces [m | b] to reduced echelon form, pivoting only on the first
// `cols` columns; among candidate rows the sparsest is chosen.
Reduced eliminate(std::vector<SparseVector> rows, std::size_t cols) {
  Reduced red;
  red.pivot_row.assign(cols, std::nullopt);
  std::vector<bool> used(rows.size(), false);
  for (std::size_t c = 0; c < cols; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || !rows[r].count(c)) continue;
      if (!best || rows[r].size() < rows[*best].size()) best = r;
    }
    if (!best) continue;
    const std::size_t p = *best;
    const Q inv = 1 / rows[p].at(c);
    for (auto& [j, v] : rows[p]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == p) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end()) continue;
      const Q f = -it->second;
      axpy(rows[r], f, rows[p]);
    }
    used[p] = true;
    red.pivot_row[c] = p;
    ++red.rank;
  }
  red.rows = std::move(rows);
  return red;
}

std::vector<SparseVector> to_rows(const SparseMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[r].emplace(c, v);
  return rows;
}

}  // namespace

SolveResult solve_and_kernel(const SparseMatrix& m, const std::optional<SparseVector>& b) {
  const std::size_t n = m.cols();
  auto rows = to_rows(m);
  if (b) {
    for (const auto& [i, v] : *b) {
      if (i >= m.rows()) throw Error(ErrorKind::Usage, "right-hand side longer than matrix height");
      if (v != 0) rows[i][n] = v;
    }
  }
  Reduced red = eliminate(std::move(rows), n);
  SolveResult res;
  res.rank = red.rank;
  for (std::size_t f = 0; f < n; ++f) {
    if (red.pivot_row[f]) continue;
    SparseVector k{{f, Q(1)}};
    for (std::size_t c = 0; c < n; ++c) {
      if (!red.pivot_row[c]) continue;
      const auto& row = red.rows[*red.pivot_row[c]];
      auto it = row.find(f);
      if (it != row.end()) k[c] = -it->second;
    }
    res.kernel.push_back(std::move(k));
  }
  if (!b) return res;
  std::vector<bool> pivot_rows(red.rows.size(), false);
  for (const auto& p : red.pivot_row)
    if (p) pivot_rows[*p] = true;
  for (std::size_t r = 0; r < red.rows.size(); ++r)
    if (!pivot_rows[r] && red.rows[r].count(n)) res.solvable = false;
  if (res.solvable) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!red.pivot_row[c]) continue;
      const auto& row = red.rows[*red.pivot_row[c]];
      auto it = row.find(n);
      if (it != row.end()) res.solution[c] = it->second;
    }
    return res;
  }
  // certificate: y with M^T y = 0 and b.y = 1
  SparseMatrix t(n + 1, m.rows());
  const SparseMatrix mt = m.transpose();
  for (std::size_t c = 0; c < m.rows(); ++c) {
    SparseVector col = mt.column(c);
    auto it = b->find(c);
    if (it != b->end() && it->second != 0) col[n] = it->second;
    t.set_column(c, std::move(col));
  }
  SolveResult cert = solve_and_kernel(t, SparseVector{{n, Q(1)}});
  if (!cert.solvable) throw Error(ErrorKind::Integrity, "inconsistent system without a certificate");
  res.certificate = std::move(cert.solution);
  return res;
}

std::size_t rank(const SparseMatrix& m) { return eliminate(to_rows(m), m.cols()).rank; }

void IncrementalSpan::reduce(SparseVector& v) const {
  for (auto it = rows_.begin(); it != rows_.end() && !v.empty(); ++it) {
    auto f = v.find(it->first);
    if (f == v.end()) continue;
    const Q a = -f->second;
    axpy(v, a, it->second);
  }
}

bool IncrementalSpan::add(SparseVector v) {
  reduce(v);
  if (v.empty()) return false;
  const std::size_t lead = v.begin()->first;
  const Q inv = 1 / v.begin()->second;
  for (auto& [i, x] : v) x *= inv;
  rows_.emplace(lead, std::move(v));
  return true;
}

bool IncrementalSpan::contains(SparseVector v) const {
  reduce(v);
  return v.empty();
}

HomologyResult homology_dims(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw Error(ErrorKind::Usage, "homology maps do not compose");
  if (!(d_out * d_in).is_zero()) throw Error(ErrorKind::Integrity, "d_out o d_in is not zero");
  HomologyResult h;
  const SolveResult ker = solve_and_kernel(d_out);
  h.dim_kernel = ker.kernel.size();
  IncrementalSpan span;
  for (std::size_t c = 0; c < d_in.cols(); ++c) span.add(d_in.column(c));
  h.dim_image = span.dim();
  for (const auto& k : ker.kernel)
    if (span.add(k)) h.representatives.push_back(k);
  h.dim_homology = h.representatives.size();
  if (h.dim_homology != h.dim_kernel - h.dim_image) throw Error(ErrorKind::Integrity, "image not inside kernel");
  return h;
}

}  // namespace qme
