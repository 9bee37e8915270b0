#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nichols/rat.hpp"

namespace nichols {

using RatVec = std::vector<Rat>;

// Dense row-major matrix of exact rationals. Products skip zero entries, so the
// very sparse action matrices that dominate this library stay cheap.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static RatMatrix identity(int n);
  static RatMatrix scalar(int n, const Rat& c);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, int cols = -1);
  static RatMatrix from_columns(const std::vector<RatVec>& cols, int rows = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  Rat& operator()(int i, int j) { return at(i, j); }
  const Rat& operator()(int i, int j) const { return at(i, j); }
  const std::vector<Rat>& data() const { return data_; }

  RatVec row(int i) const;
  RatVec column(int j) const;
  RatMatrix transpose() const;
  RatMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const RatMatrix& b);
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rat trace() const;
  std::size_t nnz() const;

  RatMatrix operator-() const;
  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rat& c);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rat& c) { return a *= c; }
  friend RatMatrix operator*(const Rat& c, RatMatrix a) { return a *= c; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVec operator*(const RatMatrix& a, const RatVec& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

SparseRow to_sparse(const RatVec& v);
RatVec to_dense(const SparseRow& r, int n);

// Incremental Gaussian elimination. Rows are reduced against the current pivots
// as they arrive (pivot = leading column, normalized to 1); the fully reduced
// echelon form is produced on demand.
class RowReducer {
 public:
  explicit RowReducer(int ncols);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns true when the row was independent of the rows seen so far.
  bool add(SparseRow row);
  bool add_dense(const RatVec& row) { return add(to_sparse(row)); }
  // Residual of a row after reduction by the current pivots (empty if in span).
  SparseRow reduce(SparseRow row) const;
  bool in_span(const SparseRow& row) const { return reduce(row).empty(); }

  // Reduced row echelon form: rows sorted by pivot column.
  std::vector<SparseRow> rref() const;
  std::vector<int> pivot_columns() const;
  // Right null space, one vector per free column f: 1 at f, 0 at the other free
  // columns, ordered by f.
  std::vector<RatVec> kernel() const;

 private:
  int ncols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;  // column -> index into rows_, or -1
};

int rank(const RatMatrix& a);
std::vector<RatVec> kernel_basis(const RatMatrix& a);

struct LinearSolution {
  RatVec x0;
  std::vector<RatVec> kernel;
};
// Throws NoSolution when b is not in the column space of a.
LinearSolution solve_linear(const RatMatrix& a, const RatVec& b);

RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks);
std::optional<RatMatrix> inverse(const RatMatrix& a);

// Indices of a maximal independent prefix-greedy subset of the columns.
std::vector<int> independent_columns(const RatMatrix& a);
// Basis (as columns) of the column space, chosen greedily from the columns.
RatMatrix column_space(const RatMatrix& a);
// For a full-column-rank basis matrix B, returns L with L*B = I.
RatMatrix left_inverse(const RatMatrix& b);

// Characteristic polynomial det(tI - A), coefficients from degree 0 upward.
std::vector<Rat> charpoly(const RatMatrix& a);
// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const std::vector<Rat>& poly);

}  // namespace nichols
