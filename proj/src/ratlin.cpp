#include "nichols/ratlin.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "nichols/errors.hpp"

namespace nichols {

RatMatrix RatMatrix::identity(int n) { return scalar(n, Rat(1)); }

RatMatrix RatMatrix::scalar(int n, const Rat& c) {
  RatMatrix m(n, n);
  if (!c.is_zero())
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, int cols) {
  int nc = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  RatMatrix m(static_cast<int>(rows.size()), nc);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw Error("from_rows: ragged input");
    for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, int rows) {
  int nr = rows >= 0 ? rows : (cols.empty() ? 0 : static_cast<int>(cols[0].size()));
  RatMatrix m(nr, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != nr) throw Error("from_columns: ragged input");
    for (int i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatVec RatMatrix::row(int i) const {
  return RatVec(data_.begin() + std::size_t(i) * cols_, data_.begin() + std::size_t(i + 1) * cols_);
}

RatVec RatMatrix::column(int j) const {
  RatVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::block(int r0, int c0, int nr, int nc) const {
  RatMatrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(int r0, int c0, const RatMatrix& b) {
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x.is_zero(); });
}

Rat RatMatrix::trace() const {
  Rat t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

std::size_t RatMatrix::nnz() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rat& x) { return !x.is_zero(); }));
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m = *this;
  for (auto& x : m.data_)
    if (!x.is_zero()) x = -x;
  return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& c) {
  if (c.is_one()) return *this;
  for (auto& x : data_)
    if (!x.is_zero()) x *= c;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  // Row-sparse view of b, so the inner loop only touches nonzeros.
  std::vector<std::vector<std::pair<int, const Rat*>>> brows(b.rows_);
  for (int k = 0; k < b.rows_; ++k)
    for (int j = 0; j < b.cols_; ++j)
      if (!b.at(k, j).is_zero()) brows[k].emplace_back(j, &b.at(k, j));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (auto& [j, bkj] : brows[k]) c.at(i, j) += aik * *bkj;
    }
  return c;
}

RatVec operator*(const RatMatrix& a, const RatVec& v) {
  if (a.cols_ != static_cast<int>(v.size())) throw Error("matrix-vector product: shape mismatch");
  RatVec out(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      if (!a.at(i, k).is_zero() && !v[k].is_zero()) out[i] += a.at(i, k) * v[k];
  return out;
}

SparseRow to_sparse(const RatVec& v) {
  SparseRow r;
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (!v[j].is_zero()) r.emplace_back(j, v[j]);
  return r;
}

RatVec to_dense(const SparseRow& r, int n) {
  RatVec v(n);
  for (auto& [j, x] : r) v[j] = x;
  return v;
}

namespace {

// a - c * b, both sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rat& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      Rat v = a[i].second - c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rat* find_entry(const SparseRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const std::pair<int, Rat>& e, int c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

RowReducer::RowReducer(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

SparseRow RowReducer::reduce(SparseRow row) const {
  // Eliminate each pivot column hit by the row, left to right.
  std::size_t pos = 0;
  while (pos < row.size()) {
    int col = row[pos].first;
    int pr = pivot_row_[col];
    if (pr < 0) {
      ++pos;
      continue;
    }
    Rat c = row[pos].second;
    SparseRow head(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pos));
    SparseRow tail(row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
    tail = axpy(tail, c, rows_[pr]);
    head.insert(head.end(), tail.begin(), tail.end());
    row = std::move(head);
  }
  return row;
}

bool RowReducer::add(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  Rat inv = row.front().second.inverse();
  if (!inv.is_one())
    for (auto& e : row) e.second *= inv;
  pivot_row_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::vector<int> RowReducer::pivot_columns() const {
  std::vector<int> cols;
  for (int c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) cols.push_back(c);
  return cols;
}

std::vector<SparseRow> RowReducer::rref() const {
  std::vector<int> pcols = pivot_columns();
  std::vector<SparseRow> out(pcols.size());
  std::vector<int> index_of(ncols_, -1);
  for (std::size_t k = 0; k < pcols.size(); ++k) index_of[pcols[k]] = static_cast<int>(k);
  // Back substitution from the last pivot upward; rows below are already reduced.
  for (int k = static_cast<int>(pcols.size()) - 1; k >= 0; --k) {
    SparseRow r = rows_[pivot_row_[pcols[k]]];
    std::size_t pos = 1;
    while (pos < r.size()) {
      int col = r[pos].first;
      int idx = index_of[col];
      if (idx < 0) {
        ++pos;
        continue;
      }
      Rat c = r[pos].second;
      SparseRow head(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
      SparseRow tail(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
      tail = axpy(tail, c, out[idx]);
      head.insert(head.end(), tail.begin(), tail.end());
      r = std::move(head);
    }
    out[k] = std::move(r);
  }
  return out;
}

std::vector<RatVec> RowReducer::kernel() const {
  std::vector<SparseRow> rr = rref();
  std::vector<int> pcols = pivot_columns();
  std::vector<bool> is_pivot(ncols_, false);
  for (int c : pcols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols_);
    v[f] = Rat(1);
    for (std::size_t k = 0; k < rr.size(); ++k)
      if (const Rat* e = find_entry(rr[k], f)) v[pcols[k]] = -*e;
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const RatMatrix& a) {
  RowReducer rr(a.cols());
  for (int i = 0; i < a.rows(); ++i) rr.add_dense(a.row(i));
  return rr.rank();
}

std::vector<RatVec> kernel_basis(const RatMatrix& a) {
  RowReducer rr(a.cols());
  for (int i = 0; i < a.rows(); ++i) rr.add_dense(a.row(i));
  return rr.kernel();
}

LinearSolution solve_linear(const RatMatrix& a, const RatVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve_linear: rows(A) != length(b)");
  int n = a.cols();
  RowReducer aug(n + 1);
  RowReducer plain(n);
  for (int i = 0; i < a.rows(); ++i) {
    RatVec r = a.row(i);
    plain.add_dense(r);
    r.push_back(b[i]);
    aug.add_dense(r);
  }
  std::vector<int> pcols = aug.pivot_columns();
  if (!pcols.empty() && pcols.back() == n) throw NoSolution("solve_linear: system is inconsistent");
  std::vector<SparseRow> rr = aug.rref();
  LinearSolution sol;
  sol.x0.assign(n, Rat());
  for (std::size_t k = 0; k < rr.size(); ++k)
    if (const Rat* e = find_entry(rr[k], n)) sol.x0[pcols[k]] = *e;
  sol.kernel = plain.kernel();
  return sol;
}

RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          if (!b.at(p, q).is_zero()) k.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
    }
  return k;
}

RatMatrix block_diagonal(const std::vector<RatMatrix>& blocks) {
  int nr = 0, nc = 0;
  for (auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  RatMatrix m(nr, nc);
  int r = 0, c = 0;
  for (auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  int n = a.rows();
  RowReducer rr(2 * n);
  for (int i = 0; i < n; ++i) {
    RatVec r = a.row(i);
    r.resize(2 * n);
    r[n + i] = Rat(1);
    rr.add_dense(r);
  }
  std::vector<int> pcols = rr.pivot_columns();
  if (static_cast<int>(pcols.size()) < n || pcols[n - 1] != n - 1) return std::nullopt;
  std::vector<SparseRow> rows = rr.rref();
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (auto& [j, x] : rows[i])
      if (j >= n) inv.at(i, j - n) = x;
  return inv;
}

std::vector<int> independent_columns(const RatMatrix& a) {
  RowReducer rr(a.rows());
  std::vector<int> keep;
  for (int j = 0; j < a.cols(); ++j)
    if (rr.add_dense(a.column(j))) keep.push_back(j);
  return keep;
}

RatMatrix column_space(const RatMatrix& a) {
  std::vector<int> keep = independent_columns(a);
  RatMatrix b(a.rows(), static_cast<int>(keep.size()));
  for (int k = 0; k < static_cast<int>(keep.size()); ++k)
    for (int i = 0; i < a.rows(); ++i) b.at(i, k) = a.at(i, keep[k]);
  return b;
}

RatMatrix left_inverse(const RatMatrix& b) {
  // Pick rows of b forming an invertible square block and invert it.
  RatMatrix bt = b.transpose();
  std::vector<int> rows = independent_columns(bt);
  int k = b.cols();
  if (static_cast<int>(rows.size()) != k) throw Error("left_inverse: matrix lacks full column rank");
  RatMatrix sq(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sq.at(i, j) = b.at(rows[i], j);
  RatMatrix inv = *inverse(sq);
  RatMatrix l(k, b.rows());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) l.at(i, rows[j]) = inv.at(i, j);
  return l;
}

std::vector<Rat> charpoly(const RatMatrix& a) {
  // Faddeev-LeVerrier; exact division by k is fine over Q.
  int n = a.rows();
  std::vector<Rat> c(n + 1);
  c[n] = Rat(1);
  RatMatrix m(n, n);
  for (int k = 1; k <= n; ++k) {
    RatMatrix mk = a * m;
    for (int i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
    m = std::move(mk);
    RatMatrix am = a * m;
    c[n - k] = -am.trace() / Rat(k);
  }
  return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class p = 2;
  while (p * p <= n && p < 1000000) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
    p += (p == 2 ? 1 : 2);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [q, e] : fac) {
    std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

Rat eval(const std::vector<Rat>& poly, const Rat& x) {
  Rat acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
  std::vector<Rat> p = poly;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  std::set<Rat> roots;
  if (p.size() <= 1) return {};
  std::size_t shift = 0;
  while (shift < p.size() && p[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.insert(Rat(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (p.size() > 1) {
    mpz_class l = 1;
    for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class a0 = mpq_class(p.front().to_mpq() * l).get_num();
    mpz_class an = mpq_class(p.back().to_mpq() * l).get_num();
    for (auto& num : divisors(a0))
      for (auto& den : divisors(an))
        for (int sgn : {1, -1}) {
          Rat cand(mpq_class(num * sgn, den));
          if (eval(p, cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace nichols
