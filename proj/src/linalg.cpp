#include "hmds/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hmds::linalg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  for (auto e : data_)
    if (!field_.contains(e)) throw std::out_of_range("matrix entry outside " + field_.name());
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::uint64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<Elem> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    for (auto v : row) {
      if (!field.contains(v)) throw std::out_of_range("matrix entry " + std::to_string(v) + " outside " + field.name());
      entries.push_back(static_cast<Elem>(v));
    }
  }
  return Matrix(std::move(field), r, c, std::move(entries));
}

Matrix Matrix::columns(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw std::out_of_range("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, idx[j]);
  }
  return out;
}

Matrix Matrix::columns(SubsetMask set) const {
  std::vector<std::size_t> idx;
  for (int e : subset_elements(set)) idx.push_back(static_cast<std::size_t>(e));
  return columns(idx);
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<std::vector<std::uint64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::uint64_t>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("matrices over different fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("inner dimensions differ");
  const auto& f = a.field_;
  Matrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const Elem x = a(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

namespace {

// row_r -= factor * row_p, over columns [from, cols).
void axpy_row(Matrix& m, std::size_t r, std::size_t p, Elem factor, std::size_t from) {
  const auto& f = m.field();
  auto dst = m.row(r);
  auto src = std::as_const(m).row(p);
  for (std::size_t j = from; j < m.cols(); ++j)
    if (src[j] != 0) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(ra[j], rb[j]);
}

// Forward elimination over the first `limit` columns with first-nonzero
// pivoting.  Returns pivot columns; when `reduce` is set, the result is in
// reduced row echelon form with unit pivots.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t limit, bool reduce) {
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    if (reduce) {
      const Elem s = f.inv(m(r, c));
      for (auto& x : m.row(r)) x = f.mul(x, s);
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (i != r && m(i, c) != 0) axpy_row(m, i, r, m(i, c), c);
    } else {
      const Elem s = f.inv(m(r, c));
      for (std::size_t i = r + 1; i < m.rows(); ++i)
        if (m(i, c) != 0) axpy_row(m, i, r, f.mul(m(i, c), s), c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Elem det(Matrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  Elem result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      swap_rows(m, c, p);
      result = f.neg(result);
    }
    const Elem pivot = m(c, c);
    result = f.mul(result, pivot);
    const Elem s = f.inv(pivot);
    for (std::size_t i = c + 1; i < n; ++i)
      if (m(i, c) != 0) axpy_row(m, i, c, f.mul(m(i, c), s), c);
  }
  return result;
}

std::size_t rank(Matrix m) { return eliminate(m, m.cols(), false).size(); }

Echelon rref(Matrix m) {
  auto pivots = eliminate(m, m.cols(), true);
  return {std::move(m), std::move(pivots)};
}

Matrix nullspace(const Matrix& m) {
  auto [r, pivots] = rref(m);
  const auto& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(f, m.cols() - pivots.size(), m.cols());
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(row, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out(row, pivots[i]) = f.neg(r(i, free));
    ++row;
  }
  return out;
}

Subspace::Subspace(Field field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

Subspace Subspace::from_rows(const Matrix& vectors) {
  auto [r, pivots] = rref(vectors);
  Matrix basis(vectors.field(), pivots.size(), vectors.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < vectors.cols(); ++j) basis(i, j) = r(i, j);
  return Subspace(std::move(basis));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length differs from ambient dimension");
  const auto& f = field();
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto row = basis_.row(i);
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    const Elem c = w[p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
  }
  for (auto x : w)
    if (x != 0) return false;
  return true;
}

Subspace span(const Matrix& m, SubsetMask set) {
  if (set >> m.cols()) throw std::out_of_range("column index out of range");
  if (set == 0) return Subspace(m.field(), m.rows());
  return Subspace::from_rows(m.columns(set).transpose());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspaces of different ambient spaces");
  const auto& f = a.field();
  const std::size_t d = a.ambient_dim();
  const std::size_t na = a.dim(), nb = b.dim();
  if (na == 0 || nb == 0) return Subspace(f, d);
  const std::size_t r = na + nb;
  // [basis_a ; basis_b | I_r]; rows whose left part vanishes give z with
  // z_a * basis_a = -z_b * basis_b.
  Matrix s(f, r, d + r);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < d; ++j) s(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < d; ++j) s(na + i, j) = b.basis()(i, j);
  for (std::size_t i = 0; i < r; ++i) s(i, d + i) = 1;
  const auto pivots = eliminate(s, d, false);
  const std::size_t kernel = r - pivots.size();
  Matrix vecs(f, kernel, d);
  for (std::size_t t = 0; t < kernel; ++t) {
    const std::size_t row = pivots.size() + t;
    for (std::size_t i = 0; i < na; ++i) {
      const Elem z = s(row, d + i);
      if (z == 0) continue;
      for (std::size_t j = 0; j < d; ++j) vecs(t, j) = f.add(vecs(t, j), f.mul(z, a.basis()(i, j)));
    }
  }
  return Subspace::from_rows(vecs);
}

std::size_t intersect_dim(const Matrix& v, const SubsetCollection& c) {
  if (c.ell() == 0) return v.rows();
  if (c.contains_empty()) return 0;
  Subspace cur = span(v, c.sets()[0]);
  for (std::size_t i = 1; i < c.sets().size(); ++i) {
    if (cur.dim() == 0) return 0;
    if (c.sets()[i] == c.sets()[i - 1]) continue;
    cur = intersect(cur, span(v, c.sets()[i]));
  }
  return cur.dim();
}

Matrix block_matrix(const Matrix& v, std::span<const SubsetMask> ordered_sets) {
  const std::size_t k = v.rows();
  const std::size_t ell = ordered_sets.size();
  std::size_t total = 0;
  for (auto s : ordered_sets) {
    if (s >> v.cols()) throw std::out_of_range("column index out of range");
    total += static_cast<std::size_t>(subset_size(s));
  }
  if (ell == 0 || total != (ell - 1) * k)
    throw std::invalid_argument("block matrix needs sum |A_i| = (l-1)k; got " + std::to_string(total));
  Matrix out(v.field(), ell * k, k + total);
  std::size_t offset = k;
  for (std::size_t b = 0; b < ell; ++b) {
    for (std::size_t i = 0; i < k; ++i) out(b * k + i, i) = 1;
    for (int col : subset_elements(ordered_sets[b])) {
      for (std::size_t i = 0; i < k; ++i) out(b * k + i, offset) = v(i, static_cast<std::size_t>(col));
      ++offset;
    }
  }
  return out;
}

Matrix block_matrix(const Matrix& v, const SubsetCollection& c) { return block_matrix(v, c.sets()); }

Matrix dual(const Matrix& g) {
  if (rank(g) != g.rows()) throw std::invalid_argument("generator matrix is rank deficient");
  return nullspace(g);
}

}  // namespace hmds::linalg
