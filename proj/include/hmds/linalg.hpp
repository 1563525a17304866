#pragma once

// Dense matrices over a finite field and the exact linear algebra the MDS(l)
// criteria are built on: determinant, rank, column spans, subspace
// intersection, the stacked block matrix and dual (parity-check) matrices.

#include <cstddef>
#include <span>
#include <vector>

#include "hmds/collections.hpp"
#include "hmds/gf.hpp"

namespace hmds::linalg {

using gf::Elem;
using gf::Field;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(Field field, std::size_t n);
  /// Rows of canonical integers; every row must have the same length.
  static Matrix from_rows(Field field, const std::vector<std::vector<std::uint64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& entries() const { return data_; }

  /// Submatrix formed by the listed columns, in the given order.
  Matrix columns(std::span<const std::size_t> idx) const;
  Matrix columns(SubsetMask set) const;
  Matrix transpose() const;

  std::vector<std::vector<std::uint64_t>> to_rows() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Throws std::invalid_argument for non-square input.
Elem det(Matrix m);
std::size_t rank(Matrix m);

struct Echelon {
  Matrix reduced;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};
Echelon rref(Matrix m);

/// Rows form a basis of the right kernel {x : M x = 0}.
Matrix nullspace(const Matrix& m);

/// A subspace of F^d, held as a row-reduced basis (one basis vector per row).
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);
  /// Span of the rows of `vectors`.
  static Subspace from_rows(const Matrix& vectors);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }

  bool contains(std::span<const Elem> v) const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Span of the columns of m indexed by `set`; the empty set yields the zero
/// subspace.
Subspace span(const Matrix& m, SubsetMask set);

/// Intersection computed from the left kernel of the stacked bases.
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim(V_{A_1} cap ... cap V_{A_l}); 0 for a collection containing the empty
/// set, the full ambient dimension for the empty collection.
std::size_t intersect_dim(const Matrix& v, const SubsetCollection& c);

/// The l*k x (k + sum|A_i|) matrix whose i-th block row is
/// [I_k, 0, ..., V_{A_i}, ..., 0].  Throws unless sum |A_i| = (l-1)k.
Matrix block_matrix(const Matrix& v, std::span<const SubsetMask> ordered_sets);
/// Uses the collection's canonical order.
Matrix block_matrix(const Matrix& v, const SubsetCollection& c);

/// Parity-check matrix H ((n-k) x n) with G H^T = 0.  Throws
/// std::invalid_argument if G is rank deficient.
Matrix dual(const Matrix& g);

}  // namespace hmds::linalg
