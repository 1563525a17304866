#pragma once

// Reed-Solomon specifics: Vandermonde generators, the pi_A polynomial
// determinant criterion, the k = 3 pair-determinant criterion, the
// expurgation / puncturing / pseudo-shortening transforms, and the
// univariate degree-budget experiment for the block determinant.

#include <cstdint>
#include <vector>

#include "hmds/collections.hpp"
#include "hmds/gf.hpp"
#include "hmds/linalg.hpp"
#include "hmds/verifier.hpp"

namespace hmds::rs {

using gf::Elem;
using gf::Field;
using linalg::Matrix;
using verifier::VerificationReport;

class RSCode {
 public:
  /// Throws std::invalid_argument unless the points are distinct elements of
  /// the field and 1 <= k <= n.
  RSCode(Field field, std::vector<Elem> points, int k);

  const Field& field() const { return field_; }
  const std::vector<Elem>& points() const { return points_; }
  int k() const { return k_; }
  int n() const { return static_cast<int>(points_.size()); }

  friend bool operator==(const RSCode&, const RSCode&) = default;

 private:
  Field field_;
  std::vector<Elem> points_;
  int k_;
};

/// k x n matrix with entry (r, c) = points[c]^r.  Points need not be distinct.
Matrix vandermonde(const Field& field, const std::vector<Elem>& points, int k);
Matrix vandermonde(const RSCode& code);

/// pi_A(x) = prod_{i in A} (x - beta_i).
Elem pi_eval(const RSCode& code, SubsetMask set, Elem x);

/// The square matrix whose rows are indexed by the elements of the first
/// (largest) set of the canonical collection and whose column blocks are
/// (pi_{A_j}(beta), beta pi_{A_j}(beta), ..., beta^{d_j - 1} pi_{A_j}(beta)),
/// d_j = k - |A_j|, for j >= 2.  Throws unless sum |A_i| = (l-1)k, all
/// |A_i| <= k and |A_1| >= 1.
Matrix pi_matrix(const RSCode& code, const SubsetCollection& c);

/// True iff the pi-polynomial determinant is nonzero, i.e. the column spans
/// of the Vandermonde generator intersect trivially.
bool poly_det_criterion(const RSCode& code, const SubsetCollection& c);

verifier::Criterion poly_det(const RSCode& code);

/// k = 3 only: every choice of three disjoint index pairs {a,b} gives a
/// nonzero det of rows (1, beta_a + beta_b, beta_a beta_b).  The witness is
/// the offending pair triple.  Throws for k != 3.
VerificationReport mds3_criterion(const RSCode& code);

/// Drops the last generator row: dimension k - 1, same points.  Needs k >= 2.
RSCode expurgate(const RSCode& code);
/// Removes point j (0-based), dimension unchanged.  Needs n > k.
RSCode puncture(const RSCode& code, int j);
/// Removes point j (0-based) and the last row: (n-1, k-1).  Needs k >= 2.
RSCode pseudo_shorten(const RSCode& code, int j);

struct DegreeCheck {
  int budget = 0;           // l k^2
  int measured_degree = 0;  // degree of the interpolant
  int samples = 0;
  int held_out = 0;
  bool reproduced = false;  // interpolant matched every held-out evaluation
};

/// Treats det(block_matrix(Vand_k(beta), c)) as a univariate polynomial in
/// beta_vary with the other points frozen, interpolates it from l k^2 + 1
/// samples and checks l k^2 + 2 held-out evaluations.  The field should be a
/// large prime field.
DegreeCheck block_det_degree_check(const Field& field, const std::vector<Elem>& frozen_points, int k,
                                   const SubsetCollection& c, int vary, std::uint64_t seed);

}  // namespace hmds::rs
