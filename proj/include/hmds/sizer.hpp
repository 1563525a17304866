#pragma once

// Field-size bounds for MDS(l) Reed-Solomon codes, evaluated exactly, and
// the randomized / exhaustive searches for evaluation points.
//
// Euler's number is replaced by the rational upper bound 271829/100000 and
// every rounding is upward, so each value stays a valid sufficient threshold.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hmds/rs.hpp"
#include "hmds/verifier.hpp"

namespace hmds::sizer {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Rational stand-in for e (an upper bound).
BigRational euler_upper();
inline constexpr const char* kEulerNote = "e replaced by 271829/100000";

struct BoundParams {
  int n = 0;
  int k = 0;
  int ell = 2;

  /// Throws std::invalid_argument unless 1 <= k <= n and ell >= 2.
  void validate() const;
  int delta() const { return (ell - 1) * k; }
};

struct BoundValue {
  BigInt exact;
  double log2 = 0;
  std::string formula;
  std::string note;
};

double log2_of(const BigInt& v);

/// l k^2.
std::int64_t degree_bound(int k, int ell);

/// min(2^n, D (e n l / D)^D) as an exact rational (D = (l-1)k).
BigRational first_factor(const BoundParams& p);
/// min(2^{l m}, k^l m^{k l}) with m = min(D, n).
BigInt second_factor(const BoundParams& p);

enum class Form { Stated, Proof };

/// Stated form: ceil(first_factor * second_factor).  Proof form: the
/// intermediate sum over j' from ceil(D/l) to min(D,n) of
/// C(n,j') C(min(D,n), <=k)^l.
BoundValue dependency_bound(const BoundParams& p, Form form = Form::Stated);
/// ceil(e l k^2 * dependency count), rounded once at the end.
BoundValue bound_new(const BoundParams& p, Form form = Form::Stated);
/// l n^2 (sum_{i=0..k} C(n,i))^l.
BoundValue bound_prior(const BoundParams& p);

struct BoundRow {
  BoundParams params;
  double log2_new = 0;
  double log2_prior = 0;
  bool delta_below_n = false;
  bool new_smaller = false;
  std::string first_branch;   // "2^n" or "D(enl/D)^D"
  std::string second_branch;  // "2^(l m)" or "k^l m^(kl)"
};

/// One row per (n, k, l) in the given inclusive ranges, in that nesting order.
std::vector<BoundRow> compare_bounds(int n_lo, int n_hi, int k_lo, int k_hi, int ell_lo, int ell_hi);

struct SearchResult {
  std::optional<rs::RSCode> code;
  std::uint64_t trials = 0;
  std::optional<verifier::VerificationReport> report;  // for the returned code
};

/// Samples n distinct points of GF(q) per trial (stream derive_seed(seed,
/// trial)) and returns the first code passing the reduced verifier.  Throws
/// std::invalid_argument if q is not a prime power or q < n.
SearchResult random_search(int n, int k, int ell, std::uint64_t q, std::uint64_t seed, std::uint64_t max_trials,
                           const verifier::Options& opt = {});

struct MinQAttempt {
  std::uint64_t q = 0;
  std::uint64_t point_sets = 0;
  bool found = false;
};

struct MinQResult {
  std::optional<std::uint64_t> q;
  std::optional<rs::RSCode> witness;
  std::vector<MinQAttempt> attempts;
};

/// Smallest prime power q <= q_max admitting an (n,k)-MDS(l) RS code.  Point
/// sets are enumerated up to affine maps x -> a x + b (two points pinned to
/// 0 and 1), which leave every MDS(l) verdict unchanged.
MinQResult exhaustive_min_q(int n, int k, int ell, std::uint64_t q_max, const verifier::Options& opt = {});

}  // namespace hmds::sizer
