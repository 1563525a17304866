#pragma once

// Brute-force average-radius list decodability for small codes, and the
// duality cross-check between MDS(l+1) and LD-MDS(<= l) of the dual.
//
// The centre y is eliminated by taking the coordinate-wise plurality of the
// candidate codewords, and translation invariance lets one codeword be 0.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmds/linalg.hpp"
#include "hmds/verifier.hpp"

namespace hmds::listdec {

using gf::Elem;
using gf::Field;
using linalg::Matrix;
using verifier::VerificationReport;

using Word = std::vector<Elem>;

/// Codebooks above this many words are refused.
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 22;

class CodeTooLarge : public std::runtime_error {
 public:
  explicit CodeTooLarge(std::uint64_t estimate);
  /// Codewords that would have to be enumerated (saturates at 2^64-1).
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

/// Every codeword of the row space of g, ordered by message value (message
/// coefficient i is base-q digit i).  Throws CodeTooLarge past kMaxCodewords.
std::vector<Word> codewords(const Matrix& g);

std::size_t hamming_weight(std::span<const Elem> w);
std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

/// Coordinate-wise plurality; ties go to the smallest value.
Word optimal_center(std::span<const Word> words);
std::size_t total_distance(std::span<const Word> words, std::span<const Elem> center);

struct LDWitness {
  Word y;
  std::vector<Word> codewords;
  std::uint64_t total_weight = 0;
};

struct LDResult {
  VerificationReport report;
  std::optional<LDWitness> witness;
};

/// Holds iff no L+1 distinct codewords and centre y have total weight <=
/// budget.  Throws std::invalid_argument for L < 1, CodeTooLarge if needed.
LDResult check_budget(const Matrix& g, int L, std::uint64_t budget);

/// LD-MDS(L): budget L(n - k) with k the code dimension.  Throws
/// std::invalid_argument when L >= q.
LDResult is_ld_mds(const Matrix& g, int L);

/// (rho, L)-average-radius decodability for rational rho = num/den, i.e. the
/// integer budget floor((L+1) rho n).
LDResult check_average_radius(const Matrix& g, int L, std::uint64_t rho_num, std::uint64_t rho_den);

/// Minimum total weight over all (L+1)-sets of distinct codewords at their
/// plurality centre; `containing_zero` restricts to sets containing 0.
/// Exhaustive, for cross-checks only.  nullopt if fewer than L+1 codewords.
std::optional<std::uint64_t> min_total_weight(std::span<const Word> book, int L, bool containing_zero);

/// Codewords within Hamming distance `radius` of `center`.
std::size_t ball_count(std::span<const Word> book, std::span<const Elem> center, std::size_t radius);

/// n - floor((L+1) rho n / L) with rho = num/den: the exponent in the
/// generalized Singleton bound |C| <= L q^{exponent}.
std::int64_t singleton_exponent(int n, int L, std::uint64_t rho_num, std::uint64_t rho_den);

/// Compares MDS(l+1) of g with LD-MDS(L) of its dual for every L <= l.
/// Holds iff the two sides agree; notes carry both sub-verdicts.
VerificationReport duality_check(const Matrix& g, int ell);

}  // namespace hmds::listdec
