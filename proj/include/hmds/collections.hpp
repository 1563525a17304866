#pragma once

// Subset collections over [n] and the generic-collection combinatorics:
// the partition inequality and the enumerations the MDS(l) criteria
// quantify over.
//
// Subsets are bitmasks over 0-based indices (bit i <-> element i+1 of [n]);
// file formats use 1-based lists.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hmds {

using SubsetMask = std::uint64_t;

inline constexpr int kMaxLength = 63;

inline int subset_size(SubsetMask a) { return __builtin_popcountll(a); }

/// Sorted 0-based indices of a mask.
std::vector<int> subset_elements(SubsetMask a);
SubsetMask subset_from_elements(std::span<const int> zero_based);

/// Lexicographic comparison of the sorted element lists.
bool subset_lex_less(SubsetMask a, SubsetMask b);

/// Canonical order: size descending, then lexicographic.
bool canonical_less(SubsetMask a, SubsetMask b);

/// An unordered multiset {A_1, ..., A_l} of subsets of [n], stored in
/// canonical order so equal collections compare and serialise identically.
class SubsetCollection {
 public:
  SubsetCollection() = default;
  SubsetCollection(int n, std::vector<SubsetMask> sets);

  int n() const { return n_; }
  int ell() const { return static_cast<int>(sets_.size()); }
  const std::vector<SubsetMask>& sets() const { return sets_; }
  int total_size() const;
  bool contains_empty() const;

  /// 1-based element lists in canonical order.
  std::vector<std::vector<int>> to_lists() const;
  static SubsetCollection from_lists(int n, const std::vector<std::vector<int>>& one_based);

  std::string to_string() const;

  friend bool operator==(const SubsetCollection&, const SubsetCollection&) = default;

 private:
  int n_ = 0;
  std::vector<SubsetMask> sets_;
};

/// A partition of [l] into nonempty blocks, each block a bitmask over
/// 0-based positions.
struct SetPartition {
  std::vector<std::uint32_t> blocks;
  int size() const { return static_cast<int>(blocks.size()); }
};

/// Streams the set partitions of [l] in restricted-growth-string order.
class PartitionStream {
 public:
  explicit PartitionStream(int ell);
  bool next(SetPartition& out);

 private:
  int ell_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SetPartition> partitions(int ell);

/// Checks the partition inequality sum_i |cap_{j in P_i} A_j| <= (s-1)k for
/// every partition of [l].  Throws std::invalid_argument if some |A_i| > k.
bool is_generic(const SubsetCollection& c, int k);

/// Same check on raw sets against a precomputed partition list; no size
/// validation.
bool is_generic_sets(std::span<const SubsetMask> sets, int k, std::span<const SetPartition> parts);

/// Streams the canonical (n,k,l)-generic collections of nonempty sets with
/// |A_i| <= k and sum |A_i| = (l-1)k.  Order: size signatures s_1 >= ... >= s_l
/// ascending lexicographically, then sets lexicographically.
class GenericCollectionStream {
 public:
  GenericCollectionStream(int n, int k, int ell);
  bool next(SubsetCollection& out);
  /// Candidates (size-feasible multisets) examined so far, generic or not.
  std::uint64_t candidates_examined() const { return examined_; }

 private:
  bool advance_signature();
  bool advance_tuple();
  void reset_tuple();

  int n_, k_, ell_;
  std::vector<std::vector<SubsetMask>> by_size_;  // lex-ordered subsets per size
  std::vector<SetPartition> parts_;
  std::vector<std::vector<int>> signatures_;
  std::size_t sig_pos_ = 0;
  std::vector<int> signature_;
  std::vector<std::size_t> idx_;
  bool sig_ready_ = false;
  bool tuple_ready_ = false;
  bool done_ = false;
  std::uint64_t examined_ = 0;
  std::vector<SubsetMask> scratch_;
};

/// Streams the canonical (n,k,k)_{k-1}-generic collections: k distinct sets of
/// size k-1 satisfying the partition inequality.
class KMinusOneCollectionStream {
 public:
  KMinusOneCollectionStream(int n, int k);
  bool next(SubsetCollection& out);

 private:
  int n_, k_;
  std::vector<SubsetMask> subsets_;
  std::vector<SetPartition> parts_;
  std::vector<std::size_t> idx_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SubsetCollection> enumerate_generic(int n, int k, int ell);
std::vector<SubsetCollection> enumerate_km1_generic(int n, int k);

/// All subsets of [n] of the given size in lexicographic order.
std::vector<SubsetMask> subsets_of_size(int n, int size);

}  // namespace hmds
