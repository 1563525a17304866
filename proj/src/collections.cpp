#include "hmds/collections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hmds {

std::vector<int> subset_elements(SubsetMask a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(subset_size(a)));
  while (a) {
    out.push_back(__builtin_ctzll(a));
    a &= a - 1;
  }
  return out;
}

SubsetMask subset_from_elements(std::span<const int> zero_based) {
  SubsetMask m = 0;
  for (int e : zero_based) {
    if (e < 0 || e >= kMaxLength) throw std::out_of_range("subset element out of range");
    m |= SubsetMask{1} << e;
  }
  return m;
}

bool subset_lex_less(SubsetMask a, SubsetMask b) {
  while (a && b) {
    const int ea = __builtin_ctzll(a);
    const int eb = __builtin_ctzll(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // proper prefix is smaller
}

bool canonical_less(SubsetMask a, SubsetMask b) {
  const int sa = subset_size(a), sb = subset_size(b);
  if (sa != sb) return sa > sb;
  return subset_lex_less(a, b);
}

SubsetCollection::SubsetCollection(int n, std::vector<SubsetMask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 0 || n > kMaxLength) throw std::invalid_argument("collection ground set size out of range");
  const SubsetMask universe = n == 0 ? 0 : (~SubsetMask{0} >> (64 - n));
  for (auto s : sets_)
    if (s & ~universe) throw std::out_of_range("subset element outside [n]");
  std::sort(sets_.begin(), sets_.end(), canonical_less);
}

int SubsetCollection::total_size() const {
  int t = 0;
  for (auto s : sets_) t += subset_size(s);
  return t;
}

bool SubsetCollection::contains_empty() const {
  return std::any_of(sets_.begin(), sets_.end(), [](SubsetMask s) { return s == 0; });
}

std::vector<std::vector<int>> SubsetCollection::to_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets_.size());
  for (auto s : sets_) {
    auto e = subset_elements(s);
    for (auto& x : e) ++x;
    out.push_back(std::move(e));
  }
  return out;
}

SubsetCollection SubsetCollection::from_lists(int n, const std::vector<std::vector<int>>& one_based) {
  std::vector<SubsetMask> sets;
  sets.reserve(one_based.size());
  for (const auto& list : one_based) {
    SubsetMask m = 0;
    for (int e : list) {
      if (e < 1 || e > n) throw std::out_of_range("subset element " + std::to_string(e) + " outside [n]");
      const SubsetMask bit = SubsetMask{1} << (e - 1);
      if (m & bit) throw std::invalid_argument("repeated element in subset");
      m |= bit;
    }
    sets.push_back(m);
  }
  return SubsetCollection(n, std::move(sets));
}

std::string SubsetCollection::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first_set = true;
  for (const auto& list : to_lists()) {
    if (!first_set) os << ",";
    first_set = false;
    os << "{";
    for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
    os << "}";
  }
  os << "}";
  return os.str();
}

PartitionStream::PartitionStream(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("partitions require l >= 1");
  rgs_.assign(static_cast<std::size_t>(ell), 0);
  prefix_max_.assign(static_cast<std::size_t>(ell), 0);
}

bool PartitionStream::next(SetPartition& out) {
  if (done_) return false;
  if (started_) {
    // Rightmost position that can still grow.
    int i = ell_ - 1;
    while (i >= 1 && rgs_[static_cast<std::size_t>(i)] > prefix_max_[static_cast<std::size_t>(i - 1)]) --i;
    if (i < 1) {
      done_ = true;
      return false;
    }
    ++rgs_[static_cast<std::size_t>(i)];
    for (int j = i; j < ell_; ++j) {
      if (j > i) rgs_[static_cast<std::size_t>(j)] = 0;
      prefix_max_[static_cast<std::size_t>(j)] =
          std::max(j ? prefix_max_[static_cast<std::size_t>(j - 1)] : 0, rgs_[static_cast<std::size_t>(j)]);
    }
  }
  started_ = true;
  const int blocks = prefix_max_.back() + 1;
  out.blocks.assign(static_cast<std::size_t>(blocks), 0);
  for (int j = 0; j < ell_; ++j) out.blocks[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(j)])] |= 1u << j;
  return true;
}

std::vector<SetPartition> partitions(int ell) {
  std::vector<SetPartition> out;
  PartitionStream s(ell);
  SetPartition p;
  while (s.next(p)) out.push_back(p);
  return out;
}

bool is_generic_sets(std::span<const SubsetMask> sets, int k, std::span<const SetPartition> parts) {
  for (const auto& part : parts) {
    const int s = part.size();
    int lhs = 0;
    const int rhs = (s - 1) * k;
    for (auto block : part.blocks) {
      SubsetMask inter = ~SubsetMask{0};
      for (std::uint32_t b = block; b; b &= b - 1) inter &= sets[static_cast<std::size_t>(__builtin_ctz(b))];
      lhs += subset_size(inter);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

bool is_generic(const SubsetCollection& c, int k) {
  for (auto s : c.sets())
    if (subset_size(s) > k) throw std::invalid_argument("collection has a set larger than k");
  if (c.ell() == 0) return true;
  const auto parts = partitions(c.ell());
  return is_generic_sets(c.sets(), k, parts);
}

std::vector<SubsetMask> subsets_of_size(int n, int size) {
  std::vector<SubsetMask> out;
  if (size < 0 || size > n) return out;
  std::vector<int> comb(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(subset_from_elements(comb));
    int i = size - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

GenericCollectionStream::GenericCollectionStream(int n, int k, int ell) : n_(n), k_(k), ell_(ell) {
  if (ell < 2) throw std::invalid_argument("generic collection enumeration requires l >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("enumeration requires 1 <= k <= n");
  if (n > kMaxLength) throw std::invalid_argument("n too large");
  by_size_.resize(static_cast<std::size_t>(k) + 1);
  for (int s = 1; s <= k; ++s) by_size_[static_cast<std::size_t>(s)] = subsets_of_size(n, s);
  parts_ = partitions(ell);
  signature_.assign(static_cast<std::size_t>(ell), 0);
  idx_.assign(static_cast<std::size_t>(ell), 0);
  scratch_.resize(static_cast<std::size_t>(ell));
}

namespace {

// Non-increasing sequences over [1,k] of length l summing to target, in
// ascending lexicographic order.
void collect_signatures(int k, int ell, int target, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  const auto pos = cur.size();
  if (pos == static_cast<std::size_t>(ell)) {
    if (target == 0) out.push_back(cur);
    return;
  }
  const int cap = pos ? cur.back() : k;
  const int rest = ell - static_cast<int>(pos) - 1;
  for (int v = 1; v <= cap; ++v) {
    if (v > target) break;
    if (v + rest * v < target) continue;  // suffix entries are <= v
    if (target - v < rest) continue;      // suffix entries are >= 1
    cur.push_back(v);
    collect_signatures(k, ell, target - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool GenericCollectionStream::advance_signature() {
  if (!sig_ready_) {
    sig_ready_ = true;
    std::vector<int> cur;
    collect_signatures(k_, ell_, (ell_ - 1) * k_, cur, signatures_);
    sig_pos_ = 0;
  } else {
    ++sig_pos_;
  }
  if (sig_pos_ >= signatures_.size()) return false;
  signature_ = signatures_[sig_pos_];
  return true;
}

void GenericCollectionStream::reset_tuple() {
  for (std::size_t i = 0; i < idx_.size(); ++i)
    idx_[i] = (i > 0 && signature_[i] == signature_[i - 1]) ? idx_[i - 1] : 0;
}

bool GenericCollectionStream::advance_tuple() {
  for (std::size_t i = idx_.size(); i-- > 0;) {
    const auto limit = by_size_[static_cast<std::size_t>(signature_[i])].size();
    if (idx_[i] + 1 < limit) {
      ++idx_[i];
      for (std::size_t j = i + 1; j < idx_.size(); ++j)
        idx_[j] = (signature_[j] == signature_[j - 1]) ? idx_[j - 1] : 0;
      return true;
    }
  }
  return false;
}

bool GenericCollectionStream::next(SubsetCollection& out) {
  while (!done_) {
    if (!tuple_ready_) {
      bool found = false;
      while (advance_signature()) {
        bool feasible = true;
        for (int s : signature_)
          if (by_size_[static_cast<std::size_t>(s)].empty()) feasible = false;
        if (feasible) {
          found = true;
          break;
        }
      }
      if (!found) {
        done_ = true;
        return false;
      }
      reset_tuple();
      tuple_ready_ = true;
    } else if (!advance_tuple()) {
      tuple_ready_ = false;
      continue;
    }
    for (std::size_t i = 0; i < idx_.size(); ++i)
      scratch_[i] = by_size_[static_cast<std::size_t>(signature_[i])][idx_[i]];
    ++examined_;
    if (is_generic_sets(scratch_, k_, parts_)) {
      out = SubsetCollection(n_, scratch_);
      return true;
    }
  }
  return false;
}

KMinusOneCollectionStream::KMinusOneCollectionStream(int n, int k) : n_(n), k_(k) {
  if (k < 2) throw std::invalid_argument("(n,k,k)_{k-1} collections require k >= 2");
  if (n > kMaxLength) throw std::invalid_argument("n too large");
  subsets_ = subsets_of_size(n, k - 1);
  parts_ = partitions(k);
  idx_.resize(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx_.size(); ++i) idx_[i] = i;
}

bool KMinusOneCollectionStream::next(SubsetCollection& out) {
  const std::size_t total = subsets_.size();
  const std::size_t r = idx_.size();
  if (total < r) done_ = true;
  std::vector<SubsetMask> sets(r);
  while (!done_) {
    if (started_) {
      std::size_t i = r;
      while (i-- > 0 && idx_[i] == total - r + i) {
      }
      if (i == static_cast<std::size_t>(-1)) {
        done_ = true;
        return false;
      }
      ++idx_[i];
      for (std::size_t j = i + 1; j < r; ++j) idx_[j] = idx_[j - 1] + 1;
    }
    started_ = true;
    for (std::size_t i = 0; i < r; ++i) sets[i] = subsets_[idx_[i]];
    if (is_generic_sets(sets, k_, parts_)) {
      out = SubsetCollection(n_, sets);
      return true;
    }
  }
  return false;
}

std::vector<SubsetCollection> enumerate_generic(int n, int k, int ell) {
  std::vector<SubsetCollection> out;
  GenericCollectionStream s(n, k, ell);
  SubsetCollection c;
  while (s.next(c)) out.push_back(c);
  return out;
}

std::vector<SubsetCollection> enumerate_km1_generic(int n, int k) {
  std::vector<SubsetCollection> out;
  KMinusOneCollectionStream s(n, k);
  SubsetCollection c;
  while (s.next(c)) out.push_back(c);
  return out;
}

}  // namespace hmds
