#include "hmds/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hmds/random.hpp"

namespace hmds::verifier {

namespace {

std::atomic<MonotonicityAudit*> g_audit{nullptr};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void audit(const Matrix& v, int ell, bool holds) {
  if (auto* a = g_audit.load()) a->record(fingerprint(v), ell, holds);
}

std::optional<std::size_t> first_failure(const std::vector<SubsetCollection>& batch, const Criterion& crit,
                                         unsigned threads) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= batch.size() || i >= best.load()) return;
      if (!crit.trivial_intersection(batch[i])) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(batch.size()));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

// Runs the criterion over a collection stream; the first failure in stream
// order becomes the witness regardless of the thread count.
template <class Stream>
void run_stream(Stream& stream, const Criterion& crit, const Options& opt, VerificationReport& rep) {
  SubsetCollection c;
  const std::size_t batch_size = std::max<std::size_t>(opt.batch, 1);
  if (opt.threads <= 1) {
    while (stream.next(c)) {
      ++rep.collections_checked;
      if (!crit.trivial_intersection(c)) {
        rep.holds = false;
        rep.witness = c;
        return;
      }
      if (opt.progress && rep.collections_checked % batch_size == 0) opt.progress(rep.collections_checked);
    }
    return;
  }
  std::vector<SubsetCollection> batch;
  batch.reserve(batch_size);
  while (true) {
    batch.clear();
    while (batch.size() < batch_size && stream.next(c)) batch.push_back(c);
    if (batch.empty()) return;
    if (auto fail = first_failure(batch, crit, opt.threads)) {
      rep.collections_checked += *fail + 1;
      rep.holds = false;
      rep.witness = batch[*fail];
      return;
    }
    rep.collections_checked += batch.size();
    if (opt.progress) opt.progress(rep.collections_checked);
  }
}

}  // namespace

std::string mds_label(int ell) { return "MDS(" + std::to_string(ell) + ")"; }

Criterion subspace_criterion(const Matrix& v) {
  return {"subspace", [v](const SubsetCollection& c) { return linalg::intersect_dim(v, c) == 0; }};
}

Criterion block_det_criterion(const Matrix& v) {
  return {"block-det", [v](const SubsetCollection& c) { return linalg::det(linalg::block_matrix(v, c)) != 0; }};
}

Criterion make_criterion(const Matrix& v, Method m) {
  return m == Method::Subspace ? subspace_criterion(v) : block_det_criterion(v);
}

VerificationReport is_mds(const Matrix& v) {
  Stopwatch sw;
  const int k = static_cast<int>(v.rows());
  const int n = static_cast<int>(v.cols());
  if (k > n) throw std::invalid_argument("MDS check requires k <= n");
  VerificationReport rep;
  rep.property = mds_label(1);
  rep.method = "rank";
  if (k > 0) {
    for (auto set : subsets_of_size(n, k)) {
      ++rep.collections_checked;
      if (linalg::rank(v.columns(set)) < static_cast<std::size_t>(k)) {
        rep.holds = false;
        rep.witness = SubsetCollection(n, {set});
        break;
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  audit(v, 1, rep.holds);
  return rep;
}

namespace {

VerificationReport mds_failure_as(const VerificationReport& base, int ell) {
  VerificationReport rep = base;
  rep.property = mds_label(ell);
  rep.notes.push_back("generator is not MDS: fails MDS(1), so every higher order fails");
  return rep;
}

}  // namespace

VerificationReport is_mds_ell(const Matrix& v, int ell, const Criterion& crit, const Options& opt) {
  if (ell < 2) throw std::invalid_argument("is_mds_ell requires l >= 2");
  Stopwatch sw;
  const int k = static_cast<int>(v.rows());
  const int n = static_cast<int>(v.cols());
  auto base = is_mds(v);
  if (!base.holds || ell == 2 || k == 0) {
    VerificationReport rep = base.holds ? base : mds_failure_as(base, ell);
    rep.property = mds_label(ell);
    if (base.holds) rep.notes.push_back("MDS(2) coincides with MDS(1)");
    rep.elapsed_ms = sw.ms();
    audit(v, ell, rep.holds);
    return rep;
  }
  VerificationReport rep;
  rep.property = mds_label(ell);
  rep.method = crit.name;
  GenericCollectionStream stream(n, k, ell);
  run_stream(stream, crit, opt, rep);
  rep.elapsed_ms = sw.ms();
  audit(v, ell, rep.holds);
  return rep;
}

VerificationReport is_mds_ell(const Matrix& v, int ell, Method m, const Options& opt) {
  return is_mds_ell(v, ell, make_criterion(v, m), opt);
}

VerificationReport is_mds_ell_reduced(const Matrix& v, int ell, const Criterion& crit, const Options& opt) {
  if (ell < 2) throw std::invalid_argument("is_mds_ell_reduced requires l >= 2");
  Stopwatch sw;
  const int k = static_cast<int>(v.rows());
  const int n = static_cast<int>(v.cols());
  const int target = std::min(ell, std::max(k, 2));
  VerificationReport rep;
  std::vector<std::string> notes;
  if (target < ell)
    notes.push_back("order reduced from " + std::to_string(ell) + " to k = " + std::to_string(target));

  auto finish = [&](VerificationReport r, const std::string& method) {
    r.property = mds_label(ell);
    r.method = method;
    r.notes.insert(r.notes.begin(), notes.begin(), notes.end());
    r.elapsed_ms = sw.ms();
    audit(v, ell, r.holds);
    return r;
  };

  if (target < k || target <= 2) {
    auto r = is_mds_ell(v, target, crit, opt);
    return finish(std::move(r), "reduced/" + crit.name);
  }

  // target == k >= 3: MDS(3..k-1) chain, then (n,k,k)_{k-1} collections.
  std::uint64_t checked = 0;
  {
    auto r = is_mds(v);
    checked += r.collections_checked;
    if (!r.holds) {
      r = mds_failure_as(r, ell);
      r.collections_checked = checked;
      return finish(std::move(r), "reduced/rank");
    }
  }
  for (int step = 3; step < k; ++step) {
    auto r = is_mds_ell(v, step, crit, opt);
    checked += r.collections_checked;
    if (!r.holds) {
      r.collections_checked = checked;
      r.notes.push_back("fails lower order " + mds_label(step));
      return finish(std::move(r), "reduced/" + crit.name);
    }
  }
  rep.holds = true;
  KMinusOneCollectionStream stream(n, k);
  run_stream(stream, crit, opt, rep);
  rep.collections_checked += checked;
  return finish(std::move(rep), "reduced/" + crit.name);
}

VerificationReport is_mds_ell_reduced(const Matrix& v, int ell, Method m, const Options& opt) {
  return is_mds_ell_reduced(v, ell, make_criterion(v, m), opt);
}

VerificationReport verify(const Matrix& v, int ell, const Criterion& crit, const Options& opt) {
  if (ell == 1) return is_mds(v);
  return is_mds_ell(v, ell, crit, opt);
}

bool witness_rechecks(const Matrix& v, const VerificationReport& report) {
  if (report.holds || !report.witness) return false;
  const auto& w = *report.witness;
  const int k = static_cast<int>(v.rows());
  if (w.ell() == 1) {
    const auto set = w.sets()[0];
    return subset_size(set) <= k &&
           linalg::intersect_dim(v, w) < static_cast<std::size_t>(subset_size(set));
  }
  for (auto s : w.sets())
    if (subset_size(s) > k) return false;
  if (w.total_size() != (w.ell() - 1) * k || !is_generic(w, k)) return false;
  return linalg::intersect_dim(v, w) > 0;
}

std::uint64_t default_oracle_prime() {
  static const std::uint64_t p = gf::next_prime(std::uint64_t{1} << 20);
  return p;
}

namespace {

Matrix random_matrix(const gf::Field& f, std::size_t rows, std::size_t cols, SplitMix64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<gf::Elem>(rng.below(f.q()));
  return m;
}

}  // namespace

std::size_t generic_dim_oracle(const GenericDimQuery& q) {
  if (q.trials < 1) throw std::invalid_argument("generic_dim_oracle needs at least one trial");
  const auto field = gf::Field::make(q.prime ? q.prime : default_oracle_prime());
  SplitMix64 rng(q.seed);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (int t = 0; t < q.trials; ++t) {
    auto w = random_matrix(field, static_cast<std::size_t>(q.k), static_cast<std::size_t>(q.n), rng);
    best = std::min(best, linalg::intersect_dim(w, q.collection));
    if (best == 0) break;
  }
  return best;
}

VerificationReport check_definition3(const Matrix& v, int ell, int trials, std::uint64_t seed, std::uint64_t prime) {
  if (ell < 1) throw std::invalid_argument("check_definition3 requires l >= 1");
  if (trials < 1) throw std::invalid_argument("check_definition3 needs at least one trial");
  Stopwatch sw;
  const int k = static_cast<int>(v.rows());
  const int n = static_cast<int>(v.cols());
  const std::uint64_t pr = prime ? prime : default_oracle_prime();
  const auto big = gf::Field::make(pr);
  SplitMix64 rng(seed);
  std::vector<Matrix> samples;
  for (int t = 0; t < trials; ++t)
    samples.push_back(random_matrix(big, static_cast<std::size_t>(k), static_cast<std::size_t>(n), rng));

  VerificationReport rep;
  rep.property = mds_label(ell);
  rep.method = "definition3-sampling";
  if (v.field().p() != pr) {
    std::ostringstream os;
    os << "generic reference sampled over GF(" << pr << "); characteristic differs from " << v.field().name();
    rep.notes.push_back(os.str());
  }

  std::vector<SubsetMask> subsets;
  for (int s = k; s >= 0; --s)
    for (auto m : subsets_of_size(n, s)) subsets.push_back(m);
  const std::size_t total = subsets.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(ell), 0);
  std::vector<SubsetMask> sets(static_cast<std::size_t>(ell));
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) sets[i] = subsets[idx[i]];
    SubsetCollection c(n, sets);
    ++rep.collections_checked;
    const auto actual = linalg::intersect_dim(v, c);
    std::size_t generic = std::numeric_limits<std::size_t>::max();
    for (const auto& w : samples) {
      generic = std::min(generic, linalg::intersect_dim(w, c));
      if (generic == 0) break;
    }
    if (actual != generic) {
      rep.holds = false;
      rep.witness = c;
      std::ostringstream os;
      os << "dim " << actual << " vs generic " << generic << " at " << c.to_string();
      rep.notes.push_back(os.str());
      break;
    }
    // Next non-decreasing index tuple.
    std::size_t i = idx.size();
    while (i-- > 0 && idx[i] + 1 >= total) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[i];
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

std::uint64_t fingerprint(const Matrix& v) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  mix(v.field().p());
  mix(static_cast<std::uint64_t>(v.field().m()));
  for (auto c : v.field().modulus()) mix(c);
  mix(v.rows());
  mix(v.cols());
  for (auto e : v.entries()) mix(e);
  return h;
}

void MonotonicityAudit::record(std::uint64_t fp, int ell, bool holds) {
  std::lock_guard lock(mu_);
  ++runs_;
  auto& m = verdicts_[fp];
  m[ell] = holds;
  for (const auto& [order, verdict] : m) {
    for (const auto& [lower, lower_verdict] : m) {
      if (lower >= order || order < 3) continue;
      if (verdict && !lower_verdict) {
        std::ostringstream os;
        os << "matrix " << std::hex << fp << std::dec << " verified MDS(" << order << ") but failed MDS(" << lower
           << ")";
        if (std::find(violations_.begin(), violations_.end(), os.str()) == violations_.end())
          violations_.push_back(os.str());
      }
    }
  }
}

std::vector<std::string> MonotonicityAudit::violations() const {
  std::lock_guard lock(mu_);
  return violations_;
}

std::size_t MonotonicityAudit::runs() const {
  std::lock_guard lock(mu_);
  return runs_;
}

void set_audit(MonotonicityAudit* audit) { g_audit.store(audit); }

void report_verdict(const Matrix& v, int ell, bool holds) { audit(v, ell, holds); }

}  // namespace hmds::verifier
