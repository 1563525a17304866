// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bound_oracle.hpp"
#include "hmds/io.hpp"
#include "hmds/listdec.hpp"
#include "hmds/random.hpp"
#include "hmds/rs.hpp"
#include "hmds/sizer.hpp"
#include "hmds/verifier.hpp"

using namespace hmds;
using gf::Field;
using linalg::Matrix;
using rs::RSCode;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string str(const RSCode& c) {
  std::ostringstream s;
  s << "q=" << c.field().q() << " k=" << c.k() << " pts=";
  for (std::size_t i = 0; i < c.points().size(); ++i) s << (i ? "," : "") << c.points()[i];
  return s.str();
}

std::vector<gf::Elem> distinct_points(std::uint64_t q, int n, SplitMix64& rng) {
  std::vector<gf::Elem> pts;
  while (static_cast<int>(pts.size()) < n) {
    const auto x = static_cast<gf::Elem>(rng.below(q));
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  return pts;
}

// Seeded RS sample: n <= 7, k <= 4, prime power q <= 13, q >= n.
std::vector<RSCode> rs_sample() {
  const std::vector<std::uint64_t> qs = gf::prime_powers_between(2, 13);
  SplitMix64 rng(20240601);
  std::vector<RSCode> out;
  while (out.size() < 200) {
    const auto q = qs[rng.below(qs.size())];
    const int kmax = static_cast<int>(std::min<std::uint64_t>(4, q));
    const int k = 1 + static_cast<int>(rng.below(kmax));
    const int nmax = static_cast<int>(std::min<std::uint64_t>(7, q));
    const int n = k + static_cast<int>(rng.below(nmax - k + 1));
    out.emplace_back(Field::of_order(q), distinct_points(q, n, rng), k);
  }
  return out;
}

const std::vector<RSCode>& sample() {
  static const auto s = rs_sample();
  return s;
}

// Extra length-6 dimension-3 codes; over GF(<=13) only GF(11) has any.
const std::vector<RSCode>& extras() {
  static const std::vector<RSCode> e = [] {
    std::vector<RSCode> v;
    const auto j = io::read_json_file(std::string(FIXTURE_DIR) + "/rs_6_3_gf11.json");
    v.push_back(*io::code_from_json(j).rs);
    for (std::uint64_t q : {11, 16, 17})
      for (std::uint64_t seed : {2, 3}) {
        const auto r = sizer::random_search(6, 3, 3, q, seed, 10000);
        if (r.code) v.push_back(*r.code);
      }
    return v;
  }();
  return e;
}

bool holds(const Matrix& v, int ell) {
  if (ell == 1) return verifier::is_mds(v).holds;
  return verifier::is_mds_ell(v, ell, verifier::Method::BlockDet).holds;
}

Outcome criterion_agreement() {
  std::uint64_t checked = 0, disagree = 0;
  std::string first;
  for (const auto& code : sample()) {
    const auto v = rs::vandermonde(code);
    const auto sub = verifier::subspace_criterion(v);
    const auto blk = verifier::block_det_criterion(v);
    const auto poly = rs::poly_det(code);
    for (int ell = 2; ell <= 3; ++ell) {
      GenericCollectionStream stream(code.n(), code.k(), ell);
      SubsetCollection c;
      while (stream.next(c)) {
        ++checked;
        const bool a = sub.trivial_intersection(c);
        if (a != blk.trivial_intersection(c) || a != poly.trivial_intersection(c)) {
          if (!disagree++) first = str(code) + " " + c.to_string();
        }
      }
    }
  }
  Outcome o{disagree == 0, std::to_string(sample().size()) + " codes, " + std::to_string(checked) +
                               " collections, " + std::to_string(disagree) + " disagreements"};
  if (disagree) o.detail += "; first " + first;
  return o;
}

Outcome direct_higher_orders() {
  std::vector<RSCode> fixtures;
  for (const auto& c : sample())
    if (c.k() == 3 && c.n() <= 6 && holds(rs::vandermonde(c), 3)) fixtures.push_back(c);
  for (const auto& c : extras()) fixtures.push_back(c);
  int bad = 0;
  std::string first;
  for (const auto& c : fixtures)
    for (int ell : {4, 5}) {
      const auto r = verifier::is_mds_ell(rs::vandermonde(c), ell, verifier::Method::BlockDet);
      if (!r.holds && !bad++) first = str(c) + " ell=" + std::to_string(ell);
    }
  int six = 0;
  for (const auto& c : fixtures) six += c.n() == 6;
  Outcome o{bad == 0 && six > 0, std::to_string(fixtures.size()) + " MDS(3) codes (" + std::to_string(six) +
                                     " of length 6) checked at l=4,5, " + std::to_string(bad) + " counterexamples"};
  if (bad) o.detail += "; first " + first;
  return o;
}

std::vector<Matrix> random_generators() {
  SplitMix64 rng(77);
  const std::vector<std::uint64_t> qs = {5, 7, 8, 11, 13};
  std::vector<Matrix> out;
  while (out.size() < 40) {
    const auto f = Field::of_order(qs[rng.below(qs.size())]);
    const std::size_t k = 2 + rng.below(3), n = k + 1 + rng.below(7 - k);
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<gf::Elem>(rng.below(f.q()));
    if (linalg::rank(m) == k) out.push_back(m);
  }
  return out;
}

Outcome reduced_vs_full() {
  std::vector<Matrix> codes;
  for (const auto& c : sample()) codes.push_back(rs::vandermonde(c));
  for (const auto& c : extras()) codes.push_back(rs::vandermonde(c));
  for (auto& m : random_generators()) codes.push_back(m);
  int runs = 0, fails = 0, mismatch = 0, unverified = 0;
  std::string first;
  for (const auto& v : codes) {
    for (int ell = 3; ell <= 5; ++ell) {
      const auto full = verifier::is_mds_ell(v, ell, verifier::Method::BlockDet);
      const auto red = verifier::is_mds_ell_reduced(v, ell, verifier::Method::BlockDet);
      ++runs;
      if (full.holds != red.holds) {
        if (!mismatch++) first = "k=" + std::to_string(v.rows()) + " ell=" + std::to_string(ell);
        continue;
      }
      if (!full.holds) {
        ++fails;
        if (!verifier::witness_rechecks(v, full) || !verifier::witness_rechecks(v, red)) ++unverified;
      }
    }
  }
  Outcome o{mismatch == 0 && unverified == 0,
            std::to_string(codes.size()) + " codes, " + std::to_string(runs) + " runs, " + std::to_string(fails) +
                " failing with rechecked witnesses, " + std::to_string(mismatch) + " verdict mismatches, " +
                std::to_string(unverified) + " witnesses not rechecking"};
  if (mismatch) o.detail += "; first " + first;
  return o;
}

Outcome transforms() {
  std::vector<RSCode> fixtures = sample();
  for (const auto& c : extras()) fixtures.push_back(c);
  int expurgations = 0, shortenings = 0, chained = 0, bad = 0, outside = 0;
  std::string first;
  auto fail = [&](const RSCode& c, const std::string& what) {
    if (!bad++) first = what + " on " + str(c);
  };
  for (const auto& c : fixtures) {
    const int n = c.n(), k = c.k();
    if (k < 2) continue;
    const auto v = rs::vandermonde(c);
    if (holds(v, k)) {
      if (n >= (k - 2) * (k - 1) + 1) {
        ++expurgations;
        if (!holds(rs::vandermonde(rs::expurgate(c)), k - 1)) fail(c, "expurgation");
      } else {
        ++outside;
      }
      for (int j = 0; j < n; ++j) {
        ++shortenings;
        if (!holds(rs::vandermonde(rs::pseudo_shorten(c, j)), k - 1)) fail(c, "pseudo-shortening j=" + std::to_string(j + 1));
      }
    }
    // (n, k)-MDS(l) with n >= (l-1)(k-1)+1 expurgates to (n, k-1)-MDS(l).
    for (int ell = 2; ell <= 4; ++ell) {
      if (n < (ell - 1) * (k - 1) + 1 || !holds(v, ell)) continue;
      ++chained;
      if (!holds(rs::vandermonde(rs::expurgate(c)), ell)) fail(c, "order-preserving expurgation l=" + std::to_string(ell));
    }
  }
  Outcome o{bad == 0 && expurgations > 0 && shortenings > 0 && chained > 0,
            std::to_string(expurgations) + " expurgations in the length regime (" + std::to_string(outside) +
                " MDS(k) codes below it skipped), " + std::to_string(shortenings) + " pseudo-shortenings, " +
                std::to_string(chained) + " order-preserving expurgations, " + std::to_string(bad) +
                " counterexamples"};
  if (bad) o.detail += "; first " + first;
  return o;
}

Outcome duality() {
  int codes = 0, checks = 0, bad = 0, skipped = 0;
  std::string first;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    const auto f = Field::of_order(q);
    const int nmax = static_cast<int>(std::min<std::uint64_t>(6, q));
    for (int n = 1; n <= nmax; ++n)
      for (SubsetMask s : subsets_of_size(static_cast<int>(q), n)) {
        std::vector<gf::Elem> pts;
        for (int e : subset_elements(s)) pts.push_back(static_cast<gf::Elem>(e));
        for (int k = 1; k <= std::min(3, n); ++k) {
          ++codes;
          const auto v = rs::vandermonde(RSCode(f, pts, k));
          for (int ell = 1; ell <= 2; ++ell) {
            if (static_cast<std::uint64_t>(ell) >= q) {
              ++skipped;
              continue;
            }
            ++checks;
            const auto r = listdec::duality_check(v, ell);
            if (!r.holds && !bad++) first = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" +
                                            std::to_string(k) + " ell=" + std::to_string(ell);
          }
        }
      }
  }
  Outcome o{bad == 0, std::to_string(codes) + " codes, " + std::to_string(checks) + " comparisons (" +
                          std::to_string(skipped) + " with list size >= q skipped), " + std::to_string(bad) +
                          " disagreements"};
  if (bad) o.detail += "; first " + first;
  return o;
}

Outcome degree_budget() {
  const auto f = Field::make(gf::next_prime((1u << 20) + 1));
  SplitMix64 rng(4242);
  int bad = 0, max_degree = 0;
  for (int t = 0; t < 50; ++t) {
    int k, ell, n;
    std::vector<SubsetCollection> cols;
    // k = 1, l = 3 has no collection without an empty set; redraw.
    do {
      k = 1 + static_cast<int>(rng.below(4));
      ell = 2 + static_cast<int>(rng.below(2));
      n = std::max(k + 1, 3) + static_cast<int>(rng.below(3));
      cols = enumerate_generic(n, k, ell);
    } while (cols.empty());
    const auto& c = cols[rng.below(cols.size())];
    const auto pts = distinct_points(f.q(), n, rng);
    const auto r = rs::block_det_degree_check(f, pts, k, c, static_cast<int>(rng.below(n)), rng.next());
    if (!r.reproduced || r.measured_degree > r.budget) ++bad;
    max_degree = std::max(max_degree, r.measured_degree);
  }
  return {bad == 0, "50 instances over GF(" + std::to_string(f.q()) + "), " + std::to_string(bad) +
                        " failures, highest interpolant degree " + std::to_string(max_degree)};
}

Outcome bounds() {
  int rows = 0, bad = 0;
  std::string first;
  const std::vector<std::pair<int, int>> kl = {{2, 2}, {3, 3}, {4, 2}, {2, 5}, {5, 4}};
  for (int n : {5, 8, 12, 20, 40, 64})
    for (const auto& [k, ell] : kl) {
      ++rows;
      const sizer::BoundParams p{n, k, ell};
      const auto o = bound_oracle::evaluate(n, k, ell);
      const bool ok = sizer::dependency_bound(p).exact.str() == o.dependency.get_str() &&
                      sizer::bound_new(p).exact.str() == o.fresh.get_str() &&
                      sizer::bound_prior(p).exact.str() == o.prior.get_str();
      if (!ok && !bad++) first = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(ell) + ")";
    }
  int winners = 0;
  std::string example;
  for (const auto& r : sizer::compare_bounds(10, 100, 2, 5, 2, 4))
    if (r.delta_below_n && r.new_smaller && !winners++)
      example = "(" + std::to_string(r.params.n) + "," + std::to_string(r.params.k) + "," +
                std::to_string(r.params.ell) + ")";
  Outcome o{bad == 0 && rows == 30 && winners > 0,
            std::to_string(rows) + " grid rows, " + std::to_string(bad) + " mismatches; " + std::to_string(winners) +
                " sweep rows where the new bound wins below n, first " + example};
  if (bad) o.detail += "; first mismatch " + first;
  return o;
}

Outcome search() {
  const auto fixture = io::read_json_file(std::string(FIXTURE_DIR) + "/min_q_6_3_3.json");
  const std::uint64_t pinned = fixture["q"];
  const auto m = sizer::exhaustive_min_q(6, 3, 3, 32);
  bool counts_match = true;
  for (const auto& a : m.attempts) {
    const auto key = std::to_string(a.q);
    if (fixture["points_checked"].contains(key) && fixture["points_checked"][key] != a.point_sets)
      counts_match = false;
  }
  if (!m.q || *m.q != pinned || !counts_match)
    return {false, "exhaustive minimum " + (m.q ? std::to_string(*m.q) : std::string("none")) + ", fixture " +
                       std::to_string(pinned)};
  const auto r = sizer::random_search(6, 3, 3, pinned, 1, 10000);
  if (!r.code) return {false, "no code in 10000 trials at q=" + std::to_string(pinned)};
  const auto v = rs::vandermonde(*r.code);
  const bool block = verifier::is_mds_ell(v, 3, verifier::Method::BlockDet).holds;
  const bool sub = verifier::is_mds_ell(v, 3, verifier::Method::Subspace).holds;
  const bool pairs = rs::mds3_criterion(*r.code).holds;
  // The pair criterion must also reject where the general verifier does.
  int pair_checks = 0, pair_bad = 0;
  for (const auto& c : sample())
    if (c.k() == 3) {
      ++pair_checks;
      if (rs::mds3_criterion(c).holds != holds(rs::vandermonde(c), 3)) ++pair_bad;
    }
  return {block && sub && pairs && pair_bad == 0,
          "min q " + std::to_string(*m.q) + " matches fixture; seed 1 found " + str(*r.code) + " after " +
              std::to_string(r.trials) + " trials; rechecks block-det " + (block ? "yes" : "no") + ", subspace " +
              (sub ? "yes" : "no") + ", pair criterion " + (pairs ? "yes" : "no") + "; pair vs general on " +
              std::to_string(pair_checks) + " sample codes, " + std::to_string(pair_bad) + " disagreements"};
}

Outcome monotonicity(const verifier::MonotonicityAudit& audit) {
  for (const auto& c : sample()) {
    const auto v = rs::vandermonde(c);
    for (int ell = 2; ell <= 4; ++ell) verifier::is_mds_ell_reduced(v, ell, rs::poly_det(c));
  }
  const auto bad = audit.violations();
  Outcome o{bad.empty() && audit.runs() > 0,
            std::to_string(audit.runs()) + " recorded runs, " + std::to_string(bad.size()) + " violations"};
  if (!bad.empty()) o.detail += "; first " + bad.front();
  return o;
}

}  // namespace

int main() {
  verifier::MonotonicityAudit audit;
  verifier::set_audit(&audit);

  struct Item {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {1, "criterion agreement", criterion_agreement},
      {2, "direct l=4,5 on MDS(3) codes", direct_higher_orders},
      {4, "reduced vs full verifier", reduced_vs_full},
      {5, "expurgation and pseudo-shortening", transforms},
      {6, "MDS(l+1) vs dual LD-MDS", duality},
      {7, "block determinant degree budget", degree_budget},
      {8, "bound calculators", bounds},
      {9, "search consistency", search},
      // Last, so it sees every run above.
      {3, "monotonicity across all runs", [&] { return monotonicity(audit); }},
  };

  int failed = 0;
  for (const auto& it : items) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", it.id, it.name, o.detail.c_str(), s);
    std::fflush(stdout);
  }
  verifier::set_audit(nullptr);
  std::printf("%d of %zu criteria failed\n", failed, items.size());
  return failed ? 1 : 0;
}
