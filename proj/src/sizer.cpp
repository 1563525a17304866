#include "hmds/sizer.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "hmds/random.hpp"

namespace hmds::sizer {

namespace {

BigInt pow_int(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigRational pow_rat(const BigRational& base, unsigned e) {
  return BigRational(pow_int(numerator(base), e), pow_int(denominator(base), e));
}

BigInt ceil_rat(const BigRational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) < numerator(r)) ++q;
  return q;
}

BigInt binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

BigInt binom_upto(int n, int k) {
  BigInt s = 0;
  for (int i = 0; i <= k; ++i) s += binom(n, i);
  return s;
}

BoundValue make_value(BigInt v, std::string formula, std::string note = {}) {
  BoundValue out;
  out.log2 = log2_of(v);
  out.exact = std::move(v);
  out.formula = std::move(formula);
  out.note = std::move(note);
  return out;
}

BigRational dependency_count(const BoundParams& p, Form form) {
  if (form == Form::Stated) return first_factor(p) * BigRational(second_factor(p));
  const int d = p.delta();
  const int m = std::min(d, p.n);
  const int lo = (d + p.ell - 1) / p.ell;
  const BigInt per = pow_int(binom_upto(m, p.k), static_cast<unsigned>(p.ell));
  BigInt s = 0;
  for (int j = lo; j <= m; ++j) s += binom(p.n, j) * per;
  return BigRational(s);
}

}  // namespace

BigRational euler_upper() { return BigRational(271829, 100000); }

void BoundParams::validate() const {
  if (k < 1 || k > n || ell < 2)
    throw std::invalid_argument("need 1 <= k <= n and l >= 2; got n=" + std::to_string(n) + " k=" +
                                std::to_string(k) + " l=" + std::to_string(ell));
}

double log2_of(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits < 60) return std::log2(v.convert_to<double>());
  const unsigned shift = bits - 60;
  return std::log2(static_cast<BigInt>(v >> shift).convert_to<double>()) + shift;
}

std::int64_t degree_bound(int k, int ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("need k >= 1 and l >= 1");
  return static_cast<std::int64_t>(ell) * k * k;
}

BigRational first_factor(const BoundParams& p) {
  p.validate();
  const int d = p.delta();
  const BigRational two_n(pow_int(2, static_cast<unsigned>(p.n)));
  const BigRational inner = euler_upper() * p.n * p.ell / d;
  const BigRational other = BigRational(d) * pow_rat(inner, static_cast<unsigned>(d));
  return std::min(two_n, other);
}

BigInt second_factor(const BoundParams& p) {
  p.validate();
  const int m = std::min(p.delta(), p.n);
  const BigInt a = pow_int(2, static_cast<unsigned>(p.ell * m));
  const BigInt b = pow_int(p.k, static_cast<unsigned>(p.ell)) * pow_int(m, static_cast<unsigned>(p.k * p.ell));
  return std::min(a, b);
}

BoundValue dependency_bound(const BoundParams& p, Form form) {
  p.validate();
  return make_value(ceil_rat(dependency_count(p, form)), form == Form::Stated ? "dependency" : "dependency-proof-form",
                    form == Form::Stated ? kEulerNote : "");
}

BoundValue bound_new(const BoundParams& p, Form form) {
  p.validate();
  const BigRational v = euler_upper() * degree_bound(p.k, p.ell) * dependency_count(p, form);
  return make_value(ceil_rat(v), form == Form::Stated ? "new" : "new-proof-form", kEulerNote);
}

BoundValue bound_prior(const BoundParams& p) {
  p.validate();
  const BigInt v = BigInt(p.ell) * p.n * p.n * pow_int(binom_upto(p.n, p.k), static_cast<unsigned>(p.ell));
  return make_value(v, "prior", "binomial sum over sizes 0..k");
}

std::vector<BoundRow> compare_bounds(int n_lo, int n_hi, int k_lo, int k_hi, int ell_lo, int ell_hi) {
  std::vector<BoundRow> rows;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = k_lo; k <= std::min(k_hi, n); ++k)
      for (int ell = ell_lo; ell <= ell_hi; ++ell) {
        BoundParams p{n, k, ell};
        p.validate();
        const auto nb = bound_new(p);
        const auto pb = bound_prior(p);
        BoundRow r;
        r.params = p;
        r.log2_new = nb.log2;
        r.log2_prior = pb.log2;
        r.delta_below_n = p.delta() < n;
        r.new_smaller = nb.exact < pb.exact;
        r.first_branch = first_factor(p) == BigRational(pow_int(2, static_cast<unsigned>(n))) ? "2^n" : "D(enl/D)^D";
        const int m = std::min(p.delta(), n);
        r.second_branch = second_factor(p) == pow_int(2, static_cast<unsigned>(ell * m)) ? "2^(l m)" : "k^l m^(kl)";
        rows.push_back(std::move(r));
      }
  return rows;
}

namespace {

gf::Field field_for_search(int n, std::uint64_t q) {
  if (!gf::prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (q < static_cast<std::uint64_t>(n))
    throw std::invalid_argument("need q >= n for distinct points; got q=" + std::to_string(q));
  return gf::Field::of_order(q);
}

}  // namespace

SearchResult random_search(int n, int k, int ell, std::uint64_t q, std::uint64_t seed, std::uint64_t max_trials,
                           const verifier::Options& opt) {
  const auto field = field_for_search(n, q);
  SearchResult res;
  for (std::uint64_t t = 0; t < max_trials; ++t) {
    SplitMix64 rng(derive_seed(seed, t));
    std::vector<gf::Elem> pts;
    std::set<gf::Elem> used;
    while (pts.size() < static_cast<std::size_t>(n)) {
      const auto x = static_cast<gf::Elem>(rng.below(q));
      if (used.insert(x).second) pts.push_back(x);
    }
    rs::RSCode code(field, std::move(pts), k);
    ++res.trials;
    auto rep = verifier::is_mds_ell_reduced(rs::vandermonde(code), ell, rs::poly_det(code), opt);
    if (rep.holds) {
      res.code = std::move(code);
      res.report = std::move(rep);
      return res;
    }
  }
  return res;
}

MinQResult exhaustive_min_q(int n, int k, int ell, std::uint64_t q_max, const verifier::Options& opt) {
  if (k < 1 || k > n || ell < 2) throw std::invalid_argument("need 1 <= k <= n and l >= 2");
  MinQResult res;
  for (std::uint64_t q : gf::prime_powers_between(std::max<std::uint64_t>(2, static_cast<std::uint64_t>(n)), q_max)) {
    const auto field = gf::Field::of_order(q);
    MinQAttempt att;
    att.q = q;
    // Pin 0 and 1 (when n >= 2) and choose the rest from {2, ..., q-1}.
    const int pinned = std::min(n, 2);
    const int free = n - pinned;
    std::vector<gf::Elem> pts;
    for (int i = 0; i < pinned; ++i) pts.push_back(static_cast<gf::Elem>(i));
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(free));
    for (int i = 0; i < free; ++i) idx[static_cast<std::size_t>(i)] = 2 + static_cast<std::uint64_t>(i);
    while (true) {
      auto all = pts;
      for (auto v : idx) all.push_back(static_cast<gf::Elem>(v));
      rs::RSCode code(field, all, k);
      ++att.point_sets;
      if (verifier::is_mds_ell_reduced(rs::vandermonde(code), ell, rs::poly_det(code), opt).holds) {
        att.found = true;
        res.q = q;
        res.witness = std::move(code);
        break;
      }
      int i = free;
      while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == q - static_cast<std::uint64_t>(free - i + 1)) --i;
      if (i == 0) break;
      ++idx[static_cast<std::size_t>(i - 1)];
      for (int j = i; j < free; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    res.attempts.push_back(att);
    if (att.found) break;
  }
  return res;
}

}  // namespace hmds::sizer
