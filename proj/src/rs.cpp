#include "hmds/rs.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "hmds/random.hpp"

namespace hmds::rs {

RSCode::RSCode(Field field, std::vector<Elem> points, int k)
    : field_(std::move(field)), points_(std::move(points)), k_(k) {
  const int n = static_cast<int>(points_.size());
  if (n > kMaxLength) throw std::invalid_argument("code length above " + std::to_string(kMaxLength));
  if (k_ < 1 || k_ > n)
    throw std::invalid_argument("need 1 <= k <= n; got k=" + std::to_string(k_) + ", n=" + std::to_string(n));
  std::set<Elem> seen;
  for (Elem b : points_) {
    if (!field_.contains(b)) throw std::invalid_argument("point " + std::to_string(b) + " outside " + field_.name());
    if (!seen.insert(b).second) throw std::invalid_argument("repeated evaluation point " + std::to_string(b));
  }
}

Matrix vandermonde(const Field& field, const std::vector<Elem>& points, int k) {
  Matrix v(field, static_cast<std::size_t>(k), points.size());
  for (std::size_t c = 0; c < points.size(); ++c) {
    Elem x = 1;
    for (int r = 0; r < k; ++r) {
      v(static_cast<std::size_t>(r), c) = x;
      x = field.mul(x, points[c]);
    }
  }
  return v;
}

Matrix vandermonde(const RSCode& code) { return vandermonde(code.field(), code.points(), code.k()); }

Elem pi_eval(const RSCode& code, SubsetMask set, Elem x) {
  const auto& f = code.field();
  Elem acc = 1;
  for (int i : subset_elements(set)) {
    if (i >= code.n()) throw std::out_of_range("subset element outside [n]");
    acc = f.mul(acc, f.sub(x, code.points()[static_cast<std::size_t>(i)]));
  }
  return acc;
}

Matrix pi_matrix(const RSCode& code, const SubsetCollection& c) {
  const int k = code.k();
  const auto& sets = c.sets();
  if (sets.empty()) throw std::invalid_argument("empty collection");
  for (auto s : sets)
    if (subset_size(s) > k) throw std::invalid_argument("set larger than k in " + c.to_string());
  if (c.total_size() != (c.ell() - 1) * k)
    throw std::invalid_argument("need sum |A_i| = (l-1)k for " + c.to_string());
  // Canonical order puts a largest set first; it plays the A_1 role.
  const SubsetMask lead = sets.front();
  if (lead == 0) throw std::invalid_argument("largest set is empty");
  const auto rows = subset_elements(lead);
  std::size_t width = 0;
  for (std::size_t j = 1; j < sets.size(); ++j) width += static_cast<std::size_t>(k - subset_size(sets[j]));
  if (width != rows.size()) throw std::logic_error("pi block widths do not match the row count");

  const auto& f = code.field();
  Matrix m(f, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Elem beta = code.points()[static_cast<std::size_t>(rows[r])];
    std::size_t col = 0;
    for (std::size_t j = 1; j < sets.size(); ++j) {
      Elem v = pi_eval(code, sets[j], beta);
      for (int t = 0; t < k - subset_size(sets[j]); ++t) {
        m(r, col++) = v;
        v = f.mul(v, beta);
      }
    }
  }
  return m;
}

bool poly_det_criterion(const RSCode& code, const SubsetCollection& c) {
  return linalg::det(pi_matrix(code, c)) != 0;
}

verifier::Criterion poly_det(const RSCode& code) {
  return {"poly-det", [code](const SubsetCollection& c) { return poly_det_criterion(code, c); }};
}

VerificationReport mds3_criterion(const RSCode& code) {
  if (code.k() != 3) throw std::invalid_argument("pair criterion needs k = 3; got k=" + std::to_string(code.k()));
  const auto start = std::chrono::steady_clock::now();
  const auto& f = code.field();
  const auto& b = code.points();
  const int n = code.n();

  struct Pair {
    SubsetMask mask;
    Elem sum, prod;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c)
      pairs.push_back({(SubsetMask{1} << a) | (SubsetMask{1} << c), f.add(b[a], b[c]), f.mul(b[a], b[c])});

  VerificationReport rep;
  rep.property = verifier::mds_label(3);
  rep.method = "pair-det";
  // det of rows (1, s_i, p_i), expanded along the first column.
  auto det3 = [&](const Pair& x, const Pair& y, const Pair& z) {
    const Elem t1 = f.sub(f.mul(y.sum, z.prod), f.mul(z.sum, y.prod));
    const Elem t2 = f.sub(f.mul(x.sum, z.prod), f.mul(z.sum, x.prod));
    const Elem t3 = f.sub(f.mul(x.sum, y.prod), f.mul(y.sum, x.prod));
    return f.add(f.sub(t1, t2), t3);
  };
  for (std::size_t i = 0; i < pairs.size() && rep.holds; ++i)
    for (std::size_t j = i + 1; j < pairs.size() && rep.holds; ++j) {
      if (pairs[i].mask & pairs[j].mask) continue;
      for (std::size_t l = j + 1; l < pairs.size(); ++l) {
        if (pairs[l].mask & (pairs[i].mask | pairs[j].mask)) continue;
        ++rep.collections_checked;
        if (det3(pairs[i], pairs[j], pairs[l]) == 0) {
          rep.holds = false;
          rep.witness = SubsetCollection(n, {pairs[i].mask, pairs[j].mask, pairs[l].mask});
          break;
        }
      }
    }
  if (n < 6) rep.notes.push_back("fewer than six points: no disjoint pair triple exists");
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  verifier::report_verdict(vandermonde(code), 3, rep.holds);
  return rep;
}

RSCode expurgate(const RSCode& code) {
  if (code.k() < 2) throw std::invalid_argument("expurgation needs k >= 2");
  return RSCode(code.field(), code.points(), code.k() - 1);
}

namespace {

std::vector<Elem> drop_point(const RSCode& code, int j) {
  if (j < 0 || j >= code.n())
    throw std::invalid_argument("column " + std::to_string(j + 1) + " outside [1, " + std::to_string(code.n()) + "]");
  auto pts = code.points();
  pts.erase(pts.begin() + j);
  return pts;
}

}  // namespace

RSCode puncture(const RSCode& code, int j) {
  auto pts = drop_point(code, j);
  if (code.n() <= code.k()) throw std::invalid_argument("puncturing needs n > k");
  return RSCode(code.field(), std::move(pts), code.k());
}

RSCode pseudo_shorten(const RSCode& code, int j) {
  if (code.k() < 2) throw std::invalid_argument("pseudo-shortening needs k >= 2");
  return RSCode(code.field(), drop_point(code, j), code.k() - 1);
}

DegreeCheck block_det_degree_check(const Field& field, const std::vector<Elem>& frozen_points, int k,
                                   const SubsetCollection& c, int vary, std::uint64_t seed) {
  if (vary < 0 || vary >= static_cast<int>(frozen_points.size())) throw std::invalid_argument("bad varied index");
  DegreeCheck out;
  out.budget = c.ell() * k * k;
  out.samples = out.budget + 1;
  out.held_out = out.budget + 2;
  const std::size_t total = static_cast<std::size_t>(out.samples + out.held_out);
  if (field.q() <= total) throw std::invalid_argument("field too small for the sample count");

  SplitMix64 rng(seed);
  std::vector<Elem> xs;
  std::set<Elem> used;
  while (xs.size() < total) {
    const auto x = static_cast<Elem>(rng.below(field.q()));
    if (used.insert(x).second) xs.push_back(x);
  }
  auto pts = frozen_points;
  auto eval = [&](Elem x) {
    pts[static_cast<std::size_t>(vary)] = x;
    return linalg::det(linalg::block_matrix(vandermonde(field, pts, k), c));
  };

  // Newton divided differences on the first `samples` abscissae.
  const auto s = static_cast<std::size_t>(out.samples);
  std::vector<Elem> coef(s);
  for (std::size_t i = 0; i < s; ++i) coef[i] = eval(xs[i]);
  for (std::size_t lvl = 1; lvl < s; ++lvl)
    for (std::size_t i = s - 1; i >= lvl; --i)
      coef[i] = field.div(field.sub(coef[i], coef[i - 1]), field.sub(xs[i], xs[i - lvl]));

  out.measured_degree = 0;
  for (std::size_t i = s; i-- > 0;)
    if (coef[i] != 0) {
      out.measured_degree = static_cast<int>(i);
      break;
    }
  auto interp = [&](Elem x) {
    Elem acc = coef[s - 1];
    for (std::size_t i = s - 1; i-- > 0;) acc = field.add(field.mul(acc, field.sub(x, xs[i])), coef[i]);
    return acc;
  };
  out.reproduced = true;
  for (std::size_t i = s; i < total; ++i)
    if (interp(xs[i]) != eval(xs[i])) {
      out.reproduced = false;
      break;
    }
  return out;
}

}  // namespace hmds::rs
