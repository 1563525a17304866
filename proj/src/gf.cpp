#include "hmds/gf.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hmds::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1);
  int m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, m);
}

std::vector<std::uint64_t> prime_powers_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 2); q <= hi; ++q)
    if (prime_power(q)) out.push_back(q);
  return out;
}

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must be monic.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint64_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

namespace {

// Multiply two encoded elements by schoolbook polynomial multiplication
// followed by reduction; only used while building tables.
Elem slow_mul(Elem a, Elem b, const detail::FieldData& d) {
  const auto p = d.p;
  const auto m = static_cast<std::size_t>(d.m);
  Poly pa(m), pb(m);
  for (std::size_t i = 0; i < m; ++i) {
    pa[i] = a % p;
    a = static_cast<Elem>(a / p);
    pb[i] = b % p;
    b = static_cast<Elem>(b / p);
  }
  Poly prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
  Poly mod(d.modulus.begin(), d.modulus.end());
  Poly r = poly_mod(prod, mod, p);
  std::uint64_t v = 0;
  for (std::size_t i = r.size(); i-- > 0;) v = v * p + r[i];
  return static_cast<Elem>(v);
}

Elem slow_pow(Elem a, std::uint64_t e, const detail::FieldData& d) {
  Elem r = 1;
  while (e) {
    if (e & 1) r = slow_mul(r, a, d);
    a = slow_mul(a, a, d);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint32_t> default_modulus(std::uint64_t p, int m) {
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  std::vector<std::uint32_t> f(static_cast<std::size_t>(m) + 1, 0);
  f[static_cast<std::size_t>(m)] = 1;
  // c_0 is the most significant position in the lexicographic comparison.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (int i = m - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

void build_tables(detail::FieldData& d) {
  const std::uint64_t order = d.q - 1;
  const auto factors = prime_factors(order);
  Elem g = 0;
  for (Elem cand = 2; cand < d.q; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, order / r, d) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  d.exp.assign(2 * order, 0);
  d.log.assign(d.q, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    d.exp[i] = cur;
    d.exp[i + order] = cur;
    d.log[cur] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, g, d);
  }
  if (d.p != 2 && d.q <= 256) {
    d.add.assign(d.q * d.q, 0);
    d.neg.assign(d.q, 0);
    for (Elem a = 0; a < d.q; ++a) {
      for (Elem b = 0; b < d.q; ++b) {
        Elem x = a, y = b, v = 0, place = 1;
        for (int i = 0; i < d.m; ++i) {
          v += static_cast<Elem>(((x % d.p) + (y % d.p)) % d.p) * place;
          x = static_cast<Elem>(x / d.p);
          y = static_cast<Elem>(y / d.p);
          place = static_cast<Elem>(place * d.p);
        }
        d.add[std::size_t{a} * d.q + b] = v;
        if (v == 0) d.neg[a] = b;
      }
    }
  }
}

}  // namespace

Field::Field(std::shared_ptr<const detail::FieldData> data)
    : data_(std::move(data)), p_(data_->p), m_(data_->m), q_(data_->q) {}

Field Field::make(std::uint64_t p, int m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p > 0xFFFFFFFFull) throw std::invalid_argument("characteristic must be < 2^32");
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->q = 1;
  for (int i = 0; i < m; ++i) {
    d->q *= p;
    if (m > 1 && d->q > kMaxExtensionOrder)
      throw std::invalid_argument("extension field order exceeds supported maximum");
  }
  if (m == 1) {
    if (modulus && !modulus->empty()) {
      // A degree-1 modulus is allowed but carries no information.
      if (modulus->size() != 2 || (*modulus)[1] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    }
    return Field(std::move(d));
  }
  if (modulus) {
    const auto& f = *modulus;
    if (f.size() != static_cast<std::size_t>(m) + 1 || f.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree m");
    for (auto c : f)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(f, p)) throw std::invalid_argument("modulus is reducible over GF(p)");
    d->modulus = f;
  } else {
    d->modulus = default_modulus(p, m);
  }
  build_tables(*d);
  return Field(std::move(d));
}

Field Field::of_order(std::uint64_t q) {
  auto pm = prime_power(q);
  if (!pm) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(pm->first, pm->second);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (m_ == 1) {
    // Extended Euclid over the integers.
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = a;
    while (nr != 0) {
      const std::int64_t quot = r / nr;
      t = std::exchange(nt, t - quot * nt);
      r = std::exchange(nr, r - quot * nr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  const std::uint64_t order = q_ - 1;
  return data_->exp[(order - data_->log[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::to_coefficients(Elem a) const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(m_));
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(a % p_);
    a = static_cast<Elem>(a / p_);
  }
  return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("coefficient count must equal the extension degree");
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return static_cast<Elem>(v);
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem v = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    v += static_cast<Elem>(((a % p_) + (b % p_)) % p_) * place;
    a = static_cast<Elem>(a / p_);
    b = static_cast<Elem>(b / p_);
    place = static_cast<Elem>(place * p_);
  }
  return v;
}

Elem Field::neg_digits(Elem a) const {
  Elem v = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    const auto c = a % p_;
    v += static_cast<Elem>(c == 0 ? 0 : p_ - c) * place;
    a = static_cast<Elem>(a / p_);
    place = static_cast<Elem>(place * p_);
  }
  return v;
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  return a.p_ == b.p_ && a.m_ == b.m_ && a.data_->modulus == b.data_->modulus;
}

FieldElement::FieldElement(Field field, std::uint64_t value) : field_(std::move(field)) {
  if (!field_.contains(value))
    throw std::out_of_range("value " + std::to_string(value) + " outside " + field_.name());
  value_ = static_cast<Elem>(value);
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.add(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.sub(a.value(), b.value())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.mul(a.value(), b.value())};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f.div(a.value(), b.value())};
}

}  // namespace hmds::gf
