#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are carried as their canonical integer encoding: the value
// sum_i c_i p^i where c_0 + c_1 x + ... + c_{m-1} x^{m-1} is the reduced
// representative modulo the field's modulus.  Prime fields (m = 1) use plain
// modular arithmetic and accept any prime p < 2^32; extension fields use
// log/antilog tables and are meant for desk-scale orders.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmds::gf {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// Prime powers in [lo, hi], ascending.
std::vector<std::uint64_t> prime_powers_between(std::uint64_t lo, std::uint64_t hi);

/// Largest extension-field order supported by the table-based path.
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 22;

namespace detail {

struct FieldData {
  std::uint64_t p = 2;
  int m = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;  // little-endian, monic, size m+1; empty when m == 1
  // Extension-field tables (m > 1).
  std::vector<Elem> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;
  std::vector<Elem> add;  // q*q, only for small odd-characteristic fields
  std::vector<Elem> neg;
};

}  // namespace detail

class Field {
 public:
  /// Validates the parameters.  When m > 1 and no modulus is given, the
  /// lexicographically smallest monic irreducible of degree m is chosen,
  /// comparing little-endian coefficient lists.
  static Field make(std::uint64_t p, int m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Field of order q (a prime power) with the default modulus.
  static Field of_order(std::uint64_t q);

  std::uint64_t p() const { return p_; }
  int m() const { return m_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
  bool is_prime_field() const { return m_ == 1; }

  bool contains(std::uint64_t v) const { return v < q_; }

  Elem add(Elem a, Elem b) const {
    if (m_ == 1) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    if (!data_->add.empty()) return data_->add[std::size_t{a} * q_ + b];
    return add_digits(a, b);
  }

  Elem neg(Elem a) const {
    if (m_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_ - a);
    if (p_ == 2) return a;
    if (!data_->neg.empty()) return data_->neg[a];
    return neg_digits(a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    return data_->exp[std::size_t{data_->log[a]} + data_->log[b]];
  }

  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> to_coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data);
  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;

  std::shared_ptr<const detail::FieldData> data_;
  std::uint64_t p_;
  int m_;
  std::uint64_t q_;
};

/// An element bound to its field; arithmetic between different fields throws.
class FieldElement {
 public:
  FieldElement(Field field, std::uint64_t value);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement inv() const { return {field_, field_.inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  Elem value_;
};

/// Canonical integer encoding of an element.
inline std::uint64_t encode(const FieldElement& a) { return a.value(); }
/// Inverse of encode; throws std::out_of_range for values >= q.
inline FieldElement decode(const Field& f, std::uint64_t v) { return {f, v}; }

/// Polynomials over GF(p) as little-endian coefficient lists; used for modulus
/// handling.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint64_t p);

}  // namespace hmds::gf
