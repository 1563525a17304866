#pragma once

// GMP evaluation of the field-size bounds, written separately from the
// library's Boost code path.

#include <gmpxx.h>

#include <string>

namespace bound_oracle {

inline mpz_class choose(unsigned long n, unsigned long r) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, r);
  return c;
}

inline mpz_class ceiling(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline mpq_class qpow(const mpq_class& b, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline mpz_class zpow(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

struct Values {
  mpz_class dependency, fresh, prior;
};

inline Values evaluate(unsigned long n, unsigned long k, unsigned long l) {
  const mpq_class e(271829, 100000);
  const unsigned long d = (l - 1) * k;
  const unsigned long m = d < n ? d : n;

  mpq_class a(zpow(2, n));
  mpq_class base = e * mpq_class(n * l, d);
  base.canonicalize();
  const mpq_class b = mpq_class(d) * qpow(base, d);
  const mpq_class first = a < b ? a : b;

  const mpz_class c = zpow(2, l * m);
  const mpz_class dd = zpow(k, l) * zpow(m, k * l);
  const mpz_class second = c < dd ? c : dd;

  const mpq_class count = first * mpq_class(second);
  mpz_class sum = 0;
  for (unsigned long i = 0; i <= k; ++i) sum += choose(n, i);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), sum.get_mpz_t(), l);

  Values v;
  v.dependency = ceiling(count);
  v.fresh = ceiling(e * mpq_class(l * k * k) * count);
  v.prior = mpz_class(l * n * n) * p;
  return v;
}

}  // namespace bound_oracle
