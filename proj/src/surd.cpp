#include "arr4/surd.hpp"

namespace arr4 {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer isqrt_floor(const Integer& x) {
  if (sgn(x) < 0) throw NegativeRadicand();
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Integer isqrt_ceil(const Integer& x) {
  Integer r = isqrt_floor(x);
  if (r * r != x) r += 1;
  return r;
}

// floor(base + sqrt(rad)) = base + floor(sqrt(rad)) and
// floor(y / den) = floor(floor(y) / den) for den > 0; dually
// ceil(base - sqrt(rad)) = base - floor(sqrt(rad)).
Integer floor_plus_sqrt(const Integer& base, const Integer& radicand, const Integer& den) {
  return floor_div(base + isqrt_floor(radicand), den);
}

Integer ceil_minus_sqrt(const Integer& base, const Integer& radicand, const Integer& den) {
  return ceil_div(base - isqrt_floor(radicand), den);
}

int compare_with_sqrt(const Integer& value, const Integer& radicand) {
  if (sgn(radicand) < 0) throw NegativeRadicand();
  if (sgn(value) < 0) return -1;
  return cmp(Integer(value * value), radicand) < 0 ? -1 : (value * value == radicand ? 0 : 1);
}

}  // namespace arr4
