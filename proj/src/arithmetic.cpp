#include "sbr/arithmetic.hpp"

#include <algorithm>

namespace sbr {

SignedBitNumber negate(const SignedBitNumber& x) {
  return SignedBitNumber::from_steps(x.start(), [x](Level i, const Rational&) {
    return digit_from_value(-digit_value(x.digit(i)));
  });
}

SignedBitNumber add(const SignedBitNumber& x, const SignedBitNumber& y) {
  return from_oracle([x, y](Level k) { return x.approx(k + 1) + y.approx(k + 1); });
}

namespace {

bool is_power_of_two(const Int& v) {
  return sgn(v) > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

}  // namespace

SignedBitNumber scale(const Rational& q, const SignedBitNumber& x) {
  if (q.is_zero()) return from_rational(Rational(0));
  const Int num = q.abs().numerator();
  const Int den = q.denominator();
  if (is_power_of_two(num) && is_power_of_two(den)) {
    // q = +-2^e: shift indices by e, negating digits for q < 0
    const Level e = static_cast<Level>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                    static_cast<Level>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const bool neg = q.sign() < 0;
    return SignedBitNumber::from_steps(x.start() - e, [x, e, neg](Level i, const Rational&) {
      int v = digit_value(x.digit(i + e));
      return digit_from_value(neg ? -v : v);
    });
  }
  const Level s = std::max<Level>(0, ceil_log2_abs(q) + 1);
  return from_oracle([q, x, s](Level k) { return q * x.approx(k + s); });
}

SignedBitNumber min_sb(const SignedBitNumber& x, const SignedBitNumber& y) {
  return from_oracle([x, y](Level k) { return min(x.approx(k), y.approx(k)); });
}

SignedBitNumber max_sb(const SignedBitNumber& x, const SignedBitNumber& y) {
  return from_oracle([x, y](Level k) { return max(x.approx(k), y.approx(k)); });
}

SignedBitNumber mul(const SignedBitNumber& x, const SignedBitNumber& y) {
  const Rational bound = Rational::pow2(1 - x.start()) + Rational::pow2(1 - y.start()) + Rational(1);
  const Level pad = 2 + std::max<Level>(0, ceil_log2_abs(bound));
  return from_oracle([x, y, pad](Level k) {
    Level j = k + pad;
    return x.approx(j) * y.approx(j);
  });
}

Comparison compare(const SignedBitNumber& x, const SignedBitNumber& y, Level l) {
  const Rational mx = x.approx(l);
  const Rational my = y.approx(l);
  const Rational r = Rational::pow2(-l);
  if (mx + r < my - r) return Comparison::less;
  if (my + r < mx - r) return Comparison::greater;
  return Comparison::within;
}

}  // namespace sbr
