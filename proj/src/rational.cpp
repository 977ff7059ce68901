#include "sbr/rational.hpp"

#include <stdexcept>

namespace sbr {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Int Rational::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::mul_pow2(std::int64_t e) const {
  mpq_class r;
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), v_.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), v_.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(std::move(r));
}

Rational Rational::pow2(std::int64_t e) {
  return Rational(1).mul_pow2(e);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = !num.empty() && num.front() == '-';
  if (neg) num.remove_prefix(1);
  if (!is_digits(num) || !is_digits(den)) return std::nullopt;
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (sgn(d) == 0) return std::nullopt;
  if (neg) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

std::int64_t ceil_log2_abs(const Rational& q) {
  if (q.is_zero()) throw std::domain_error("ceil_log2_abs of zero");
  Rational a = q.abs();
  // bit sizes give the answer within 1; fix up with exact comparisons
  std::int64_t e = static_cast<std::int64_t>(mpz_sizeinbase(a.numerator().get_mpz_t(), 2)) -
                   static_cast<std::int64_t>(mpz_sizeinbase(a.denominator().get_mpz_t(), 2)) + 1;
  while (a <= Rational::pow2(e - 1)) --e;
  while (a > Rational::pow2(e)) ++e;
  return e;
}

}  // namespace sbr
