#include "peq/rational.hpp"

#include <numeric>

#include "peq/error.hpp"

namespace peq {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s, 10)));
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
    return Rational(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

long Rational::num_long() const {
  if (!q_.get_num().fits_slong_p()) throw std::overflow_error("numerator overflow");
  return q_.get_num().get_si();
}

long Rational::den_long() const {
  if (!q_.get_den().fits_slong_p()) throw std::overflow_error("denominator overflow");
  return q_.get_den().get_si();
}

long Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor overflow");
  return f.get_si();
}

long Rational::trunc() const {
  mpz_class f;
  mpz_tdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("trunc overflow");
  return f.get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

}  // namespace peq
