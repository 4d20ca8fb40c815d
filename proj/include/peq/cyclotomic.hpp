#pragma once

#include <string>
#include <vector>

#include "peq/rational.hpp"
#include "peq/weight.hpp"

namespace peq {

long euler_phi(long m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
/// Computed once per m and cached.
const std::vector<long>& cyclotomic_polynomial(long m);

/// Element of Q(zeta_M) stored as a polynomial in zeta_M of degree < phi(M),
/// reduced modulo the M-th cyclotomic polynomial. The representation is
/// canonical for a fixed M; values of different orders compare through the
/// common field Q(zeta_lcm).
class Cyclotomic {
 public:
  /// Zero in Q.
  Cyclotomic();

  static Cyclotomic from_rational(const Rational& r, long order = 1);
  /// zeta_order^k.
  static Cyclotomic zeta_power(long order, long k);
  /// Validates length == phi(order).
  static Cyclotomic from_coeffs(long order, std::vector<Rational> coeffs);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// Rational value if the element lies in Q.
  bool is_rational() const;

  /// Same value seen in Q(zeta_m); m must be a multiple of order().
  Cyclotomic embed(long m) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form such as "1/2 + -1/1*z^3 (z=zeta_12)".
  std::string debug_string() const;

 private:
  Cyclotomic(long order, std::vector<Rational> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {}

  long order_ = 1;
  std::vector<Rational> coeffs_;
};

/// e^{2 pi i q} as zeta_M^{M q}. Throws DenominatorNotDividing unless M*q is an integer.
Cyclotomic root_of_unity(const FractionalWeight& q, long m);
Cyclotomic root_of_unity(const Rational& q, long m);
/// e^{2 pi i q} in Q(zeta_d) with d the denominator of q.
Cyclotomic root_of_unity(const Rational& q);

/// Throws IncompatibleOrders unless c.order() divides m.
Cyclotomic cyclotomic_embed(const Cyclotomic& c, long m);

}  // namespace peq
