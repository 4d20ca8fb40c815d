#include "peq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "peq/error.hpp"

namespace peq {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Reduce p modulo the monic integer polynomial phi; result has length deg(phi).
Poly reduce_mod(Poly p, const std::vector<long>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i].is_zero()) continue;
    Rational lead = p[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (phi[j] != 0) p[i - d + j] -= lead * Rational(phi[j]);
    }
    p[i] = Rational(0);
  }
  p.resize(d, Rational(0));
  return p;
}

// Quotient and remainder of a by b over Q; b nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rational c = a[i] * lead_inv;
    if (c.is_zero()) continue;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<long> compute_cyclotomic(long m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<long>& den = cyclotomic_polynomial(d);
    // Exact division by a monic integer polynomial.
    const std::size_t db = den.size() - 1;
    std::vector<long> q(num.size() - db, 0);
    for (std::size_t i = num.size(); i-- > db;) {
      long c = num[i];
      if (c == 0) continue;
      q[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) num[i - db + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

}  // namespace

long euler_phi(long m) {
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(long m) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly = m == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic Cyclotomic::from_rational(const Rational& r, long order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  Poly c(static_cast<std::size_t>(euler_phi(order)), Rational(0));
  c[0] = r;
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::zeta_power(long order, long k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long e = ((k % order) + order) % order;
  Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[static_cast<std::size_t>(e)] = Rational(1);
  return Cyclotomic(order, reduce_mod(std::move(p), cyclotomic_polynomial(order)));
}

Cyclotomic Cyclotomic::from_coeffs(long order, std::vector<Rational> coeffs) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (static_cast<long>(coeffs.size()) != euler_phi(order)) {
    throw std::invalid_argument("cyclotomic of order " + std::to_string(order) + " needs " +
                                std::to_string(euler_phi(order)) + " coefficients");
  }
  return Cyclotomic(order, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == Rational(1); }

Cyclotomic Cyclotomic::embed(long m) const {
  if (m < 1 || m % order_ != 0) {
    throw Error(Errc::IncompatibleOrders, "cannot embed Q(zeta_" + std::to_string(order_) +
                                              ") into Q(zeta_" + std::to_string(m) + ")");
  }
  if (m == order_) return *this;
  const std::size_t step = static_cast<std::size_t>(m / order_);
  Poly p((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
  return Cyclotomic(m, reduce_mod(std::move(p), cyclotomic_polynomial(m)));
}

Cyclotomic Cyclotomic::operator-() const {
  Poly c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const long m = lcm_long(a.order_, b.order_);
  Cyclotomic x = a.embed(m);
  const Cyclotomic y = b.embed(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const long m = lcm_long(a.order_, b.order_);
  const Cyclotomic x = a.embed(m);
  const Cyclotomic y = b.embed(m);
  return Cyclotomic(m, reduce_mod(mul(x.coeffs_, y.coeffs_), cyclotomic_polynomial(m)));
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& a) {
  Poly c = a.coeffs_;
  for (auto& x : c) x *= r;
  return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const long m = lcm_long(a.order_, b.order_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero cyclotomic");
  // Extended Euclid: find u with u * p = 1 mod Phi.
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly phi(phi_int.begin(), phi_int.end());
  Poly r0 = phi, r1 = coeffs_;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: nontrivial gcd");
  }
  const Rational c = r1[0].inverse();
  for (auto& x : s1) x *= c;
  if (s1.size() < phi.size()) s1.resize(phi.size(), Rational(0));
  return Cyclotomic(order_, reduce_mod(std::move(s1), phi_int));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result = from_rational(Rational(1), order_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Cyclotomic::debug_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].str();
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << "0";
  os << " (z=zeta_" << order_ << ")";
  return os.str();
}

Cyclotomic root_of_unity(const Rational& q, long m) {
  const Rational e = q * Rational(m);
  if (!e.is_integer()) {
    throw Error(Errc::DenominatorNotDividing,
                q.str() + " does not embed in Q(zeta_" + std::to_string(m) + ")");
  }
  return Cyclotomic::zeta_power(m, e.num_long());
}

Cyclotomic root_of_unity(const FractionalWeight& q, long m) { return root_of_unity(q.value(), m); }

Cyclotomic root_of_unity(const Rational& q) { return root_of_unity(q, q.den_long()); }

Cyclotomic cyclotomic_embed(const Cyclotomic& c, long m) { return c.embed(m); }

}  // namespace peq
