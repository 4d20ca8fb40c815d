#include "peq/matrix.hpp"

#include <stdexcept>

#include "peq/error.hpp"

namespace peq {

namespace {

void require_same_size(const CMatrix& x, const CMatrix& y) {
  if (x.size() != y.size()) throw Error(Errc::SizeMismatch, "matrix sizes differ");
}

// Row echelon form in place; returns rank and the sign/scale bookkeeping for det.
std::size_t eliminate(std::vector<std::vector<Cyclotomic>>& rows, std::size_t cols,
                      Cyclotomic* det) {
  const std::size_t nrows = rows.size();
  std::size_t rank = 0;
  if (det) *det = Cyclotomic::from_rational(Rational(1));
  for (std::size_t c = 0; c < cols && rank < nrows; ++c) {
    std::size_t p = rank;
    while (p < nrows && rows[p][c].is_zero()) ++p;
    if (p == nrows) {
      if (det && c < nrows) *det = Cyclotomic();
      continue;
    }
    if (p != rank) {
      std::swap(rows[p], rows[rank]);
      if (det) *det = -*det;
    }
    const Cyclotomic inv = rows[rank][c].inverse();
    if (det) *det = *det * rows[rank][c];
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      if (rows[r][c].is_zero()) continue;
      const Cyclotomic f = rows[r][c] * inv;
      for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  if (det && rank < nrows) *det = Cyclotomic();
  return rank;
}

}  // namespace

CMatrix::CMatrix(std::size_t n) : n_(n), a_(n * n) {}

CMatrix CMatrix::identity(std::size_t n) {
  return scalar(n, Cyclotomic::from_rational(Rational(1)));
}

CMatrix CMatrix::scalar(std::size_t n, const Cyclotomic& s) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Cyclotomic>& d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix m(n);
  m(i, j) = Cyclotomic::from_rational(Rational(1));
  return m;
}

bool CMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Cyclotomic CMatrix::trace() const {
  Cyclotomic t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  require_same_size(x, y);
  const std::size_t n = x.n_;
  CMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  require_same_size(x, y);
  CMatrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
  return r;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  require_same_size(x, y);
  CMatrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
  return r;
}

CMatrix operator*(const Cyclotomic& s, const CMatrix& x) {
  CMatrix r = x;
  for (auto& e : r.a_) e = s * e;
  return r;
}

bool operator==(const CMatrix& x, const CMatrix& y) {
  if (x.n_ != y.n_) return false;
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    if (!(x.a_[i] == y.a_[i])) return false;
  return true;
}

CMatrix CMatrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CMatrix result = identity(n_);
  CMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Cyclotomic CMatrix::determinant() const {
  std::vector<std::vector<Cyclotomic>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  Cyclotomic det;
  eliminate(rows, n_, &det);
  return det;
}

std::size_t CMatrix::rank() const {
  std::vector<std::vector<Cyclotomic>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return eliminate(rows, n_, nullptr);
}

CMatrix CMatrix::inverse() const {
  // Gauss-Jordan on [A | I].
  std::vector<std::vector<Cyclotomic>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    rows[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
    rows[i].resize(2 * n_);
    rows[i][n_ + i] = Cyclotomic::from_rational(Rational(1));
  }
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && rows[p][c].is_zero()) ++p;
    if (p == n_) throw Error(Errc::DivisionByZero, "singular matrix");
    std::swap(rows[p], rows[c]);
    const Cyclotomic inv = rows[c][c].inverse();
    for (auto& x : rows[c]) x = inv * x;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || rows[r][c].is_zero()) continue;
      const Cyclotomic f = rows[r][c];
      for (std::size_t k = 0; k < 2 * n_; ++k) rows[r][k] -= f * rows[c][k];
    }
  }
  CMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = rows[i][n_ + j];
  return out;
}

std::vector<Cyclotomic> CMatrix::characteristic_polynomial() const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = n_;
  std::vector<Cyclotomic> c(n + 1);
  c[n] = Cyclotomic::from_rational(Rational(1));
  CMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = (*this) * m + scalar(n, c[n - k + 1]);
    const Cyclotomic t = ((*this) * m).trace();
    c[n - k] = Rational(-1, static_cast<long>(k)) * t;
  }
  return c;
}

long CMatrix::working_order() const {
  long m = 1;
  for (const auto& x : a_) m = lcm_long(m, x.order());
  return m;
}

int root_multiplicity(std::vector<Cyclotomic> poly, const Cyclotomic& root) {
  int mult = 0;
  while (poly.size() > 1) {
    // Synthetic division by (x - root).
    std::vector<Cyclotomic> q(poly.size() - 1);
    Cyclotomic carry;
    for (std::size_t i = poly.size(); i-- > 1;) {
      carry = poly[i] + root * carry;
      q[i - 1] = carry;
    }
    const Cyclotomic remainder = poly[0] + root * carry;
    if (!remainder.is_zero()) break;
    ++mult;
    poly = std::move(q);
  }
  return mult;
}

}  // namespace peq
