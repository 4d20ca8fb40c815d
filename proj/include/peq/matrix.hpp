#pragma once

#include <vector>

#include "peq/cyclotomic.hpp"

namespace peq {

/// Small square matrix over cyclotomic fields, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  /// n x n zero matrix.
  explicit CMatrix(std::size_t n);

  static CMatrix identity(std::size_t n);
  static CMatrix scalar(std::size_t n, const Cyclotomic& s);
  static CMatrix diagonal(const std::vector<Cyclotomic>& d);
  /// Matrix unit E_ij.
  static CMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return n_; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  bool is_zero() const;
  Cyclotomic trace() const;

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator+(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator-(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator*(const Cyclotomic& s, const CMatrix& x);
  friend bool operator==(const CMatrix& x, const CMatrix& y);

  /// Commutator xy - yx.
  friend CMatrix bracket(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

  CMatrix pow(long e) const;
  Cyclotomic determinant() const;
  /// Throws DivisionByZero when singular.
  CMatrix inverse() const;
  std::size_t rank() const;

  /// Coefficients of det(x I - A), lowest degree first; monic of degree size().
  std::vector<Cyclotomic> characteristic_polynomial() const;

  /// Largest common cyclotomic order of the entries.
  long working_order() const;

 private:
  std::size_t n_ = 0;
  std::vector<Cyclotomic> a_;
};

/// Multiplicity of root in the polynomial (lowest degree first), by repeated synthetic division.
int root_multiplicity(std::vector<Cyclotomic> poly, const Cyclotomic& root);

}  // namespace peq
