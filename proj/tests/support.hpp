#pragma once

// Random generators shared by the unit tests and the acceptance runner.

#include <map>
#include <random>
#include <vector>

#include "peq/cohomology.hpp"
#include "peq/lie.hpp"
#include "peq/local.hpp"
#include "peq/matrix.hpp"
#include "peq/pseudorep.hpp"

namespace peq::testing {

inline Cyclotomic small_cyclotomic(std::mt19937& rng, long order, int spread = 2) {
  std::uniform_int_distribution<int> d(-spread, spread);
  std::vector<Rational> c;
  for (long i = 0; i < euler_phi(order); ++i) c.emplace_back(d(rng));
  return Cyclotomic::from_coeffs(order, c);
}

inline CMatrix random_invertible(std::mt19937& rng, std::size_t r, long order) {
  while (true) {
    CMatrix g(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) g(i, j) = small_cyclotomic(rng, order, 1);
    if (!g.determinant().is_zero()) return g;
  }
}

/// sigma(g) = diag(e^{2 pi i q}), extended by sigma(g^j) = c(g, g^{j-1}) sigma(g) sigma(g^{j-1}).
inline pseudorep::PseudoRep diagonal_pseudorep(const cohomology::Cochain2& c,
                                               const std::vector<Rational>& exponents) {
  const int n = c.group().order();
  std::vector<Cyclotomic> d;
  for (const auto& q : exponents) d.push_back(root_of_unity(q));
  const CMatrix gen = CMatrix::diagonal(d);
  std::vector<CMatrix> images{CMatrix::identity(exponents.size())};
  for (int j = 1; j < n; ++j) {
    const Cyclotomic s = root_of_unity(Rational(c(1, j - 1), c.coeff_order()));
    images.push_back(s * (gen * images.back()));
  }
  return pseudorep::PseudoRep{c, images};
}

/// Random exponents q with n q = zeta mod 1.
inline std::vector<Rational> admissible_exponents(std::mt19937& rng, int n, std::size_t r,
                                                  const Rational& zeta) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < r; ++i)
    out.push_back((zeta + Rational(static_cast<long>(rng() % n))) / Rational(n));
  return out;
}

/// Every interior alcove weight of the model with entries in (1/d)Z.
inline std::vector<lie::WeightVector> interior_weights(const lie::GroupModel& model, long d) {
  const bool sl = model.kind() == lie::ModelKind::SL;
  const long lo = sl ? -d + 1 : 0;
  const long hi = d - 1;
  std::vector<lie::WeightVector> out;
  std::vector<long> t(static_cast<std::size_t>(model.size()), lo);
  while (true) {
    std::vector<Rational> e;
    for (long x : t) e.emplace_back(x, d);
    if (lie::is_alcove_form(model, e)) {
      auto w = lie::make_weight_vector(model, e);
      if (w.interior()) out.push_back(w);
    }
    std::size_t i = 0;
    while (i < t.size() && t[i] == hi) t[i++] = lo;
    if (i == t.size()) break;
    ++t[i];
  }
  return out;
}

/// Random series with the given support rule, coefficients in Q(zeta_4),
/// traceless on the diagonal for SL.
template <typename Allowed>
std::map<local::TermKey, Cyclotomic> random_terms(std::mt19937& rng, const lie::WeightVector& alpha,
                                                  long lowest, long trunc, Allowed allowed) {
  const lie::SubspaceMask m = lie::m_mask(alpha.model);
  std::map<local::TermKey, Cyclotomic> out;
  for (long k = lowest; k <= trunc; ++k) {
    std::vector<int> diag;
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) {
        if (!m.at(i, j) || !allowed(alpha.beta(i, j).value(), k)) continue;
        if (i == j) {
          diag.push_back(i);
          continue;
        }
        if (rng() % 2 == 0) out[local::TermKey{i, j, k}] = small_cyclotomic(rng, 4);
      }
    if (diag.empty() || rng() % 2 != 0) continue;
    Cyclotomic sum;
    for (std::size_t t = 0; t < diag.size(); ++t) {
      Cyclotomic c = small_cyclotomic(rng, 4);
      if (m.traceless && t + 1 == diag.size()) c = -sum;
      sum += c;
      out[local::TermKey{diag[t], diag[t], k}] = c;
    }
  }
  return out;
}

/// Random Gamma_x-invariant z-series.
inline local::GradedSeries random_invariant_series(std::mt19937& rng, const lie::WeightVector& alpha,
                                                   long n, long trunc) {
  auto terms = random_terms(rng, alpha, 0, trunc, [n](const Rational& beta, long k) {
    return local::index_criterion(beta, k, n, Rational(0));
  });
  return local::GradedSeries(alpha, n, local::Variable::Upstairs_z, trunc, std::move(terms));
}

/// Random w-series with poles only on negative beta.
inline local::GradedSeries random_downstairs_series(std::mt19937& rng, const lie::WeightVector& alpha,
                                                    long n, long trunc) {
  auto terms = random_terms(rng, alpha, -1, trunc, [](const Rational& beta, long k) {
    return k >= 0 || beta.sign() < 0;
  });
  return local::GradedSeries(alpha, n, local::Variable::Downstairs_w, trunc, std::move(terms));
}

}  // namespace peq::testing
