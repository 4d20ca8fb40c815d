#include "peq/pseudorep.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "peq/error.hpp"

namespace peq::pseudorep {

using cohomology::Cochain2;

namespace {

FractionalWeight residue(const Rational& x) {
  return normalize_weight(x, WeightConvention::ResidueInZeroOne);
}

void require_cyclic_domain(const PseudoRep& sigma) {
  const auto& f = sigma.cocycle.group().factors();
  if (f.size() > 1) throw Error(Errc::SizeMismatch, "pseudorepresentations need a cyclic domain Z/n");
  if (sigma.images.size() != static_cast<std::size_t>(sigma.order())) {
    throw Error(Errc::SizeMismatch, "one image per element of Z/n is required");
  }
  for (const auto& m : sigma.images)
    if (m.size() != sigma.rank()) throw Error(Errc::SizeMismatch, "images have different sizes");
}

}  // namespace

CMatrix central_scalar(std::size_t size, int k, int m) {
  return CMatrix::scalar(size, Cyclotomic::zeta_power(m, k));
}

PseudoRepVerdict verify_pseudorep(const PseudoRep& sigma) {
  require_cyclic_domain(sigma);
  const auto& g = sigma.cocycle.group();
  const int n = g.order();
  const int m = sigma.cocycle.coeff_order();
  const std::size_t r = sigma.rank();
  if (!(sigma.images[0] == CMatrix::identity(r))) return {false, std::pair<Element, Element>{0, 0}};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const CMatrix rhs = central_scalar(r, sigma.cocycle(a, b), m) *
                          (sigma.images[static_cast<std::size_t>(a)] * sigma.images[static_cast<std::size_t>(b)]);
      if (!(sigma.images[static_cast<std::size_t>(g.multiply(a, b))] == rhs)) {
        return {false, std::pair<Element, Element>{a, b}};
      }
    }
  return {true, std::nullopt};
}

PseudoRep conjugate(const PseudoRep& sigma, const CMatrix& g) {
  const CMatrix gi = g.inverse();
  PseudoRep out{sigma.cocycle, {}};
  for (const auto& img : sigma.images) out.images.push_back(gi * img * g);
  return out;
}

FractionalWeight central_value(const Cochain2& c) {
  const int n = c.group().order();
  const int z = n > 1 ? cohomology::zeta(c, 1) : 0;
  return residue(Rational(-z, c.coeff_order()));
}

PseudoRepClass classify(const PseudoRep& sigma) {
  const auto verdict = verify_pseudorep(sigma);
  if (!verdict.holds) {
    throw Error(Errc::NotAPseudoRep, "relation fails at (" + std::to_string(verdict.witness->first) +
                                         ", " + std::to_string(verdict.witness->second) + ")");
  }
  const int n = sigma.order();
  PseudoRepClass cls;
  cls.order = n;
  cls.zeta = central_value(sigma.cocycle);
  const std::size_t r = sigma.rank();
  const CMatrix& a = n > 1 ? sigma.images[1] : sigma.images[0];
  const auto charpoly = a.characteristic_polynomial();
  for (int j = 0; j < n; ++j) {
    const Rational q = (cls.zeta.value() + Rational(j)) / Rational(n);
    const int mult = root_multiplicity(charpoly, root_of_unity(q));
    for (int i = 0; i < mult; ++i) cls.exponents.push_back(residue(q));
  }
  if (cls.exponents.size() != r) {
    throw Error(Errc::NotAPseudoRep, "eigenvalues of the generator are not n-th roots of zeta");
  }
  std::sort(cls.exponents.rbegin(), cls.exponents.rend());
  return cls;
}

std::vector<PseudoRepClass> enumerate_classes(int n, int r, const Rational& zeta, MatrixModel model,
                                              const ScaleBounds& bounds) {
  if (n < 1 || r < 1) throw std::invalid_argument("order and rank must be positive");
  if (n * r > bounds.max_class_enum) {
    throw Error(Errc::ScaleExceeded, "n*r = " + std::to_string(n * r) + " exceeds " +
                                         std::to_string(bounds.max_class_enum));
  }
  const FractionalWeight z = residue(zeta);
  std::vector<FractionalWeight> roots;
  for (int j = 0; j < n; ++j) roots.push_back(residue((z.value() + Rational(j)) / Rational(n)));
  std::sort(roots.rbegin(), roots.rend());

  std::vector<PseudoRepClass> out;
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int start) {
    if (pos == idx.size()) {
      PseudoRepClass c{n, z, {}};
      Rational sum(0);
      for (int i : idx) {
        c.exponents.push_back(roots[static_cast<std::size_t>(i)]);
        sum += roots[static_cast<std::size_t>(i)].value();
      }
      if (model == MatrixModel::SL && !sum.is_integer()) return;
      out.push_back(std::move(c));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(),
            [](const PseudoRepClass& a, const PseudoRepClass& b) { return a.exponents < b.exponents; });
  return out;
}

Transport deck_transport(const PseudoRep& sigma, const FiniteAbelianGroup& ambient,
                         Element generator_image, Element gamma0) {
  require_cyclic_domain(sigma);
  const int n = sigma.order();
  if (generator_image < 0 || generator_image >= ambient.order() || gamma0 < 0 ||
      gamma0 >= ambient.order()) {
    throw Error(Errc::IsotropyMismatch, "element outside the ambient group");
  }
  if (ambient.element_order(generator_image) != n) {
    throw Error(Errc::IsotropyMismatch, "generator image does not have order " + std::to_string(n));
  }
  const Element g0_inv = ambient.inverse(gamma0);
  const Element target = ambient.multiply(ambient.multiply(gamma0, generator_image), g0_inv);
  const auto source_powers = ambient.cyclic_subgroup(generator_image);

  // pull[j] = i such that g0^{-1} target^j g0 = x^i.
  std::vector<int> pull(static_cast<std::size_t>(n));
  Element tj = ambient.identity();
  for (int j = 0; j < n; ++j) {
    const Element back = ambient.multiply(ambient.multiply(g0_inv, tj), gamma0);
    auto it = std::find(source_powers.begin(), source_powers.end(), back);
    if (it == source_powers.end()) throw Error(Errc::IsotropyMismatch, "conjugate leaves Gamma_x");
    pull[static_cast<std::size_t>(j)] = static_cast<int>(it - source_powers.begin());
    tj = ambient.multiply(tj, target);
  }

  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          sigma.cocycle(pull[static_cast<std::size_t>(a)], pull[static_cast<std::size_t>(b)]);
  Transport out{PseudoRep{Cochain2(sigma.cocycle.group(), sigma.cocycle.coeff_order(), table), {}},
                target};
  for (int j = 0; j < n; ++j) out.rep.images.push_back(sigma.images[static_cast<std::size_t>(pull[static_cast<std::size_t>(j)])]);
  return out;
}

std::vector<FractionalWeight> least_shift(const std::vector<FractionalWeight>& exponents,
                                          int center_order) {
  if (center_order < 1) throw std::invalid_argument("center order must be positive");
  std::vector<FractionalWeight> best;
  for (int k = 0; k < center_order; ++k) {
    std::vector<FractionalWeight> v;
    for (const auto& q : exponents) v.push_back(residue(q.value() + Rational(k, center_order)));
    std::sort(v.rbegin(), v.rend());
    if (k == 0 || v < best) best = std::move(v);
  }
  return best;
}

QuotientClass project_mod_center(const PseudoRepClass& cls, int center_order) {
  return QuotientClass{cls.order, center_order, least_shift(cls.exponents, center_order)};
}

Cochain2 induced_cocycle(const Cochain2& c, const std::vector<Rational>& rho_images) {
  const int m = c.coeff_order();
  if (rho_images.size() != static_cast<std::size_t>(m)) {
    throw Error(Errc::NotAHomomorphism, "rho needs one image per element of Z/" + std::to_string(m));
  }
  long target = 1;
  std::vector<FractionalWeight> img;
  for (const auto& x : rho_images) {
    img.push_back(residue(x));
    target = lcm_long(target, img.back().value().den_long());
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (!img[static_cast<std::size_t>((a + b) % m)].congruent(
              residue(img[static_cast<std::size_t>(a)].value() + img[static_cast<std::size_t>(b)].value()))) {
        throw Error(Errc::NotAHomomorphism, "rho(a+b) != rho(a) rho(b) at a = " + std::to_string(a) +
                                                ", b = " + std::to_string(b));
      }
  const int n = c.group().order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational v = img[static_cast<std::size_t>(c.table()[i])].value() * Rational(target);
    t[i] = static_cast<int>(v.num_long());
  }
  return Cochain2(c.group(), static_cast<int>(target), std::move(t));
}

}  // namespace peq::pseudorep
