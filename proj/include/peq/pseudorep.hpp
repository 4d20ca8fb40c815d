#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "peq/cohomology.hpp"
#include "peq/matrix.hpp"
#include "peq/weight.hpp"

namespace peq::pseudorep {

/// Map sigma: Z/n -> GL(r) with sigma(g g') = c(g, g') sigma(g) sigma(g').
/// images[j] is the image of g^j for the canonical generator g = 1 of Z/n, and
/// Z/m acts through the scalars e^{2 pi i k/m}.
struct PseudoRep {
  cohomology::Cochain2 cocycle;
  std::vector<CMatrix> images;

  int order() const { return cocycle.group().order(); }
  std::size_t rank() const { return images.empty() ? 0 : images.front().size(); }
};

/// Scalar matrix of the coefficient k/m.
CMatrix central_scalar(std::size_t size, int k, int m);

struct PseudoRepVerdict {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;  ///< failing (g, g'); (0, 0) for sigma(1) != Id
};

/// Exhaustive check over all n^2 pairs plus sigma(1) = Id. Throws SizeMismatch
/// when the images do not share one size, and when the domain is not cyclic.
PseudoRepVerdict verify_pseudorep(const PseudoRep& sigma);

/// g^{-1} sigma g.
PseudoRep conjugate(const PseudoRep& sigma, const CMatrix& g);

/// Conjugacy invariant of a pseudorepresentation of Z/n.
///
/// `zeta` is the central value sigma(g)^n for the canonical generator, as a
/// residue in [0, 1). Under the defining relation it equals the inverse of the
/// product prod_{i=1}^{n-1} c(g, g^i). Every exponent q satisfies n q = zeta mod 1.
struct PseudoRepClass {
  int order = 1;
  FractionalWeight zeta;
  std::vector<FractionalWeight> exponents;  ///< descending, residues in [0, 1)

  friend bool operator==(const PseudoRepClass&, const PseudoRepClass&) = default;
};

/// Residue in [0,1) of the scalar that sigma(g)^n must equal for cocycle c.
FractionalWeight central_value(const cohomology::Cochain2& c);

/// Eigenvalue exponents of sigma(generator) via root extraction from the
/// characteristic polynomial. Throws NotAPseudoRep if verification fails.
PseudoRepClass classify(const PseudoRep& sigma);

enum class MatrixModel { GL, SL };

/// All classes with exponents q, n q = zeta mod 1; for SL additionally sum q in Z.
/// Sorted lexicographically by exponent vectors. Throws ScaleExceeded if n*r is too big.
std::vector<PseudoRepClass> enumerate_classes(int n, int r, const Rational& zeta, MatrixModel model,
                                              const ScaleBounds& bounds = {});

/// Result of moving a pseudorepresentation along a deck transformation.
struct Transport {
  PseudoRep rep;            ///< indexed by powers of target_generator
  Element target_generator; ///< g0 x g0^{-1} in the ambient group
};

/// sigma'(g') = sigma(g0^{-1} g' g0) on g0 Gamma_x g0^{-1}. `generator_image`
/// is the ambient element that the canonical generator of Gamma_x maps to.
Transport deck_transport(const PseudoRep& sigma, const FiniteAbelianGroup& ambient,
                         Element generator_image, Element gamma0);

/// Class of the induced homomorphism into G/Z', Z' = Z/m acting by scalars.
struct QuotientClass {
  int order = 1;
  int center_order = 1;
  std::vector<FractionalWeight> exponents;  ///< least shifted representative, descending

  friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
  friend bool operator<(const QuotientClass& a, const QuotientClass& b) {
    return a.exponents < b.exponents;
  }
};

/// Least, over the shifts by k/m, of the descending residue vector.
QuotientClass project_mod_center(const PseudoRepClass& cls, int center_order);
/// Same for a raw exponent vector (used for block models).
std::vector<FractionalWeight> least_shift(const std::vector<FractionalWeight>& exponents,
                                          int center_order);

/// Composition of c with a homomorphism rho: Z/m -> Q/Z given by rho_images[k]
/// for k = 0..m-1. The target coefficient order is the lcm of the image denominators.
/// Throws NotAHomomorphism.
cohomology::Cochain2 induced_cocycle(const cohomology::Cochain2& c,
                                     const std::vector<Rational>& rho_images);

}  // namespace peq::pseudorep
