#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "peq/abelian_group.hpp"
#include "peq/rational.hpp"
#include "peq/scale.hpp"

namespace peq::cohomology {

/// Normalized 2-cochain Gamma x Gamma -> Z/m with trivial action. Values are
/// additive exponents k standing for e^{2 pi i k/m}; c(g, 1) = c(1, g) = 0.
class Cochain2 {
 public:
  /// Throws NotNormalized if an identity row/column entry is nonzero.
  Cochain2(FiniteAbelianGroup group, int coeff_order, std::vector<int> table);

  static Cochain2 trivial(const FiniteAbelianGroup& group, int coeff_order);

  const FiniteAbelianGroup& group() const { return group_; }
  int coeff_order() const { return m_; }
  const std::vector<int>& table() const { return table_; }

  int operator()(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * group_.order() + b];
  }
  /// The value as a residue k/m in [0, 1).
  Rational value(Element a, Element b) const { return Rational((*this)(a, b), m_); }

  bool is_trivial() const;

  /// Pointwise product (sum of exponents).
  friend Cochain2 operator*(const Cochain2& a, const Cochain2& b);

  friend bool operator==(const Cochain2& a, const Cochain2& b) {
    return a.group_ == b.group_ && a.m_ == b.m_ && a.table_ == b.table_;
  }
  friend bool operator<(const Cochain2& a, const Cochain2& b) { return a.table_ < b.table_; }

 private:
  FiniteAbelianGroup group_;
  int m_;
  std::vector<int> table_;
};

struct CocycleVerdict {
  bool holds = true;
  std::optional<std::array<Element, 3>> witness;  ///< first failing (g, g', g'')
};

/// Exhaustive check of c(gg',g'')c(g,g') = c(g,g'g'')c(g',g'').
CocycleVerdict is_cocycle(const Cochain2& c);

/// (g, g') -> f(gg') f(g)^{-1} f(g')^{-1}. f is given by exponents mod m, f[0] must be 0.
Cochain2 coboundary(const FiniteAbelianGroup& group, int coeff_order, const std::vector<int>& f);

struct CohomologyWitness {
  bool cohomologous = false;
  std::optional<std::vector<int>> f;  ///< c' = coboundary(f) * c
};

/// Brute-force search over all m^{|Gamma|-1} normalized f.
CohomologyWitness are_cohomologous(const Cochain2& c, const Cochain2& c_prime,
                                   const ScaleBounds& bounds = {});

/// Every normalized cocycle Gamma x Gamma -> Z/m, in lexicographic order of tables.
std::vector<Cochain2> all_cocycles(const FiniteAbelianGroup& group, int coeff_order,
                                   const ScaleBounds& bounds = {});

/// One representative per class of H^2(Gamma, Z/m), each the lexicographically
/// least table in its class; the list is sorted.
std::vector<Cochain2> h2_classes(const FiniteAbelianGroup& group, int coeff_order,
                                 const ScaleBounds& bounds = {});

/// Lexicographically least cocycle cohomologous to c.
Cochain2 canonical_representative(const Cochain2& c, const ScaleBounds& bounds = {});

/// Group law on Z/m x Gamma given by (z,g)(z',g') = (z z' c(g,g'), g g').
/// Element index = g * m + z, so (0, identity) has index 0.
class ExtensionGroup {
 public:
  /// Builds the table without checking any axiom.
  explicit ExtensionGroup(const Cochain2& c);

  int order() const { return order_; }
  int kernel_order() const { return m_; }
  int encode(int z, Element g) const { return g * m_ + z; }
  int kernel_part(int x) const { return x % m_; }
  Element quotient_part(int x) const { return x / m_; }

  int multiply(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  const std::vector<int>& table() const { return table_; }

  bool is_associative() const;
  /// Identity (0,1) and two-sided inverses.
  bool has_identity_and_inverses() const;
  /// Z' x {1} commutes with everything.
  bool kernel_is_central() const;
  /// x -> g is a homomorphism onto Gamma with kernel Z' x {1}.
  bool quotient_is_gamma() const;

  int element_order(int x) const;
  std::vector<int> sorted_element_orders() const;
  bool is_abelian() const;

 private:
  int order_;
  int m_;
  FiniteAbelianGroup gamma_;
  std::vector<int> table_;
};

/// Validated extension: throws NotACocycle when c fails the cocycle identity.
/// Associativity of the table and the cocycle identity are both checked and
/// must agree.
ExtensionGroup central_extension(const Cochain2& c);

/// Exhaustive isomorphism search between two multiplication tables.
bool isomorphic(const ExtensionGroup& a, const ExtensionGroup& b);

/// Injective homomorphism sub -> ambient given by images of the cyclic generators.
struct SubgroupEmbedding {
  FiniteAbelianGroup sub;
  std::vector<Element> generator_images;
};

/// Image of every element of the subgroup; throws NotASubgroup if the images
/// do not define an injective homomorphism.
std::vector<Element> embedding_map(const FiniteAbelianGroup& ambient, const SubgroupEmbedding& e);

Cochain2 restrict(const Cochain2& c, const SubgroupEmbedding& e);

/// prod_{i=1}^{n-1} c(g, g^i) with n the order of g, as an exponent mod m.
int zeta(const Cochain2& c, Element g);

}  // namespace peq::cohomology
