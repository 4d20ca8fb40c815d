#pragma once

#include <optional>
#include <vector>

#include "peq/abelian_group.hpp"
#include "peq/cohomology.hpp"
#include "peq/lie.hpp"
#include "peq/pseudorep.hpp"
#include "peq/rational.hpp"
#include "peq/scale.hpp"

namespace peq::moduli {

/// Finite abelian Gamma acting on a curve X with quotient Y.
struct CoveringData {
  long genus_x = 2;
  int group_order = 1;
  /// Cyclic factors of Gamma; empty means Z/group_order.
  std::vector<int> group_factors;
  /// Isotropy order N_j of each branch orbit (orbit size N/N_j).
  std::vector<int> orbits;

  FiniteAbelianGroup group() const;
};

/// Ramification contribution sum_j (N/N_j)(N_j - 1).
long ramification_total(const CoveringData& data);

/// 2 g_X - 2 recomputed from g_Y.
long genus_x_from(const CoveringData& data, long genus_y);

/// Genus of Y. Throws InvalidCovering, NonIntegralGenus, NegativeGenus, and
/// NotRealizable when no generating vector of Gamma with these isotropy orders
/// exists (elements c_j of order N_j with product 1 generating Gamma together
/// with 2 g_Y further elements).
long riemann_hurwitz(const CoveringData& data, const ScaleBounds& bounds = {});

struct StratumIndex {
  cohomology::Cochain2 cocycle;
  std::vector<pseudorep::QuotientClass> isotropy;  ///< one per branch orbit

  friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
};

/// Canonical form: least cocycle in the class, classes kept as given.
StratumIndex canonical_stratum(const StratumIndex& s, const ScaleBounds& bounds = {});

/// Quotient classes of pseudorepresentations of Z/n_x with cocycle value `zeta`
/// into the model, modulo Z/m scalars; sorted.
std::vector<pseudorep::QuotientClass> isotropy_classes(int isotropy_order, const Rational& zeta,
                                                       int center_order,
                                                       const lie::GroupModel& model,
                                                       const ScaleBounds& bounds = {});

/// H^2 classes times, per branch orbit, the quotient classes of the restricted
/// cocycle. Gamma must be cyclic of the covering's order.
std::vector<StratumIndex> enumerate_strata(const FiniteAbelianGroup& gamma, int center_order,
                                           const CoveringData& covering,
                                           const lie::GroupModel& model,
                                           const ScaleBounds& bounds = {});

struct FlagPiece {
  Rational s;
  int rank = 1;
  long degree = 0;
};

struct FlagDegreeData {
  std::vector<FlagPiece> pieces;    ///< one per distinct value of s
  std::vector<Rational> corrections;  ///< parabolic contributions, one per point
};

/// Throws InvalidFlag on repeated s-values or nonpositive ranks.
void validate_flag(const FlagDegreeData& flag);

/// sum s * degree + sum corrections.
Rational degree_pairing(const FlagDegreeData& flag);

enum class StabilityMode { Semistable, Stable };

struct StabilityVerdict {
  bool holds = true;
  std::optional<std::size_t> violator;  ///< index of the first failing candidate
  std::vector<Rational> pairings;
};

/// Relative to the supplied candidate reductions only.
StabilityVerdict stability_verdict(const std::vector<FlagDegreeData>& candidates,
                                   StabilityMode mode);

struct ScalingVerdict {
  Rational expected;  ///< N * par_deg_Y
  bool scaling_holds = false;
  bool integral = false;
};

ScalingVerdict degree_scaling_check(const Rational& par_deg_y, long n, const Rational& claimed);

}  // namespace peq::moduli
