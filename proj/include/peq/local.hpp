#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "peq/cyclotomic.hpp"
#include "peq/lie.hpp"
#include "peq/matrix.hpp"

namespace peq::local {

enum class Variable { Upstairs_z, Downstairs_w };

/// Matrix unit E_ij times z^k dz (resp. w^k dw).
struct TermKey {
  int i = 0;
  int j = 0;
  long k = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Truncated series f(z)dz with values in m^C, graded by the eigenspaces of alpha.
///
/// Terms with exponent <= trunc are known exactly (absent means zero); higher
/// exponents are unknown. Zero coefficients are never stored.
class GradedSeries {
 public:
  /// Throws BadSeries when a term lies outside m^C, has a forbidden exponent
  /// (k < 0 for z, k < -1 for w, k > trunc), when N < 1, or when an SL
  /// diagonal is not traceless at some exponent.
  GradedSeries(lie::WeightVector alpha, long n, Variable variable, long trunc,
               std::map<TermKey, Cyclotomic> terms);

  const lie::WeightVector& alpha() const { return alpha_; }
  const lie::GroupModel& model() const { return alpha_.model; }
  long order() const { return n_; }
  Variable variable() const { return variable_; }
  long trunc() const { return trunc_; }
  const std::map<TermKey, Cyclotomic>& terms() const { return terms_; }

  FractionalWeight beta(const TermKey& t) const { return alpha_.beta(t.i, t.j); }
  bool is_zero() const { return terms_.empty(); }

  /// Drops terms above t and lowers trunc to min(trunc, t).
  GradedSeries truncated(long t) const;

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const Cyclotomic& s, const GradedSeries& a);
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  lie::WeightVector alpha_;
  long n_;
  Variable variable_;
  long trunc_;
  std::map<TermKey, Cyclotomic> terms_;
};

std::map<FractionalWeight, GradedSeries> decompose_by_beta(const GradedSeries& series);

/// k == -N beta - 1 + N twist (mod N). False when N beta is not an integer.
bool index_criterion(const Rational& beta, long k, long n, const Rational& twist);

/// Exact evaluation of Ad(e^{2 pi i alpha}) E_ij (zeta z)^k zeta dz against
/// e^{2 pi i twist} E_ij z^k dz, with zeta = e^{2 pi i/N}.
bool substitution_criterion(const lie::WeightVector& alpha, int i, int j, long k, long n,
                            const Rational& twist, const Cyclotomic& coeff);

struct Violation {
  FractionalWeight beta;
  TermKey term;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct InvarianceVerdict {
  bool invariant = true;
  std::vector<Violation> violations;  ///< sorted by (beta, term)
};

/// Both criteria are evaluated on every stored term and must agree. Throws
/// TwistDenominator when N * twist is not an integer, BadSeries for a w-series.
InvarianceVerdict check_invariance(const GradedSeries& series,
                                   const std::optional<Rational>& twist = std::nullopt);

struct ResidueReport {
  CMatrix residue;
  std::optional<int> vanishing_power;  ///< least p with residue^p = 0; empty if not nilpotent
  CMatrix levi_projection;             ///< residue masked by m_alpha^0
  bool support_negative_beta = true;

  bool nilpotent() const { return vanishing_power.has_value(); }
  bool levi_projection_zero() const { return levi_projection.is_zero(); }
  bool in_descended_image() const {
    return support_negative_beta && nilpotent() && levi_projection_zero();
  }
};

ResidueReport residue_report(const GradedSeries& series);

struct Descent {
  GradedSeries downstairs;
  ResidueReport report;
};

/// Valid-through exponents across the covering (minimum over the betas of m^C).
long descended_trunc(const lie::WeightVector& alpha, long n, long trunc);
long ascended_trunc(const lie::WeightVector& alpha, long n, long trunc);

/// Gauge by z^{N alpha} and substitute w = z^N. Throws BadSeries, WeightOnWall,
/// NonIntegralGauge, NotInvariant.
Descent descend(const GradedSeries& series);

/// Inverse of descend. Throws BadSeries, WeightOnWall, NonIntegralGauge,
/// BadResidueSupport.
GradedSeries ascend(const GradedSeries& series);

}  // namespace peq::local
