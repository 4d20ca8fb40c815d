#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace peq {

/// Domain error codes. Each maps to a stable string used in CLI output.
enum class Errc {
  DenominatorNotDividing,
  IncompatibleOrders,
  DivisionByZero,
  NotNormalized,
  NotACocycle,
  NotASubgroup,
  ScaleExceeded,
  SizeMismatch,
  NotAPseudoRep,
  IsotropyMismatch,
  NotAHomomorphism,
  RankMismatch,
  NotSpecialLinear,
  NotAlcoveForm,
  NotInIH,
  TwistDenominator,
  NotInvariant,
  WeightOnWall,
  NonIntegralGauge,
  BadResidueSupport,
  BadSeries,
  NonIntegralGenus,
  NegativeGenus,
  NotRealizable,
  InvalidCovering,
  InvalidFlag,
};

std::string_view to_string(Errc code);

/// Thrown for every precondition or domain failure of a library operation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace peq
