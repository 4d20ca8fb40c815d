#include "peq/error.hpp"

namespace peq {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DenominatorNotDividing: return "DenominatorNotDividing";
    case Errc::IncompatibleOrders: return "IncompatibleOrders";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotAPseudoRep: return "NotAPseudoRep";
    case Errc::IsotropyMismatch: return "IsotropyMismatch";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotSpecialLinear: return "NotSpecialLinear";
    case Errc::NotAlcoveForm: return "NotAlcoveForm";
    case Errc::NotInIH: return "NotInIH";
    case Errc::TwistDenominator: return "TwistDenominator";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::WeightOnWall: return "WeightOnWall";
    case Errc::NonIntegralGauge: return "NonIntegralGauge";
    case Errc::BadResidueSupport: return "BadResidueSupport";
    case Errc::BadSeries: return "BadSeries";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::NegativeGenus: return "NegativeGenus";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::InvalidCovering: return "InvalidCovering";
    case Errc::InvalidFlag: return "InvalidFlag";
  }
  return "Unknown";
}

}  // namespace peq
