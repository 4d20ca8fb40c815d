#pragma once

#include <cstdint>

namespace peq {

/// Desk-scale limits for the brute-force enumerations.
struct ScaleBounds {
  int max_group_order = 24;      ///< any FiniteAbelianGroup handed to an operation
  int max_h2_group_order = 8;    ///< |Gamma| for cocycle enumeration and H^2
  int max_coeff_order = 8;       ///< m = |Z'| for cocycle enumeration and H^2
  std::uint64_t max_search = 1'000'000;  ///< cap on m^{|Gamma|-1} style search spaces
  int max_class_enum = 24;       ///< n * r for pseudorepresentation class enumeration

  /// Defaults, with max_search overridden by PEQ_SCALE_BOUND when set.
  static ScaleBounds from_env();
};

/// base^exp saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace peq
