#pragma once

#include <compare>
#include <string_view>

#include "peq/rational.hpp"

namespace peq {

/// Which representative of a class in Q/Z a weight carries.
enum class WeightConvention {
  ResidueInZeroOne,     ///< 0 <= value < 1
  SignedRepresentative  ///< -1 < value < 1, sign of the input kept
};

std::string_view to_string(WeightConvention c);
WeightConvention parse_convention(std::string_view s);

/// A rational number used through its class mod 1 (weights, eigenvalue exponents).
class FractionalWeight {
 public:
  FractionalWeight() = default;

  Rational value() const { return value_; }
  WeightConvention convention() const { return convention_; }

  /// True iff the two values differ by an integer.
  bool congruent(const FractionalWeight& other) const;

  friend bool operator==(const FractionalWeight&, const FractionalWeight&) = default;
  friend auto operator<=>(const FractionalWeight& a, const FractionalWeight& b) {
    return a.value_ <=> b.value_;
  }

 private:
  friend FractionalWeight normalize_weight(const Rational& x, WeightConvention convention);
  FractionalWeight(Rational v, WeightConvention c) : value_(std::move(v)), convention_(c) {}

  Rational value_{0};
  WeightConvention convention_ = WeightConvention::ResidueInZeroOne;
};

/// Representative of x mod 1 in the convention's range.
///
/// ResidueInZeroOne subtracts floor(x). SignedRepresentative subtracts the
/// integer part rounded toward zero, so values already inside (-1, 1) are
/// returned unchanged and the sign of a non-integer input is preserved.
FractionalWeight normalize_weight(const Rational& x, WeightConvention convention);

}  // namespace peq
