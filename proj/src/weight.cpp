#include "peq/weight.hpp"

#include <stdexcept>
#include <string>

namespace peq {

std::string_view to_string(WeightConvention c) {
  return c == WeightConvention::ResidueInZeroOne ? "zero_one" : "signed";
}

WeightConvention parse_convention(std::string_view s) {
  if (s == "zero_one") return WeightConvention::ResidueInZeroOne;
  if (s == "signed") return WeightConvention::SignedRepresentative;
  throw std::invalid_argument("unknown weight convention '" + std::string(s) + "'");
}

bool FractionalWeight::congruent(const FractionalWeight& other) const {
  return (value_ - other.value_).is_integer();
}

FractionalWeight normalize_weight(const Rational& x, WeightConvention convention) {
  long shift = convention == WeightConvention::ResidueInZeroOne ? x.floor() : x.trunc();
  return FractionalWeight(x - Rational(shift), convention);
}

}  // namespace peq
