#pragma once

#include <string>
#include <vector>

namespace peq {

/// Index of an element of a FiniteAbelianGroup.
using Element = int;

/// Z/n_1 x ... x Z/n_t. Elements are exponent tuples, indexed in row-major
/// order (the last factor varies fastest); index 0 is the identity.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}
  explicit FiniteAbelianGroup(std::vector<int> cyclic_factors);

  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  bool is_cyclic() const;

  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, long k) const;
  int element_order(Element a) const;

  std::vector<int> to_tuple(Element a) const;
  Element from_tuple(const std::vector<int>& t) const;
  /// Unit vector of factor i.
  Element generator(std::size_t i) const;

  /// Elements of the cyclic subgroup generated by g, as g^0, g^1, ...
  std::vector<Element> cyclic_subgroup(Element g) const;

  std::string describe() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  int order_ = 1;
  std::vector<Element> mul_;  // order_ x order_ table
};

}  // namespace peq
