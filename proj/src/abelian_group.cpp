#include "peq/abelian_group.hpp"

#include <stdexcept>

namespace peq {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_factors)
    : factors_(std::move(cyclic_factors)) {
  order_ = 1;
  for (int n : factors_) {
    if (n < 1) throw std::invalid_argument("cyclic factor orders must be positive");
    order_ *= n;
    if (order_ > 4096) throw std::invalid_argument("group order too large");
  }
  mul_.assign(static_cast<std::size_t>(order_) * order_, 0);
  for (Element a = 0; a < order_; ++a) {
    const auto ta = to_tuple(a);
    for (Element b = 0; b < order_; ++b) {
      auto tb = to_tuple(b);
      for (std::size_t i = 0; i < factors_.size(); ++i) tb[i] = (ta[i] + tb[i]) % factors_[i];
      mul_[static_cast<std::size_t>(a) * order_ + b] = from_tuple(tb);
    }
  }
}

bool FiniteAbelianGroup::is_cyclic() const {
  for (Element a = 0; a < order_; ++a)
    if (element_order(a) == order_) return true;
  return false;
}

Element FiniteAbelianGroup::multiply(Element a, Element b) const {
  return mul_[static_cast<std::size_t>(a) * order_ + b];
}

Element FiniteAbelianGroup::inverse(Element a) const {
  auto t = to_tuple(a);
  for (std::size_t i = 0; i < factors_.size(); ++i) t[i] = (factors_[i] - t[i]) % factors_[i];
  return from_tuple(t);
}

Element FiniteAbelianGroup::power(Element a, long k) const {
  auto t = to_tuple(a);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long n = factors_[i];
    t[i] = static_cast<int>((((t[i] * k) % n) + n) % n);
  }
  return from_tuple(t);
}

int FiniteAbelianGroup::element_order(Element a) const {
  int k = 1;
  Element x = a;
  while (x != 0) {
    x = multiply(x, a);
    ++k;
  }
  return k;
}

std::vector<int> FiniteAbelianGroup::to_tuple(Element a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("group element index out of range");
  std::vector<int> t(factors_.size(), 0);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    t[i] = a % factors_[i];
    a /= factors_[i];
  }
  return t;
}

Element FiniteAbelianGroup::from_tuple(const std::vector<int>& t) const {
  if (t.size() != factors_.size()) throw std::invalid_argument("tuple length mismatch");
  Element a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int n = factors_[i];
    a = a * n + ((t[i] % n) + n) % n;
  }
  return a;
}

Element FiniteAbelianGroup::generator(std::size_t i) const {
  std::vector<int> t(factors_.size(), 0);
  t.at(i) = 1 % factors_[i];
  return from_tuple(t);
}

std::vector<Element> FiniteAbelianGroup::cyclic_subgroup(Element g) const {
  std::vector<Element> out{0};
  for (Element x = g; x != 0; x = multiply(x, g)) out.push_back(x);
  return out;
}

std::string FiniteAbelianGroup::describe() const {
  if (factors_.empty()) return "Z/1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

}  // namespace peq
