#include "peq/moduli.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "peq/error.hpp"

namespace peq::moduli {

FiniteAbelianGroup CoveringData::group() const {
  if (group_factors.empty()) return FiniteAbelianGroup::cyclic(group_order);
  return FiniteAbelianGroup(group_factors);
}

namespace {

void validate_covering(const CoveringData& d) {
  if (d.genus_x < 2) throw Error(Errc::InvalidCovering, "genus of X must be at least 2");
  if (d.group_order < 1) throw Error(Errc::InvalidCovering, "group order must be positive");
  if (!d.group_factors.empty()) {
    long prod = 1;
    for (int f : d.group_factors) {
      if (f < 1) throw Error(Errc::InvalidCovering, "group factors must be positive");
      prod *= f;
    }
    if (prod != d.group_order)
      throw Error(Errc::InvalidCovering, "group factors do not multiply to the group order");
  }
  for (int nj : d.orbits)
    if (nj < 2 || d.group_order % nj != 0)
      throw Error(Errc::InvalidCovering,
                  "isotropy order " + std::to_string(nj) + " must be >= 2 and divide N");
}

std::vector<char> closure(const FiniteAbelianGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  for (std::size_t t = 0; t < members.size(); ++t)
    for (Element x : gens) {
      Element y = g.multiply(members[t], x);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  return in;
}

bool generates(const FiniteAbelianGroup& g, const std::vector<Element>& gens) {
  auto in = closure(g, gens);
  return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
}

/// Some k extra elements generate Gamma together with `base`.
bool completes(const FiniteAbelianGroup& g, std::vector<Element>& gens, int k) {
  if (generates(g, gens)) return true;
  if (k == 0) return false;
  for (Element x = 1; x < g.order(); ++x) {
    gens.push_back(x);
    bool ok = completes(g, gens, k - 1);
    gens.pop_back();
    if (ok) return true;
  }
  return false;
}

struct RealizabilitySearch {
  const FiniteAbelianGroup& g;
  const std::vector<int>& orders;
  int free_generators;
  std::vector<Element> chosen;

  bool run(std::size_t j, Element sum) {
    if (j + 1 == orders.size()) {
      Element last = g.inverse(sum);
      if (g.element_order(last) != orders[j]) return false;
      chosen.push_back(last);
      bool ok = completes(g, chosen, free_generators);
      chosen.pop_back();
      return ok;
    }
    for (Element x = 0; x < g.order(); ++x) {
      if (g.element_order(x) != orders[j]) continue;
      chosen.push_back(x);
      bool ok = run(j + 1, g.multiply(sum, x));
      chosen.pop_back();
      if (ok) return true;
    }
    return false;
  }
};

bool realizable(const CoveringData& d, long genus_y, const ScaleBounds& bounds) {
  const FiniteAbelianGroup g = d.group();
  if (g.order() > bounds.max_group_order)
    throw Error(Errc::ScaleExceeded, "group order " + std::to_string(g.order()) +
                                         " exceeds " + std::to_string(bounds.max_group_order));
  const std::uint64_t space =
      saturating_pow(static_cast<std::uint64_t>(g.order()), d.orbits.size());
  if (space > bounds.max_search)
    throw Error(Errc::ScaleExceeded, "generating-vector search space too large");
  const int free_generators =
      static_cast<int>(std::min<long>(2 * genus_y, static_cast<long>(g.factors().size())));
  RealizabilitySearch s{g, d.orbits, free_generators, {}};
  if (d.orbits.empty()) {
    std::vector<Element> none;
    return completes(g, none, free_generators);
  }
  return s.run(0, 0);
}

std::vector<FractionalWeight> block_least_shift(const std::vector<FractionalWeight>& e,
                                                const std::vector<int>& blocks, int m) {
  std::vector<FractionalWeight> best;
  for (int k = 0; k < m; ++k) {
    std::vector<FractionalWeight> v;
    for (const auto& x : e)
      v.push_back(normalize_weight(x.value() + Rational(k, m), WeightConvention::ResidueInZeroOne));
    std::size_t start = 0;
    for (int b : blocks) {
      std::sort(v.begin() + static_cast<long>(start), v.begin() + static_cast<long>(start + b),
                std::greater<>());
      start += static_cast<std::size_t>(b);
    }
    if (k == 0 || v < best) best = std::move(v);
  }
  return best;
}

}  // namespace

long ramification_total(const CoveringData& data) {
  long r = 0;
  for (int nj : data.orbits) r += static_cast<long>(data.group_order / nj) * (nj - 1);
  return r;
}

long genus_x_from(const CoveringData& data, long genus_y) {
  return (static_cast<long>(data.group_order) * (2 * genus_y - 2) + ramification_total(data) + 2) /
         2;
}

long riemann_hurwitz(const CoveringData& data, const ScaleBounds& bounds) {
  validate_covering(data);
  const long n = data.group_order;
  const long num = 2 * data.genus_x - 2 - ramification_total(data);
  if (num % n != 0)
    throw Error(Errc::NonIntegralGenus,
                "2g_X - 2 - R = " + std::to_string(num) + " is not divisible by N = " +
                    std::to_string(n));
  const long twice = num / n + 2;
  if (twice % 2 != 0) throw Error(Errc::NonIntegralGenus, "2 g_Y = " + std::to_string(twice));
  const long genus_y = twice / 2;
  if (genus_y < 0) throw Error(Errc::NegativeGenus, "g_Y = " + std::to_string(genus_y));
  if (!realizable(data, genus_y, bounds))
    throw Error(Errc::NotRealizable,
                "no elements of the given isotropy orders with product 1 generate " +
                    data.group().describe() + " together with " + std::to_string(2 * genus_y) +
                    " free elements");
  return genus_y;
}

StratumIndex canonical_stratum(const StratumIndex& s, const ScaleBounds& bounds) {
  return StratumIndex{cohomology::canonical_representative(s.cocycle, bounds), s.isotropy};
}

std::vector<pseudorep::QuotientClass> isotropy_classes(int isotropy_order, const Rational& zeta,
                                                       int center_order,
                                                       const lie::GroupModel& model,
                                                       const ScaleBounds& bounds) {
  std::set<std::vector<FractionalWeight>> seen;
  if (model.kind() == lie::ModelKind::UPQ) {
    auto a = pseudorep::enumerate_classes(isotropy_order, model.p(), zeta,
                                          pseudorep::MatrixModel::GL, bounds);
    auto b = pseudorep::enumerate_classes(isotropy_order, model.q(), zeta,
                                          pseudorep::MatrixModel::GL, bounds);
    for (const auto& x : a)
      for (const auto& y : b) {
        std::vector<FractionalWeight> e = x.exponents;
        e.insert(e.end(), y.exponents.begin(), y.exponents.end());
        seen.insert(block_least_shift(e, model.blocks(), center_order));
      }
  } else {
    auto mm = model.kind() == lie::ModelKind::SL ? pseudorep::MatrixModel::SL
                                                 : pseudorep::MatrixModel::GL;
    for (const auto& cls :
         pseudorep::enumerate_classes(isotropy_order, model.size(), zeta, mm, bounds))
      seen.insert(pseudorep::project_mod_center(cls, center_order).exponents);
  }
  std::vector<pseudorep::QuotientClass> out;
  for (const auto& e : seen) out.push_back(pseudorep::QuotientClass{isotropy_order, center_order, e});
  return out;
}

std::vector<StratumIndex> enumerate_strata(const FiniteAbelianGroup& gamma, int center_order,
                                           const CoveringData& covering,
                                           const lie::GroupModel& model,
                                           const ScaleBounds& bounds) {
  if (!gamma.is_cyclic() || gamma.order() != covering.group_order)
    throw Error(Errc::InvalidCovering, "Gamma must be cyclic of order " +
                                           std::to_string(covering.group_order));
  for (int nj : covering.orbits)
    if (nj < 2 || covering.group_order % nj != 0)
      throw Error(Errc::InvalidCovering, "isotropy order " + std::to_string(nj) +
                                             " must be >= 2 and divide N");
  Element g0 = 0;
  for (Element x = 0; x < gamma.order(); ++x)
    if (gamma.element_order(x) == gamma.order()) {
      g0 = x;
      break;
    }

  std::vector<StratumIndex> out;
  for (const auto& c : cohomology::h2_classes(gamma, center_order, bounds)) {
    std::vector<std::vector<pseudorep::QuotientClass>> per_orbit;
    for (int nj : covering.orbits) {
      cohomology::SubgroupEmbedding e{FiniteAbelianGroup::cyclic(nj),
                                      {gamma.power(g0, covering.group_order / nj)}};
      const auto cx = cohomology::restrict(c, e);
      per_orbit.push_back(
          isotropy_classes(nj, pseudorep::central_value(cx).value(), center_order, model, bounds));
    }
    std::vector<std::size_t> idx(per_orbit.size(), 0);
    if (std::any_of(per_orbit.begin(), per_orbit.end(), [](const auto& v) { return v.empty(); }))
      continue;
    while (true) {
      StratumIndex s{c, {}};
      for (std::size_t j = 0; j < per_orbit.size(); ++j) s.isotropy.push_back(per_orbit[j][idx[j]]);
      out.push_back(std::move(s));
      std::size_t j = per_orbit.size();
      while (j > 0 && ++idx[j - 1] == per_orbit[j - 1].size()) idx[--j] = 0;
      if (j == 0) break;
    }
  }
  return out;
}

void validate_flag(const FlagDegreeData& flag) {
  std::set<Rational> values;
  for (const auto& p : flag.pieces) {
    if (p.rank < 1) throw Error(Errc::InvalidFlag, "graded piece ranks must be positive");
    if (!values.insert(p.s).second)
      throw Error(Errc::InvalidFlag, "repeated s-value " + p.s.str());
  }
}

Rational degree_pairing(const FlagDegreeData& flag) {
  validate_flag(flag);
  Rational total(0);
  for (const auto& p : flag.pieces) total += p.s * Rational(p.degree);
  for (const auto& c : flag.corrections) total += c;
  return total;
}

StabilityVerdict stability_verdict(const std::vector<FlagDegreeData>& candidates,
                                   StabilityMode mode) {
  StabilityVerdict v;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Rational d = degree_pairing(candidates[i]);
    bool ok = mode == StabilityMode::Stable ? d.sign() > 0 : d.sign() >= 0;
    if (!ok && v.holds) {
      v.holds = false;
      v.violator = i;
    }
    v.pairings.push_back(d);
  }
  return v;
}

ScalingVerdict degree_scaling_check(const Rational& par_deg_y, long n, const Rational& claimed) {
  if (n < 1) throw Error(Errc::InvalidCovering, "N must be positive");
  ScalingVerdict v;
  v.expected = Rational(n) * par_deg_y;
  v.scaling_holds = v.expected == claimed;
  v.integral = claimed.is_integer();
  return v;
}

}  // namespace peq::moduli
