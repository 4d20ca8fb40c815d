#include <doctest.h>

#include <set>

#include "peq/error.hpp"
#include "peq/moduli.hpp"

using namespace peq;
using namespace peq::moduli;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidCovering;
}

long binomial(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("riemann_hurwitz examples") {
  CHECK(riemann_hurwitz(CoveringData{2, 2, {}, {2, 2}}) == 1);
  CHECK(riemann_hurwitz(CoveringData{3, 2, {}, {}}) == 2);
  // 2 = 3(2g_Y - 2) + 2 solves to g_Y = 1, but a single branch point of a
  // cyclic cover cannot occur: its monodromy would have to be trivial.
  CHECK(code_of([] { riemann_hurwitz(CoveringData{2, 3, {}, {3}}); }) == Errc::NotRealizable);
  CHECK(code_of([] { riemann_hurwitz(CoveringData{2, 3, {}, {}}); }) == Errc::NonIntegralGenus);
  CHECK(code_of([] { riemann_hurwitz(CoveringData{2, 2, {}, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}}); }) ==
        Errc::NegativeGenus);
  CHECK(code_of([] { riemann_hurwitz(CoveringData{2, 4, {}, {3}}); }) == Errc::InvalidCovering);
  CHECK(code_of([] { riemann_hurwitz(CoveringData{1, 2, {}, {}}); }) == Errc::InvalidCovering);
  // hyperelliptic: genus 2 over P^1 with six branch points
  CHECK(riemann_hurwitz(CoveringData{2, 2, {}, {2, 2, 2, 2, 2, 2}}) == 0);
  // Z/2 x Z/2 over P^1 with five branch points of order 2
  CHECK(riemann_hurwitz(CoveringData{2, 4, {2, 2}, {2, 2, 2, 2, 2}}) == 0);
}

TEST_CASE("riemann_hurwitz reproduces genus_x") {
  for (long gx = 2; gx <= 6; ++gx)
    for (int n = 1; n <= 6; ++n)
      for (int r = 0; r <= 4; ++r) {
        std::vector<int> divisors;
        for (int d = 2; d <= n; ++d)
          if (n % d == 0) divisors.push_back(d);
        if (divisors.empty() && r > 0) continue;
        std::vector<int> orbits;
        for (int i = 0; i < r; ++i) orbits.push_back(divisors[static_cast<std::size_t>(i) % divisors.size()]);
        CoveringData d{gx, n, {}, orbits};
        try {
          long gy = riemann_hurwitz(d);
          CHECK(gy >= 0);
          CHECK(genus_x_from(d, gy) == gx);
        } catch (const Error&) {
        }
      }
}

TEST_CASE("enumerate_strata examples") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  CHECK(enumerate_strata(z2, 2, CoveringData{2, 2, {}, {2}}, lie::GroupModel::gl(1)).size() == 2);
  CHECK(enumerate_strata(FiniteAbelianGroup::cyclic(1), 3, CoveringData{2, 1, {}, {}},
                         lie::GroupModel::gl(2))
            .size() == 1);
  auto three = enumerate_strata(z2, 1, CoveringData{2, 2, {}, {2}}, lie::GroupModel::gl(2));
  REQUIRE(three.size() == 3);
  std::set<std::vector<Rational>> seen;
  for (const auto& s : three) {
    std::vector<Rational> e;
    for (const auto& x : s.isotropy[0].exponents) e.push_back(x.value());
    seen.insert(e);
  }
  CHECK(seen == std::set<std::vector<Rational>>{
                    {0, 0}, {Rational(1, 2), 0}, {Rational(1, 2), Rational(1, 2)}});
  CHECK_THROWS_AS(enumerate_strata(FiniteAbelianGroup({2, 2}), 2, CoveringData{2, 4, {2, 2}, {2}},
                                   lie::GroupModel::gl(1)),
                  Error);
}

TEST_CASE("strata count factorizes") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int r = 1; r <= 2; ++r) {
        std::vector<int> orbits;
        for (int d = 2; d <= n; ++d)
          if (n % d == 0) orbits.push_back(d);
        auto gamma = FiniteAbelianGroup::cyclic(n);
        CoveringData cov{2, n, {}, orbits};
        auto model = lie::GroupModel::gl(r);
        auto strata = enumerate_strata(gamma, m, cov, model);
        std::size_t expected = 0;
        for (const auto& c : cohomology::h2_classes(gamma, m)) {
          std::size_t prod = 1;
          for (int nj : orbits) {
            auto cx = cohomology::restrict(
                c, cohomology::SubgroupEmbedding{FiniteAbelianGroup::cyclic(nj), {n / nj}});
            // independent count: distinct least shifts over all multisets
            std::set<std::vector<FractionalWeight>> classes;
            for (const auto& cls : pseudorep::enumerate_classes(nj, r, pseudorep::central_value(cx).value(),
                                                                pseudorep::MatrixModel::GL))
              classes.insert(pseudorep::least_shift(cls.exponents, m));
            prod *= classes.size();
          }
          expected += prod;
        }
        CHECK(strata.size() == expected);
        if (m == 1 && !orbits.empty()) {
          std::size_t raw = 1;
          for (int nj : orbits) raw *= static_cast<std::size_t>(binomial(nj + r - 1, r));
          CHECK(strata.size() == raw);
        }
      }
}

TEST_CASE("upq strata use block classes") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  // blocks {0},{1/2} each; simultaneous shift by 1/2 pairs (0|0)~(1/2|1/2), (0|1/2)~(1/2|0)
  auto s = enumerate_strata(z2, 2, CoveringData{2, 2, {}, {2, 2}}, lie::GroupModel::upq(1, 1));
  CHECK(s.size() == 2 * 2 * 2);
}

TEST_CASE("canonical strata coincide for cohomologous cocycles") {
  auto z2 = FiniteAbelianGroup::cyclic(2);
  auto quotient = isotropy_classes(2, Rational(0), 4, lie::GroupModel::gl(1));
  StratumIndex a{cohomology::Cochain2::trivial(z2, 4), {quotient[0]}};
  StratumIndex b{cohomology::coboundary(z2, 4, {0, 1}), {quotient[0]}};
  CHECK_FALSE(a == b);
  CHECK(canonical_stratum(a) == canonical_stratum(b));
}

TEST_CASE("degree_pairing") {
  CHECK(degree_pairing(FlagDegreeData{{{0, 2, 5}}, {}}) == Rational(0));
  FlagDegreeData f{{{-1, 1, 1}, {1, 1, -1}}, {}};
  CHECK(degree_pairing(f) == Rational(-2));
  CHECK(degree_pairing(FlagDegreeData{{{-1, 1, 0}, {1, 1, 0}}, {Rational(1, 2)}}) == Rational(1, 2));
  CHECK_THROWS_AS(degree_pairing(FlagDegreeData{{{1, 1, 0}, {1, 1, 0}}, {}}), Error);

  // homogeneous in s, additive in degrees
  FlagDegreeData g{{{Rational(-3), 1, 2}, {Rational(1, 2), 2, -1}}, {}};
  FlagDegreeData g2 = g;
  for (auto& p : g2.pieces) p.s = Rational(3) * p.s;
  CHECK(degree_pairing(g2) == Rational(3) * degree_pairing(g));
  FlagDegreeData h = g;
  h.pieces[0].degree += 4;
  FlagDegreeData delta{{{Rational(-3), 1, 4}, {Rational(1, 2), 2, 0}}, {}};
  CHECK(degree_pairing(h) == degree_pairing(g) + degree_pairing(delta));
}

TEST_CASE("stability_verdict") {
  auto empty = stability_verdict({}, StabilityMode::Stable);
  CHECK(empty.holds);

  FlagDegreeData neg{{{-1, 1, 1}, {1, 1, -1}}, {}};
  auto v = stability_verdict({neg}, StabilityMode::Semistable);
  CHECK_FALSE(v.holds);
  CHECK(v.violator == 0u);

  FlagDegreeData zero{{{0, 1, 3}}, {}};
  FlagDegreeData three{{{1, 1, 3}}, {}};
  CHECK(stability_verdict({zero, three}, StabilityMode::Semistable).holds);
  auto s = stability_verdict({zero, three}, StabilityMode::Stable);
  CHECK_FALSE(s.holds);
  CHECK(s.violator == 0u);
}

TEST_CASE("degree_scaling_check") {
  auto a = degree_scaling_check(Rational(1, 2), 2, Rational(1));
  CHECK(a.scaling_holds);
  CHECK(a.integral);
  auto b = degree_scaling_check(Rational(0), 5, Rational(0));
  CHECK(b.scaling_holds);
  auto c = degree_scaling_check(Rational(1, 3), 2, Rational(2, 3));
  CHECK(c.scaling_holds);
  CHECK_FALSE(c.integral);
  CHECK_FALSE(degree_scaling_check(Rational(1, 3), 2, Rational(1)).scaling_holds);
}
