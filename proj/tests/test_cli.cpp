#include <doctest.h>

#include <random>

#include "peq/cli.hpp"
#include "peq/json_io.hpp"
#include "support.hpp"

using namespace peq;
using nlohmann::json;

namespace {

cli::Outcome run(std::vector<std::string> cmd, const json& in, cli::Options opts = {}) {
  return cli::execute(cmd, in, opts);
}

json e21_series() {
  return json::parse(R"({"model": {"kind": "gl", "r": 2}, "alpha": ["1/2", "0"], "N": 2,
    "variable": "z", "trunc": 6, "terms": [{"basis": [2, 1], "k": 0, "coeff": "1"}]})");
}

}  // namespace

TEST_CASE("serialization round trips") {
  std::mt19937 rng(6);
  for (int t = 0; t < 30; ++t) {
    auto c = testing::small_cyclotomic(rng, 1 + static_cast<long>(rng() % 12));
    CHECK(io::cyclotomic_from(io::to_json(c)) == c);
    Rational r(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
    CHECK(io::rational_from(io::to_json(r)) == r);
    auto w = normalize_weight(r, WeightConvention::SignedRepresentative);
    CHECK(io::weight_from(io::to_json(w)) == w);
  }
  for (const auto& c : cohomology::all_cocycles(FiniteAbelianGroup({2, 2}), 2))
    CHECK(io::cochain_from(io::to_json(c)) == c);

  auto c = cohomology::all_cocycles(FiniteAbelianGroup::cyclic(3), 3)[2];
  auto sigma = testing::diagonal_pseudorep(c, testing::admissible_exponents(rng, 3, 2, pseudorep::central_value(c).value()));
  auto back = io::pseudorep_from(io::to_json(sigma));
  CHECK(back.cocycle == sigma.cocycle);
  CHECK(back.images == sigma.images);

  auto cls = pseudorep::classify(sigma);
  CHECK(io::class_from(io::to_json(cls)) == cls);
  auto qc = pseudorep::project_mod_center(cls, 3);
  CHECK(io::quotient_class_from(io::to_json(qc)) == qc);

  for (const auto& m : {lie::GroupModel::gl(3), lie::GroupModel::sl(2), lie::GroupModel::upq(1, 2)})
    CHECK(io::model_from(io::to_json(m)) == m);

  for (const auto& model : {lie::GroupModel::gl(2), lie::GroupModel::sl(2), lie::GroupModel::upq(1, 1)}) {
    auto weights = testing::interior_weights(model, 4);
    auto s = testing::random_invariant_series(rng, weights.front(), 4, 10);
    CHECK(io::series_from(io::to_json(s)) == s);
  }

  moduli::CoveringData d{3, 4, {2, 2}, {2, 2}};
  auto d2 = io::covering_from(io::to_json(d));
  CHECK(d2.genus_x == 3);
  CHECK(d2.group_factors == d.group_factors);
  CHECK(d2.orbits == d.orbits);

  moduli::FlagDegreeData f{{{Rational(-1, 2), 2, 3}}, {Rational(1, 3)}};
  CHECK(io::to_json(io::flag_from(io::to_json(f))) == io::to_json(f));
}

TEST_CASE("command examples") {
  auto d = run({"local", "descend"}, e21_series());
  CHECK(d.exit_code == 0);
  auto residue = io::matrix_from(d.output["residue"]["residue"]);
  CHECK(residue(1, 0) == Cyclotomic::from_rational(Rational(1, 2)));
  CHECK(d.output["audit"]["N"] == 2);

  auto h = run({"cocycle", "h2"}, json{{"group", {2}}, {"coeff_order", 2}});
  CHECK(h.exit_code == 0);
  CHECK(h.output["classes"] == 2);

  json empty = e21_series();
  empty["terms"] = json::array();
  auto e = run({"local", "check"}, empty);
  CHECK(e.exit_code == 0);
  CHECK(e.output["invariant"] == true);
}

TEST_CASE("exit codes") {
  auto unknown = run({"local", "explode"}, json::object());
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.contains("audit"));

  auto missing = run({"cocycle", "h2"}, json{{"group", {2}}});
  CHECK(missing.exit_code == 2);
  CHECK(missing.output["error"] == "MalformedInput");

  auto domain = run({"moduli", "rh"}, json{{"genus_x", 2}, {"group_order", 3}, {"orbits", json::array()}});
  CHECK(domain.exit_code == 1);
  CHECK(domain.output["error"] == "NonIntegralGenus");

  cli::Options twist;
  twist.twist = "1/2";
  CHECK(run({"cocycle", "h2"}, json{{"group", {2}}, {"coeff_order", 2}}, twist).exit_code == 2);
  CHECK(run({"local", "check"}, e21_series(), twist).exit_code == 0);
  twist.twist = "1/3";
  auto bad_twist = run({"local", "check"}, e21_series(), twist);
  CHECK(bad_twist.exit_code == 1);
  CHECK(bad_twist.output["error"] == "TwistDenominator");

  cli::Options tight;
  tight.scale_bound = 3;
  auto capped = run({"cocycle", "h2"}, json{{"group", {4}}, {"coeff_order", 2}}, tight);
  CHECK(capped.exit_code == 1);
  CHECK(capped.output["error"] == "ScaleExceeded");
}

TEST_CASE("working order override") {
  cli::Options o;
  o.order = 4;
  auto d = run({"local", "descend"}, e21_series(), o);
  REQUIRE(d.exit_code == 0);
  CHECK(d.output["audit"]["M"] == 4);
  CHECK(d.output["residue"]["residue"][1][0]["order"] == 4);
  o.order = 3;
  json s = e21_series();
  s["terms"][0]["coeff"] = json{{"order", 4}, {"coeffs", {"0", "1"}}};
  CHECK(run({"local", "descend"}, s, o).exit_code == 1);
}

TEST_CASE("determinism") {
  json in{{"covering", {{"genus_x", 3}, {"group_order", 4}, {"orbits", {2, 4}}}},
          {"center_order", 2},
          {"model", {{"kind", "gl"}, {"r", 2}}}};
  auto a = cli::render(run({"moduli", "strata"}, in).output);
  auto b = cli::render(run({"moduli", "strata"}, in).output);
  CHECK(a == b);
}

TEST_CASE("golden corpus replays") {
  auto results = cli::run_corpus(PEQ_CORPUS_DIR);
  CHECK(results.size() >= 20);
  for (const auto& r : results) {
    INFO(r.file << ": " << r.detail);
    CHECK(r.passed);
  }
}
