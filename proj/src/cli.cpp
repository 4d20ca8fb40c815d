#include "peq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "peq/error.hpp"
#include "peq/json_io.hpp"

namespace peq::cli {

using nlohmann::json;
using io::field;
using io::to_json;

namespace {

struct Context {
  const Options& options;
  ScaleBounds bounds;
  json audit = json::object();
};

using Handler = std::function<json(const json&, Context&)>;

void audit_local(Context& ctx, const local::GradedSeries& s) {
  json alpha = json::array();
  for (const auto& e : s.alpha().entries) alpha.push_back(to_json(e.value()));
  ctx.audit["N"] = s.order();
  ctx.audit["alpha"] = alpha;
  ctx.audit["convention"] = std::string(to_string(WeightConvention::SignedRepresentative));
}

json witness_json(const std::optional<std::pair<Element, Element>>& w) {
  if (!w) return nullptr;
  return json{w->first, w->second};
}

// cocycle -------------------------------------------------------------------

json cocycle_verify(const json& in, Context&) {
  auto v = cohomology::is_cocycle(io::cochain_from(in));
  json w = v.witness ? json(*v.witness) : json(nullptr);
  return json{{"is_cocycle", v.holds}, {"witness", w}};
}

json cocycle_h2(const json& in, Context& ctx) {
  auto g = io::group_from(field(in, "group"));
  long m = io::get_long(in, "coeff_order");
  if (m < 1) throw io::MalformedInput("coeff_order must be positive");
  auto classes = cohomology::h2_classes(g, static_cast<int>(m), ctx.bounds);
  json reps = json::array();
  for (const auto& c : classes) reps.push_back(to_json(c));
  return json{{"classes", classes.size()}, {"representatives", reps}};
}

json cocycle_extend(const json& in, Context&) {
  auto ext = cohomology::central_extension(io::cochain_from(in));
  auto orders = ext.sorted_element_orders();
  return json{{"order", ext.order()},
              {"kernel_order", ext.kernel_order()},
              {"element_orders", orders},
              {"abelian", ext.is_abelian()},
              {"cyclic", !orders.empty() && orders.back() == ext.order()},
              {"axioms",
               {{"associative", ext.is_associative()},
                {"identity_and_inverses", ext.has_identity_and_inverses()},
                {"kernel_central", ext.kernel_is_central()},
                {"quotient_is_gamma", ext.quotient_is_gamma()}}}};
}

json cocycle_zeta(const json& in, Context&) {
  auto c = io::cochain_from(field(in, "cocycle"));
  long g = io::get_long(in, "element");
  if (g < 0 || g >= c.group().order()) throw io::MalformedInput("element index out of range");
  int z = cohomology::zeta(c, static_cast<Element>(g));
  return json{{"zeta", to_json(Rational(z, c.coeff_order()))},
              {"element_order", c.group().element_order(static_cast<Element>(g))}};
}

// pseudorep -----------------------------------------------------------------

json pseudorep_verify(const json& in, Context&) {
  auto v = pseudorep::verify_pseudorep(io::pseudorep_from(in));
  return json{{"holds", v.holds}, {"witness", witness_json(v.witness)}};
}

json pseudorep_classify(const json& in, Context& ctx) {
  ctx.audit["convention"] = std::string(to_string(WeightConvention::ResidueInZeroOne));
  return to_json(pseudorep::classify(io::pseudorep_from(in)));
}

json pseudorep_enumerate(const json& in, Context& ctx) {
  long n = io::get_long(in, "order");
  long r = io::get_long(in, "rank");
  if (n < 1 || r < 1) throw io::MalformedInput("order and rank must be positive");
  Rational zeta = io::rational_from(field(in, "zeta"));
  const json& mk = field(in, "model");
  if (!mk.is_string() || (mk != "gl" && mk != "sl")) throw io::MalformedInput("model must be \"gl\" or \"sl\"");
  auto model = mk == "gl" ? pseudorep::MatrixModel::GL : pseudorep::MatrixModel::SL;
  auto classes = pseudorep::enumerate_classes(static_cast<int>(n), static_cast<int>(r), zeta, model,
                                              ctx.bounds);
  json out = json::array();
  for (const auto& c : classes) out.push_back(to_json(c));
  ctx.audit["convention"] = std::string(to_string(WeightConvention::ResidueInZeroOne));
  return json{{"count", classes.size()}, {"classes", out}};
}

json pseudorep_transport(const json& in, Context&) {
  auto sigma = io::pseudorep_from(field(in, "pseudorep"));
  auto ambient = io::group_from(field(in, "ambient"));
  long img = io::get_long(in, "generator_image");
  long g0 = io::get_long(in, "gamma0");
  if (img < 0 || img >= ambient.order() || g0 < 0 || g0 >= ambient.order())
    throw io::MalformedInput("element index out of range");
  auto t = pseudorep::deck_transport(sigma, ambient, static_cast<Element>(img),
                                     static_cast<Element>(g0));
  return json{{"target_generator", t.target_generator}, {"pseudorep", to_json(t.rep)}};
}

json pseudorep_project(const json& in, Context&) {
  auto cls = io::class_from(field(in, "class"));
  long m = io::get_long(in, "center_order");
  if (m < 1) throw io::MalformedInput("center_order must be positive");
  return to_json(pseudorep::project_mod_center(cls, static_cast<int>(m)));
}

// lie -----------------------------------------------------------------------

void audit_lie(Context& ctx, const lie::GroupModel& m) {
  ctx.audit["convention"] = std::string(to_string(m.kind() == lie::ModelKind::SL
                                                      ? WeightConvention::SignedRepresentative
                                                      : WeightConvention::ResidueInZeroOne));
}

json lie_alcove(const json& in, Context& ctx) {
  auto model = io::model_from(field(in, "model"));
  audit_lie(ctx, model);
  return to_json(lie::alcove_normalize(model, io::rationals_from(field(in, "exponents"))));
}

json lie_eigenspaces(const json& in, Context& ctx) {
  auto model = io::model_from(field(in, "model"));
  audit_lie(ctx, model);
  auto alpha = lie::make_weight_vector(model, io::rationals_from(field(in, "alpha")));
  json pieces = json::array();
  int total = 0;
  for (const auto& p : lie::isotropy_eigenspaces(alpha)) {
    pieces.push_back(json{{"beta", to_json(p.beta.value())}, {"dim", p.dim}, {"mask", to_json(p.mask)}});
    total += p.dim;
  }
  ctx.audit["alpha"] = to_json(alpha)["entries"];
  return json{{"pieces", pieces}, {"total_dim", total}, {"m_dim", lie::m_mask(model).dim()}};
}

json lie_parabolic(const json& in, Context&) {
  auto model = io::model_from(field(in, "model"));
  auto data = lie::parabolic_from_s(model, io::rationals_from(field(in, "s")));
  auto checks = lie::check_parabolic(data);
  return json{{"p", to_json(data.p)},
              {"l", to_json(data.l)},
              {"m_s", to_json(data.m_s)},
              {"m_s0", to_json(data.m_s0)},
              {"checks",
               {{"levi_is_intersection", checks.levi_is_intersection},
                {"p_closed", checks.p_closed},
                {"p_preserves_m", checks.p_preserves_m},
                {"l_preserves_m0", checks.l_preserves_m0}}}};
}

// local ---------------------------------------------------------------------

json local_check(const json& in, Context& ctx) {
  auto s = io::series_from(in);
  audit_local(ctx, s);
  std::optional<Rational> twist;
  if (ctx.options.twist) {
    twist = io::rational_from(json(*ctx.options.twist));
    ctx.audit["twist"] = to_json(*twist);
  }
  auto v = local::check_invariance(s, twist);
  json viol = json::array();
  for (const auto& x : v.violations)
    viol.push_back(json{{"basis", {x.term.i + 1, x.term.j + 1}}, {"k", x.term.k},
                        {"beta", to_json(x.beta.value())}});
  return json{{"invariant", v.invariant}, {"violations", viol}};
}

json local_descend(const json& in, Context& ctx) {
  auto s = io::series_from(in);
  audit_local(ctx, s);
  auto d = local::descend(s);
  return json{{"downstairs", to_json(d.downstairs)}, {"residue", to_json(d.report)}};
}

json local_ascend(const json& in, Context& ctx) {
  auto s = io::series_from(in);
  audit_local(ctx, s);
  return json{{"upstairs", to_json(local::ascend(s))}};
}

json local_residue(const json& in, Context& ctx) {
  auto s = io::series_from(in);
  audit_local(ctx, s);
  return to_json(local::residue_report(s));
}

// moduli --------------------------------------------------------------------

json moduli_rh(const json& in, Context& ctx) {
  auto d = io::covering_from(in);
  long gy = moduli::riemann_hurwitz(d, ctx.bounds);
  ctx.audit["N"] = d.group_order;
  return json{{"genus_y", gy}, {"ramification", moduli::ramification_total(d)}};
}

json moduli_strata(const json& in, Context& ctx) {
  auto d = io::covering_from(field(in, "covering"));
  long m = io::get_long(in, "center_order");
  if (m < 1) throw io::MalformedInput("center_order must be positive");
  auto model = io::model_from(field(in, "model"));
  if (d.group_order < 1) throw io::MalformedInput("group_order must be positive");
  auto strata = moduli::enumerate_strata(d.group(), static_cast<int>(m), d, model, ctx.bounds);
  json out = json::array();
  for (const auto& s : strata) out.push_back(to_json(s));
  ctx.audit["N"] = d.group_order;
  ctx.audit["convention"] = std::string(to_string(WeightConvention::ResidueInZeroOne));
  return json{{"count", strata.size()}, {"strata", out}};
}

json moduli_degree(const json& in, Context&) {
  return json{{"pairing", to_json(moduli::degree_pairing(io::flag_from(in)))}};
}

json moduli_stability(const json& in, Context&) {
  std::vector<moduli::FlagDegreeData> cands;
  const json& cs = field(in, "candidates");
  if (!cs.is_array()) throw io::MalformedInput("candidates must be an array");
  for (const auto& c : cs) cands.push_back(io::flag_from(c));
  const json& mode = field(in, "mode");
  if (!mode.is_string() || (mode != "semistable" && mode != "stable"))
    throw io::MalformedInput("mode must be \"semistable\" or \"stable\"");
  auto v = moduli::stability_verdict(
      cands, mode == "stable" ? moduli::StabilityMode::Stable : moduli::StabilityMode::Semistable);
  json pairings = json::array();
  for (const auto& p : v.pairings) pairings.push_back(to_json(p));
  return json{{"mode", mode},
              {"holds", v.holds},
              {"violator", v.violator ? json(*v.violator) : json(nullptr)},
              {"pairings", pairings}};
}

json moduli_scale(const json& in, Context& ctx) {
  long n = io::get_long(in, "N");
  auto v = moduli::degree_scaling_check(io::rational_from(field(in, "par_deg_y")), n,
                                        io::rational_from(field(in, "claimed_deg_x")));
  ctx.audit["N"] = n;
  return json{{"expected_deg_x", to_json(v.expected)},
              {"scaling_holds", v.scaling_holds},
              {"integral", v.integral}};
}

const std::map<std::vector<std::string>, Handler>& handlers() {
  static const std::map<std::vector<std::string>, Handler> table{
      {{"cocycle", "verify"}, cocycle_verify},
      {{"cocycle", "h2"}, cocycle_h2},
      {{"cocycle", "extend"}, cocycle_extend},
      {{"cocycle", "zeta"}, cocycle_zeta},
      {{"pseudorep", "verify"}, pseudorep_verify},
      {{"pseudorep", "classify"}, pseudorep_classify},
      {{"pseudorep", "enumerate"}, pseudorep_enumerate},
      {{"pseudorep", "transport"}, pseudorep_transport},
      {{"pseudorep", "project"}, pseudorep_project},
      {{"lie", "alcove"}, lie_alcove},
      {{"lie", "eigenspaces"}, lie_eigenspaces},
      {{"lie", "parabolic"}, lie_parabolic},
      {{"local", "check"}, local_check},
      {{"local", "descend"}, local_descend},
      {{"local", "ascend"}, local_ascend},
      {{"local", "residue"}, local_residue},
      {{"moduli", "rh"}, moduli_rh},
      {{"moduli", "strata"}, moduli_strata},
      {{"moduli", "degree"}, moduli_degree},
      {{"moduli", "stability"}, moduli_stability},
      {{"moduli", "scale"}, moduli_scale},
  };
  return table;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

json error_json(const std::string& code, const std::string& detail) {
  return json{{"error", code}, {"detail", detail}};
}

}  // namespace

std::vector<std::vector<std::string>> command_paths() {
  std::vector<std::vector<std::string>> out;
  for (const auto& [k, h] : handlers()) out.push_back(k);
  return out;
}

Outcome execute(const std::vector<std::string>& command, const json& input, const Options& options) {
  Context ctx{options, ScaleBounds::from_env()};
  if (options.scale_bound) ctx.bounds.max_search = *options.scale_bound;
  ctx.audit["command"] = join(command);
  ctx.audit["scale_bound"] = ctx.bounds.max_search;

  Outcome out;
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    out = {2, error_json("MalformedInput", "unknown command \"" + join(command) + "\"")};
  } else if (options.twist && command != std::vector<std::string>{"local", "check"}) {
    out = {2, error_json("MalformedInput", "--twist only applies to local check")};
  } else {
    try {
      json result = it->second(input, ctx);
      long w = io::working_order(result);
      if (options.order) {
        if (*options.order < 1 || *options.order % w != 0)
          throw Error(Errc::IncompatibleOrders, "working order " + std::to_string(*options.order) +
                                                    " is not a multiple of " + std::to_string(w));
        w = *options.order;
        result = io::embed_all(result, w);
      }
      ctx.audit["M"] = w;
      out = {0, std::move(result)};
    } catch (const Error& e) {
      out = {1, error_json(std::string(to_string(e.code())), e.detail())};
    } catch (const io::MalformedInput& e) {
      out = {2, error_json("MalformedInput", e.what())};
    } catch (const json::exception& e) {
      out = {2, error_json("MalformedInput", e.what())};
    } catch (const std::logic_error& e) {
      out = {3, error_json("InternalInvariant", e.what())};
    }
  }
  out.output["audit"] = ctx.audit;
  return out;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

std::vector<CorpusResult> run_corpus(const std::string& dir, bool bless) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<CorpusResult> results;
  for (const auto& path : files) {
    CorpusResult r{path.filename().string(), false, ""};
    try {
      std::ifstream f(path);
      json golden = json::parse(f);
      std::vector<std::string> cmd = golden.at("command").get<std::vector<std::string>>();
      Options opts;
      if (golden.contains("flags")) {
        const json& fl = golden.at("flags");
        for (auto it = fl.begin(); it != fl.end(); ++it)
          if (it.key() != "order" && it.key() != "scale_bound" && it.key() != "twist")
            throw std::runtime_error("unknown flag " + it.key());
        if (fl.contains("order")) opts.order = fl.at("order").get<long>();
        if (fl.contains("scale_bound")) opts.scale_bound = fl.at("scale_bound").get<std::uint64_t>();
        if (fl.contains("twist")) opts.twist = fl.at("twist").get<std::string>();
      }
      Outcome first = execute(cmd, golden.at("input"), opts);
      Outcome second = execute(cmd, golden.at("input"), opts);
      const std::string a = render(first.output);
      if (a != render(second.output) || first.exit_code != second.exit_code) {
        r.detail = "two runs differ";
      } else if (bless) {
        golden["expected"] = first.output;
        golden["expected_exit"] = first.exit_code;
        std::ofstream o(path);
        o << render(golden);
        r.passed = true;
        r.detail = "blessed";
      } else if (first.exit_code != golden.at("expected_exit").get<int>()) {
        r.detail = "exit " + std::to_string(first.exit_code) + ", expected " +
                   std::to_string(golden.at("expected_exit").get<int>());
      } else if (a != render(golden.at("expected"))) {
        r.detail = "output differs from expected";
      } else {
        r.passed = true;
      }
    } catch (const std::exception& e) {
      r.detail = std::string("unreadable golden file: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

namespace {

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path);
    if (!f) throw io::MalformedInput("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return json::parse(text);
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Exact tools for pseudoequivariant Higgs bundle bookkeeping", "peq"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string output_path;
  std::optional<long> order;
  std::optional<std::uint64_t> scale_bound;
  std::optional<std::string> twist;
  std::vector<std::string> chosen;

  std::map<std::string, CLI::App*> groups;
  for (const auto& path : command_paths()) {
    CLI::App*& g = groups[path[0]];
    if (g == nullptr) {
      g = app.add_subcommand(path[0]);
      g->require_subcommand(1);
    }
    CLI::App* verb = g->add_subcommand(path[1]);
    verb->add_option("input", input_path, "input JSON file, - for stdin");
    verb->add_option("-o,--output", output_path, "write the result here instead of stdout");
    verb->add_option("--order", order, "working cyclotomic order of the output");
    verb->add_option("--scale-bound", scale_bound, "search cap for brute-force enumerations");
    if (path[1] == "check") verb->add_option("--twist", twist, "twist character value as p/q");
    verb->callback([&chosen, path] { chosen = path; });
  }

  CLI::App* corpus = app.add_subcommand("corpus");
  corpus->require_subcommand(1);
  CLI::App* corpus_run = corpus->add_subcommand("run");
  std::string corpus_dir;
  bool bless = false;
  corpus_run->add_option("dir", corpus_dir)->required();
  corpus_run->add_flag("--write-expected", bless, "rewrite expectations from the current output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (corpus_run->parsed()) {
    auto results = run_corpus(corpus_dir, bless);
    bool ok = true;
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.file
                << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
      ok = ok && r.passed;
    }
    std::cout << results.size() << " files, " << (ok ? "all passed" : "failures") << "\n";
    return ok ? 0 : 1;
  }

  Outcome out;
  Options opts{order, scale_bound, twist};
  try {
    out = execute(chosen, read_input(input_path), opts);
  } catch (const std::exception& e) {
    out = {2, error_json("MalformedInput", e.what())};
    out.output["audit"] = json{{"command", join(chosen)}};
  }
  const std::string text = render(out.output);
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output_path);
    f << text;
  }
  return out.exit_code;
}

}  // namespace peq::cli
