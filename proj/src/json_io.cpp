#include "peq/json_io.hpp"

#include <algorithm>

#include "peq/error.hpp"

namespace peq::io {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw MalformedInput(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

long get_long(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw MalformedInput(std::string("\"") + name + "\" must be an integer");
  return v.get<long>();
}

namespace {

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw MalformedInput(std::string(what) + " must be an integer");
  return v.get<int>();
}

const json& as_array(const json& v, const char* what) {
  if (!v.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  return v;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw MalformedInput("rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw MalformedInput("bad rational \"" + j.get<std::string>() + "\": " + e.what());
  }
}

json to_json(const FractionalWeight& w) {
  return json{{"value", to_json(w.value())}, {"convention", std::string(to_string(w.convention()))}};
}

FractionalWeight weight_from(const json& j) {
  Rational v = rational_from(field(j, "value"));
  WeightConvention c;
  try {
    c = parse_convention(field(j, "convention").get<std::string>());
  } catch (const std::exception& e) {
    throw MalformedInput(std::string("bad convention: ") + e.what());
  }
  FractionalWeight w = normalize_weight(v, c);
  if (!(w.value() == v)) throw MalformedInput("weight value outside its convention's range");
  return w;
}

json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_json(x));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from(const json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclotomic::from_rational(rational_from(j));
  long order = get_long(j, "order");
  if (order < 1) throw MalformedInput("cyclotomic order must be positive");
  std::vector<Rational> coeffs;
  for (const auto& x : as_array(field(j, "coeffs"), "coeffs")) coeffs.push_back(rational_from(x));
  if (static_cast<long>(coeffs.size()) != euler_phi(order))
    throw MalformedInput("cyclotomic of order " + std::to_string(order) + " needs " +
                         std::to_string(euler_phi(order)) + " coefficients");
  return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from(const json& j) {
  const json& rows = as_array(j, "matrix");
  CMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = as_array(rows[i], "matrix row");
    if (row.size() != rows.size()) throw MalformedInput("matrix must be square");
    for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = cyclotomic_from(row[k]);
  }
  return m;
}

json to_json(const FiniteAbelianGroup& g) { return g.factors(); }

FiniteAbelianGroup group_from(const json& j) {
  std::vector<int> factors;
  for (const auto& x : as_array(j, "group")) {
    int f = as_int(x, "group factor");
    if (f < 1) throw MalformedInput("group factors must be positive");
    factors.push_back(f);
  }
  long order = 1;
  for (int f : factors) {
    order *= f;
    if (order > 1'000'000) throw MalformedInput("group is far too large");
  }
  return FiniteAbelianGroup(factors);
}

json to_json(const cohomology::Cochain2& c) {
  json table = json::array();
  const int n = c.group().order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c(a, b) != 0) table.push_back(json{a, b, to_json(c.value(a, b))});
  return json{{"group", to_json(c.group())}, {"coeff_order", c.coeff_order()}, {"table", table}};
}

cohomology::Cochain2 cochain_from(const json& j) {
  FiniteAbelianGroup g = group_from(field(j, "group"));
  long m = get_long(j, "coeff_order");
  if (m < 1) throw MalformedInput("coeff_order must be positive");
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : as_array(field(j, "table"), "table")) {
    if (!e.is_array() || e.size() != 3) throw MalformedInput("table entries are [i, j, \"k/m\"]");
    int a = as_int(e[0], "element index");
    int b = as_int(e[1], "element index");
    if (a < 0 || b < 0 || a >= n || b >= n) throw MalformedInput("element index out of range");
    Rational v = rational_from(e[2]) * Rational(m);
    if (!v.is_integer())
      throw Error(Errc::DenominatorNotDividing, "cochain value does not lie in Z/" + std::to_string(m));
    long k = v.num_long() % m;
    if (k < 0) k += m;
    table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(k);
  }
  return cohomology::Cochain2(g, static_cast<int>(m), std::move(table));
}

json to_json(const pseudorep::PseudoRep& s) {
  json images = json::object();
  for (std::size_t i = 0; i < s.images.size(); ++i) images[std::to_string(i)] = to_json(s.images[i]);
  return json{{"order", s.order()}, {"cocycle", to_json(s.cocycle)}, {"images", images}};
}

pseudorep::PseudoRep pseudorep_from(const json& j) {
  long n = get_long(j, "order");
  cohomology::Cochain2 c = cochain_from(field(j, "cocycle"));
  if (c.group().order() != n) throw MalformedInput("cocycle group order differs from \"order\"");
  const json& imgs = field(j, "images");
  if (!imgs.is_object()) throw MalformedInput("\"images\" must map element indices to matrices");
  std::vector<CMatrix> images(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (auto it = imgs.begin(); it != imgs.end(); ++it) {
    long idx = -1;
    try {
      std::size_t used = 0;
      idx = std::stol(it.key(), &used);
      if (used != it.key().size()) idx = -1;
    } catch (const std::exception&) {
      idx = -1;
    }
    if (idx < 0 || idx >= n) throw MalformedInput("bad image index \"" + it.key() + "\"");
    images[static_cast<std::size_t>(idx)] = matrix_from(it.value());
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  if (std::count(seen.begin(), seen.end(), char{0}) != 0)
    throw MalformedInput("images must be given for every element");
  return pseudorep::PseudoRep{std::move(c), std::move(images)};
}

namespace {

json weights_json(const std::vector<FractionalWeight>& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(to_json(x.value()));
  return a;
}

std::vector<FractionalWeight> residues_from(const json& j) {
  std::vector<FractionalWeight> out;
  for (const auto& x : as_array(j, "exponents"))
    out.push_back(normalize_weight(rational_from(x), WeightConvention::ResidueInZeroOne));
  return out;
}

}  // namespace

json to_json(const pseudorep::PseudoRepClass& c) {
  return json{{"order", c.order}, {"zeta", to_json(c.zeta.value())}, {"exponents", weights_json(c.exponents)}};
}

pseudorep::PseudoRepClass class_from(const json& j) {
  pseudorep::PseudoRepClass c;
  c.order = static_cast<int>(get_long(j, "order"));
  if (c.order < 1) throw MalformedInput("order must be positive");
  c.zeta = normalize_weight(rational_from(field(j, "zeta")), WeightConvention::ResidueInZeroOne);
  c.exponents = residues_from(field(j, "exponents"));
  std::sort(c.exponents.begin(), c.exponents.end(), std::greater<>());
  return c;
}

json to_json(const pseudorep::QuotientClass& c) {
  return json{{"order", c.order}, {"center_order", c.center_order},
              {"exponents", weights_json(c.exponents)}};
}

pseudorep::QuotientClass quotient_class_from(const json& j) {
  pseudorep::QuotientClass c;
  c.order = static_cast<int>(get_long(j, "order"));
  c.center_order = static_cast<int>(get_long(j, "center_order"));
  c.exponents = residues_from(field(j, "exponents"));
  return c;
}

json to_json(const lie::GroupModel& m) {
  switch (m.kind()) {
    case lie::ModelKind::GL: return json{{"kind", "gl"}, {"r", m.size()}};
    case lie::ModelKind::SL: return json{{"kind", "sl"}, {"r", m.size()}};
    case lie::ModelKind::UPQ: return json{{"kind", "upq"}, {"p", m.p()}, {"q", m.q()}};
  }
  return {};
}

lie::GroupModel model_from(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) throw MalformedInput("model kind must be a string");
  const std::string kind = k.get<std::string>();
  auto bounded = [](long v) {
    if (v < 1 || v > 16) throw MalformedInput("model sizes must lie in 1..16");
    return static_cast<int>(v);
  };
  if (kind == "gl") return lie::GroupModel::gl(bounded(get_long(j, "r")));
  if (kind == "sl") return lie::GroupModel::sl(bounded(get_long(j, "r")));
  if (kind == "upq") return lie::GroupModel::upq(bounded(get_long(j, "p")), bounded(get_long(j, "q")));
  throw MalformedInput("unknown model kind \"" + kind + "\"");
}

json to_json(const lie::SubspaceMask& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int k = 0; k < m.n; ++k) row.push_back(m.at(i, k) ? 1 : 0);
    rows.push_back(row);
  }
  return json{{"cells", rows}, {"traceless", m.traceless}, {"dim", m.dim()}};
}

json to_json(const lie::WeightVector& w) {
  json entries = json::array();
  for (const auto& e : w.entries) entries.push_back(to_json(e.value()));
  auto conv = w.model.kind() == lie::ModelKind::SL ? WeightConvention::SignedRepresentative
                                                   : WeightConvention::ResidueInZeroOne;
  return json{{"model", to_json(w.model)},
              {"entries", entries},
              {"interior", w.interior()},
              {"shift", w.shift},
              {"convention", std::string(to_string(conv))}};
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : as_array(j, "rational list")) out.push_back(rational_from(x));
  return out;
}

json to_json(const local::GradedSeries& s) {
  json alpha = json::array();
  for (const auto& e : s.alpha().entries) alpha.push_back(to_json(e.value()));
  json terms = json::array();
  for (const auto& [key, c] : s.terms())
    terms.push_back(json{{"basis", {key.i + 1, key.j + 1}},
                         {"k", key.k},
                         {"beta", to_json(s.beta(key).value())},
                         {"coeff", to_json(c)}});
  return json{{"model", to_json(s.model())},
              {"alpha", alpha},
              {"N", s.order()},
              {"variable", s.variable() == local::Variable::Upstairs_z ? "z" : "w"},
              {"trunc", s.trunc()},
              {"terms", terms}};
}

local::GradedSeries series_from(const json& j) {
  lie::GroupModel model = model_from(field(j, "model"));
  std::vector<Rational> alpha = rationals_from(field(j, "alpha"));
  lie::WeightVector w = lie::make_weight_vector(model, alpha);
  long n = get_long(j, "N");
  if (n < 1 || n > 1000) throw MalformedInput("N must lie in 1..1000");
  const json& v = field(j, "variable");
  if (!v.is_string() || (v != "z" && v != "w")) throw MalformedInput("variable must be \"z\" or \"w\"");
  local::Variable var = v == "z" ? local::Variable::Upstairs_z : local::Variable::Downstairs_w;
  long trunc = get_long(j, "trunc");
  if (trunc < -2 || trunc > 10000) throw MalformedInput("trunc out of range");
  std::map<local::TermKey, Cyclotomic> terms;
  for (const auto& t : as_array(field(j, "terms"), "terms")) {
    const json& b = field(t, "basis");
    if (!b.is_array() || b.size() != 2) throw MalformedInput("basis must be [i, j]");
    local::TermKey key{as_int(b[0], "basis index") - 1, as_int(b[1], "basis index") - 1,
                       get_long(t, "k")};
    if (key.i < 0 || key.j < 0 || key.i >= model.size() || key.j >= model.size())
      throw MalformedInput("basis index out of range");
    if (terms.count(key) != 0) throw MalformedInput("repeated term");
    terms.emplace(key, cyclotomic_from(field(t, "coeff")));
  }
  return local::GradedSeries(w, n, var, trunc, std::move(terms));
}

json to_json(const local::ResidueReport& r) {
  json nil = r.vanishing_power ? json(*r.vanishing_power) : json(nullptr);
  return json{{"residue", to_json(r.residue)},
              {"nilpotent", r.nilpotent()},
              {"vanishing_power", nil},
              {"levi_projection", to_json(r.levi_projection)},
              {"levi_projection_zero", r.levi_projection_zero()},
              {"support_negative_beta", r.support_negative_beta},
              {"in_descended_image", r.in_descended_image()}};
}

json to_json(const moduli::CoveringData& d) {
  json out{{"genus_x", d.genus_x}, {"group_order", d.group_order}, {"orbits", d.orbits}};
  if (!d.group_factors.empty()) out["group"] = d.group_factors;
  return out;
}

moduli::CoveringData covering_from(const json& j) {
  moduli::CoveringData d;
  d.genus_x = get_long(j, "genus_x");
  d.group_order = static_cast<int>(get_long(j, "group_order"));
  if (j.contains("group"))
    for (const auto& x : as_array(j.at("group"), "group")) d.group_factors.push_back(as_int(x, "group factor"));
  for (const auto& x : as_array(field(j, "orbits"), "orbits")) d.orbits.push_back(as_int(x, "isotropy order"));
  return d;
}

json to_json(const moduli::StratumIndex& s) {
  json iso = json::array();
  for (const auto& c : s.isotropy) iso.push_back(to_json(c));
  return json{{"cocycle", to_json(s.cocycle)}, {"isotropy", iso}};
}

json to_json(const moduli::FlagDegreeData& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces)
    pieces.push_back(json{{"s", to_json(p.s)}, {"rank", p.rank}, {"degree", p.degree}});
  json corr = json::array();
  for (const auto& c : f.corrections) corr.push_back(to_json(c));
  return json{{"pieces", pieces}, {"corrections", corr}};
}

moduli::FlagDegreeData flag_from(const json& j) {
  moduli::FlagDegreeData f;
  for (const auto& p : as_array(field(j, "pieces"), "pieces"))
    f.pieces.push_back(moduli::FlagPiece{rational_from(field(p, "s")),
                                         static_cast<int>(get_long(p, "rank")),
                                         get_long(p, "degree")});
  if (j.contains("corrections")) f.corrections = rationals_from(j.at("corrections"));
  return f;
}

namespace {

bool is_cyclotomic_object(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("order") && j.contains("coeffs");
}

}  // namespace

long working_order(const json& j) {
  if (is_cyclotomic_object(j)) return j.at("order").get<long>();
  long m = 1;
  if (j.is_structured())
    for (const auto& x : j) m = lcm_long(m, working_order(x));
  return m;
}

json embed_all(const json& j, long m) {
  if (is_cyclotomic_object(j)) return to_json(cyclotomic_embed(cyclotomic_from(j), m));
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = embed_all(it.value(), m);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(embed_all(x, m));
    return out;
  }
  return j;
}

}  // namespace peq::io
