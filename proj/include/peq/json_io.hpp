#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "peq/cohomology.hpp"
#include "peq/cyclotomic.hpp"
#include "peq/lie.hpp"
#include "peq/local.hpp"
#include "peq/matrix.hpp"
#include "peq/moduli.hpp"
#include "peq/pseudorep.hpp"
#include "peq/rational.hpp"
#include "peq/weight.hpp"

namespace peq::io {

using json = nlohmann::json;

/// Input that does not match a schema. Maps to exit status 2.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field access with schema errors reported as MalformedInput.
const json& field(const json& j, const char* name);
long get_long(const json& j, const char* name);

json to_json(const Rational& r);
Rational rational_from(const json& j);

json to_json(const FractionalWeight& w);
FractionalWeight weight_from(const json& j);

/// {"order": M, "coeffs": [...]}. A bare rational string is accepted on input.
json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from(const json& j);

json to_json(const CMatrix& m);
CMatrix matrix_from(const json& j);

json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from(const json& j);

/// Nonzero entries only, as [i, j, "k/m"].
json to_json(const cohomology::Cochain2& c);
cohomology::Cochain2 cochain_from(const json& j);

json to_json(const pseudorep::PseudoRep& s);
pseudorep::PseudoRep pseudorep_from(const json& j);

json to_json(const pseudorep::PseudoRepClass& c);
pseudorep::PseudoRepClass class_from(const json& j);

json to_json(const pseudorep::QuotientClass& c);
pseudorep::QuotientClass quotient_class_from(const json& j);

json to_json(const lie::GroupModel& m);
lie::GroupModel model_from(const json& j);

json to_json(const lie::SubspaceMask& m);

json to_json(const lie::WeightVector& w);
std::vector<Rational> rationals_from(const json& j);

/// Matrix indices are 1-based in "basis": [i, j].
json to_json(const local::GradedSeries& s);
local::GradedSeries series_from(const json& j);

json to_json(const local::ResidueReport& r);

json to_json(const moduli::CoveringData& d);
moduli::CoveringData covering_from(const json& j);

json to_json(const moduli::StratumIndex& s);

json to_json(const moduli::FlagDegreeData& f);
moduli::FlagDegreeData flag_from(const json& j);

/// lcm of the orders of every cyclotomic object found in j.
long working_order(const json& j);
/// Re-embeds every cyclotomic object in j into Q(zeta_m).
json embed_all(const json& j, long m);

}  // namespace peq::io
