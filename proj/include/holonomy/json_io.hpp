#pragma once

// JSON (de)serialization for the CLI layer.  Schema (keys always sorted):
//  * Vec3              [x, y, z]
//  * Su2Element        {"w", "x", "y", "z"}
//  * segment           {"type": "linear",   "start", "dir", "len"} |
//                      {"type": "circular", "center", "axis", "radius_vec", "winding"}
//  * Path              [{"segment": <segment>, "reversed": bool}, ...]
//  * EuclideanMotion   {"v": Vec3, "sigma": Su2Element}
//  * Rational          [num, den]
//  * FrequencyBasis    [tau_1, tau_2, ...]
//  * RationalFreq      {"basis", "coeffs": [Rational, ...]}
//  * BohrCharacter     {"variant": "embedded", "x"} |
//                      {"variant": "shifted", "basis",
//                       "shifts": [{"turns": Rational, "extra": real}, ...]}
//  * AlmostPeriodicFn  {"basis", "terms": [{"coeff": [re, im],
//                       "coeffs": [Rational, ...]}, ...]}
//  * GenConn           {"variant": "isotropic", "c"} |
//                      {"variant": "linear_rule", "lengths", "phases"} |
//                      {"variant": "circular_rule", "winding_coeff"} |
//                      {"variant": "from_bohr", "character"} |
//                      {"variant": "non_invariant_witness"}
//  * BasicOpen         {"type": "intervals", "open_intervals": [[a, b], ...]} |
//                      {"type": "compact_exterior", "closed_intervals": [[a, b], ...]} |
//                      {"type": "ap_preimage", "f": <ap fn>,
//                       "discs": [{"center": [re, im], "radius"}, ...]}
//
// Closed-form callables (AdditivePhase closed forms, custom CircularPhase,
// the c0 part of CylFnOnR) have no serial form; to_json throws
// std::invalid_argument for rules containing them.

#include "json.hpp"

#include "holonomy/bohr.hpp"
#include "holonomy/gen_connection.hpp"
#include "holonomy/paths.hpp"

namespace holonomy {

using Json = nlohmann::json;

Json to_json(const Vec3& v);
Vec3 vec3_from_json(const Json& j);

Json to_json(const Su2Element& s);
Su2Element su2_from_json(const Json& j);

Json to_json(const Segment& s);
Segment segment_from_json(const Json& j);

Json to_json(const Path& p);
Path path_from_json(const Json& j);

Json to_json(const EuclideanMotion& g);
EuclideanMotion motion_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const FrequencyBasis& b);
FrequencyBasis basis_from_json(const Json& j);

Json to_json(const RationalFreq& f);
RationalFreq rational_freq_from_json(const Json& j);

Json to_json(const BohrCharacter& psi);
BohrCharacter character_from_json(const Json& j);

Json to_json(const AlmostPeriodicFn& f);
AlmostPeriodicFn ap_fn_from_json(const Json& j);

Json to_json(const GenConn& gc);
GenConn gen_conn_from_json(const Json& j);

Json to_json(const BasicOpen& set);
BasicOpen basic_open_from_json(const Json& j);

}  // namespace holonomy
