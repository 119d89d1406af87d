#include "holonomy/json_io.hpp"

#include <stdexcept>

namespace holonomy {

namespace {

[[noreturn]] void bad(const std::string& what) {
	throw std::invalid_argument("json_io: " + what);
}

double num_at(const Json& j, const char* key) {
	if (!j.contains(key) || !j[key].is_number()) bad(std::string("missing number field '") + key + "'");
	return j[key].get<double>();
}

}  // namespace

Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const Json& j) {
	if (!j.is_array() || j.size() != 3) bad("Vec3 must be a 3-element array");
	return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json to_json(const Su2Element& s) {
	return Json{{"w", s.w}, {"x", s.x}, {"y", s.y}, {"z", s.z}};
}

Su2Element su2_from_json(const Json& j) {
	Su2Element s{num_at(j, "w"), num_at(j, "x"), num_at(j, "y"), num_at(j, "z")};
	s.renormalize();
	return s;
}

Json to_json(const Segment& s) {
	return std::visit(
	    [](const auto& seg) -> Json {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) {
			    return Json{{"type", "linear"},
			                {"start", to_json(seg.start)},
			                {"dir", to_json(seg.dir)},
			                {"len", seg.len}};
		    } else {
			    return Json{{"type", "circular"},
			                {"center", to_json(seg.center)},
			                {"axis", to_json(seg.axis)},
			                {"radius_vec", to_json(seg.radius_vec)},
			                {"winding", seg.winding}};
		    }
	    },
	    s);
}

Segment segment_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("type")) bad("segment needs a 'type' tag");
	const std::string type = j["type"].get<std::string>();
	if (type == "linear")
		return LinearSeg(vec3_from_json(j.at("start")), vec3_from_json(j.at("dir")),
		                 num_at(j, "len"));
	if (type == "circular")
		return CircularSeg(vec3_from_json(j.at("center")), vec3_from_json(j.at("axis")),
		                   vec3_from_json(j.at("radius_vec")), num_at(j, "winding"));
	bad("unknown segment type '" + type + "'");
}

Json to_json(const Path& p) {
	Json items = Json::array();
	for (const auto& item : p.items())
		items.push_back(Json{{"segment", to_json(item.seg)}, {"reversed", item.reversed}});
	return items;
}

Path path_from_json(const Json& j) {
	if (!j.is_array() || j.empty()) bad("Path must be a nonempty array of items");
	std::vector<PathItem> items;
	items.reserve(j.size());
	for (const auto& item : j) {
		if (!item.is_object() || !item.contains("segment")) bad("path item needs a 'segment'");
		items.push_back({segment_from_json(item.at("segment")),
		                 item.value("reversed", false)});
	}
	return Path(std::move(items));
}

Json to_json(const EuclideanMotion& g) {
	return Json{{"v", to_json(g.v)}, {"sigma", to_json(g.sigma)}};
}

EuclideanMotion motion_from_json(const Json& j) {
	return {vec3_from_json(j.at("v")), su2_from_json(j.at("sigma"))};
}

Json to_json(const Rational& q) { return Json::array({q.num(), q.den()}); }

Rational rational_from_json(const Json& j) {
	if (!j.is_array() || j.size() != 2) bad("Rational must be a [num, den] pair");
	return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

Json to_json(const FrequencyBasis& b) { return Json(b.values()); }

FrequencyBasis basis_from_json(const Json& j) {
	if (!j.is_array()) bad("FrequencyBasis must be an array");
	return FrequencyBasis(j.get<std::vector<double>>());
}

Json to_json(const RationalFreq& f) {
	Json coeffs = Json::array();
	for (const auto& q : f.coeffs) coeffs.push_back(to_json(q));
	return Json{{"basis", to_json(f.basis)}, {"coeffs", coeffs}};
}

RationalFreq rational_freq_from_json(const Json& j) {
	FrequencyBasis basis = basis_from_json(j.at("basis"));
	std::vector<Rational> coeffs;
	for (const auto& q : j.at("coeffs")) coeffs.push_back(rational_from_json(q));
	return RationalFreq(std::move(basis), std::move(coeffs));
}

Json to_json(const BohrCharacter& psi) {
	if (psi.is_embedded()) return Json{{"variant", "embedded"}, {"x", psi.embedded().x}};
	const auto& data = psi.shifted_data();
	Json shifts = Json::array();
	for (const auto& step : data.phases)
		shifts.push_back(Json{{"turns", to_json(step.turns)}, {"extra", step.extra}});
	return Json{{"variant", "shifted"}, {"basis", to_json(data.basis)}, {"shifts", shifts}};
}

BohrCharacter character_from_json(const Json& j) {
	const std::string variant = j.at("variant").get<std::string>();
	if (variant == "embedded") return BohrCharacter::embed(num_at(j, "x"));
	if (variant == "shifted") {
		FrequencyBasis basis = basis_from_json(j.at("basis"));
		std::vector<PhaseStep> phases;
		for (const auto& step : j.at("shifts"))
			phases.push_back({rational_from_json(step.at("turns")), num_at(step, "extra")});
		return BohrCharacter::shifted_phases(std::move(basis), std::move(phases));
	}
	bad("unknown character variant '" + variant + "'");
}

Json to_json(const AlmostPeriodicFn& f) {
	Json terms = Json::array();
	for (const auto& term : f.terms()) {
		Json coeffs = Json::array();
		for (const auto& q : term.freq.coeffs) coeffs.push_back(to_json(q));
		terms.push_back(Json{{"coeff", Json::array({term.coeff.real(), term.coeff.imag()})},
		                     {"coeffs", coeffs}});
	}
	return Json{{"basis", to_json(f.basis())}, {"terms", terms}};
}

AlmostPeriodicFn ap_fn_from_json(const Json& j) {
	FrequencyBasis basis = basis_from_json(j.at("basis"));
	std::vector<AlmostPeriodicFn::Term> terms;
	for (const auto& term : j.at("terms")) {
		const auto& c = term.at("coeff");
		std::vector<Rational> coeffs;
		for (const auto& q : term.at("coeffs")) coeffs.push_back(rational_from_json(q));
		terms.push_back({Complex{c[0].get<double>(), c[1].get<double>()},
		                 RationalFreq(basis, std::move(coeffs))});
	}
	return AlmostPeriodicFn(basis, std::move(terms));
}

Json to_json(const GenConn& gc) {
	return std::visit(
	    [](const auto& rule) -> Json {
		    using T = std::decay_t<decltype(rule)>;
		    if constexpr (std::is_same_v<T, FromIsotropic>) {
			    return Json{{"variant", "isotropic"}, {"c", rule.c}};
		    } else if constexpr (std::is_same_v<T, LinearRule>) {
			    if (!rule.phase.is_character_data())
				    bad("closed-form linear rule '" + rule.phase.label() + "' is not serializable");
			    return Json{{"variant", "linear_rule"},
			                {"lengths", to_json(rule.phase.lengths())},
			                {"phases", Json(rule.phase.phases())}};
		    } else if constexpr (std::is_same_v<T, CircularRule>) {
			    if (!rule.phase.is_winding_multiple())
				    bad("custom circular rule '" + rule.phase.label() + "' is not serializable");
			    return Json{{"variant", "circular_rule"}, {"winding_coeff", rule.phase.winding_coeff()}};
		    } else if constexpr (std::is_same_v<T, FromBohr>) {
			    return Json{{"variant", "from_bohr"}, {"character", to_json(rule.character)}};
		    } else {
			    return Json{{"variant", "non_invariant_witness"}};
		    }
	    },
	    gc.rule());
}

GenConn gen_conn_from_json(const Json& j) {
	const std::string variant = j.at("variant").get<std::string>();
	if (variant == "isotropic") return GenConn::from_isotropic(num_at(j, "c"));
	if (variant == "linear_rule")
		return GenConn::linear_rule(AdditivePhase::character_data(
		    basis_from_json(j.at("lengths")), j.at("phases").get<std::vector<double>>()));
	if (variant == "circular_rule") return GenConn::circular_winding(num_at(j, "winding_coeff"));
	if (variant == "from_bohr") return GenConn::from_bohr(character_from_json(j.at("character")));
	if (variant == "non_invariant_witness") return GenConn::non_invariant_witness();
	bad("unknown rule variant '" + variant + "'");
}

namespace {

Json intervals_to_json(const std::vector<std::pair<double, double>>& intervals) {
	Json out = Json::array();
	for (const auto& [a, b] : intervals) out.push_back(Json::array({a, b}));
	return out;
}

std::vector<std::pair<double, double>> intervals_from_json(const Json& j) {
	std::vector<std::pair<double, double>> out;
	for (const auto& pair : j) {
		if (!pair.is_array() || pair.size() != 2) bad("interval must be an [a, b] pair");
		out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
	}
	return out;
}

}  // namespace

Json to_json(const BasicOpen& set) {
	return std::visit(
	    [](const auto& s) -> Json {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, IntervalUnion>) {
			    return Json{{"type", "intervals"},
			                {"open_intervals", intervals_to_json(s.open_intervals)}};
		    } else if constexpr (std::is_same_v<T, CompactExterior>) {
			    return Json{{"type", "compact_exterior"},
			                {"closed_intervals", intervals_to_json(s.closed_intervals)}};
		    } else {
			    Json discs = Json::array();
			    for (const auto& d : s.discs)
				    discs.push_back(Json{
				        {"center", Json::array({d.center.real(), d.center.imag()})},
				        {"radius", d.radius}});
			    return Json{{"type", "ap_preimage"}, {"f", to_json(s.f)}, {"discs", discs}};
		    }
	    },
	    set);
}

BasicOpen basic_open_from_json(const Json& j) {
	const std::string type = j.at("type").get<std::string>();
	if (type == "intervals") return IntervalUnion{intervals_from_json(j.at("open_intervals"))};
	if (type == "compact_exterior")
		return CompactExterior{intervals_from_json(j.at("closed_intervals"))};
	if (type == "ap_preimage") {
		ApPreimage set{ap_fn_from_json(j.at("f")), {}};
		for (const auto& d : j.at("discs")) {
			const auto& c = d.at("center");
			set.discs.push_back({Complex{c[0].get<double>(), c[1].get<double>()},
			                     num_at(d, "radius")});
		}
		return set;
	}
	bad("unknown basic-open type '" + type + "'");
}

}  // namespace holonomy
