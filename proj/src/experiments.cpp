#include "holonomy/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "holonomy/connections.hpp"
#include "holonomy/gen_connection.hpp"
#include "holonomy/measures.hpp"
#include "holonomy/rng.hpp"

namespace holonomy {

std::string CsvTable::to_string() const {
	std::string out;
	for (std::size_t i = 0; i < header.size(); ++i) {
		if (i) out += ',';
		out += header[i];
	}
	out += '\n';
	char buf[40];
	for (const auto& row : rows) {
		for (std::size_t i = 0; i < row.size(); ++i) {
			if (i) out += ',';
			std::snprintf(buf, sizeof buf, "%.17g", row[i]);
			out += buf;
		}
		out += '\n';
	}
	return out;
}

bool ExperimentReport::all_pass() const {
	for (const auto& [key, ok] : passes) {
		(void)key;
		if (!ok) return false;
	}
	return true;
}

Json ExperimentReport::to_json() const {
	return Json{{"experiment", name},
	            {"seed", seed},
	            {"parameters", Json(parameters)},
	            {"metrics", Json(metrics)},
	            {"passes", Json(passes)},
	            {"all_pass", all_pass()},
	            {"wall_time_ms", wall_time_ms}};
}

namespace {

constexpr double kPi = std::numbers::pi;

// Fills in defaults; any given key outside the default set is unknown.
ParamMap resolve(const ParamMap& given, ParamMap defaults) {
	for (const auto& [key, value] : given) {
		const auto it = defaults.find(key);
		if (it == defaults.end())
			throw std::invalid_argument("unknown parameter '" + key + "'");
		it->second = value;
	}
	return defaults;
}

int int_param(const ParamMap& p, const std::string& key) {
	const double v = p.at(key);
	const double r = std::round(v);
	if (!(std::abs(v - r) <= 1e-9) || !(r >= -2e9) || !(r <= 2e9))
		throw std::invalid_argument("parameter '" + key + "' must be an integer");
	return static_cast<int>(r);
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
	const double n = static_cast<double>(x.size());
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		sx += x[i];
		sy += y[i];
		sxx += x[i] * x[i];
		sxy += x[i] * y[i];
	}
	return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void run_discontinuity(const ParamMap& given, std::uint64_t, ExperimentReport& rep,
                       CsvTable* csv) {
	ParamMap defaults{{"lambda", 1.0}, {"steps", 4096}, {"tol", 1e-9}};
	const auto lam_it = given.find("lambda");
	const double lam0 = lam_it == given.end() ? 1.0 : lam_it->second;
	defaults["r"] = kPi / (2.0 * lam0);
	rep.parameters = resolve(given, defaults);

	const double lambda = rep.parameters.at("lambda");
	const double r = rep.parameters.at("r");
	const int steps = int_param(rep.parameters, "steps");
	const double tol = rep.parameters.at("tol");
	if (lambda == 0.0) throw std::invalid_argument("lambda must be nonzero");

	const double gap = discontinuity_gap(lambda, r, steps);
	const double expected = std::abs(1.0 - std::cos(lambda * r));
	const double gap_quarter = discontinuity_gap(lambda, kPi / (2.0 * lambda), steps);

	rep.metrics["gap"] = gap;
	rep.metrics["expected"] = expected;
	rep.metrics["error"] = std::abs(gap - expected);
	rep.metrics["gap_at_quarter_period"] = gap_quarter;
	rep.passes["matches_closed_form"] = std::abs(gap - expected) <= tol;
	rep.passes["unit_gap_at_quarter_period"] = std::abs(gap_quarter - 1.0) <= tol;

	if (csv) {
		csv->header = {"lambda", "r", "gap", "expected"};
		double max_err = 0.0;
		for (const double lam : {0.1, 1.0, 10.0}) {
			for (int k = 1; k <= 8; ++k) {
				const double rk = k * kPi / (8.0 * lam);
				const double g = discontinuity_gap(lam, rk, steps);
				const double e = std::abs(1.0 - std::cos(lam * rk));
				max_err = std::max(max_err, std::abs(g - e));
				csv->rows.push_back({lam, rk, g, e});
			}
		}
		rep.metrics["ladder_max_error"] = max_err;
		rep.passes["ladder_matches_closed_form"] = max_err <= tol;
	}
}

void run_proper_inclusion(const ParamMap& given, std::uint64_t seed, ExperimentReport& rep,
                          CsvTable*) {
	rep.parameters = resolve(given, {});
	const InclusionReport r = proper_inclusion_witness(seed);
	rep.metrics["count"] = r.count;
	rep.metrics["max_invariance_residual"] = r.max_invariance_residual;
	rep.metrics["max_linear_residual"] = r.max_linear_residual;
	rep.metrics["min_pairwise_distance"] = r.min_pairwise_distance;
	rep.passes["invariant"] = r.invariance_ok;
	rep.passes["trivial_on_linear_paths"] = r.linear_trivial_ok;
	rep.passes["pairwise_distinct"] = r.pairwise_distinct_ok;
	rep.passes["count_exceeds_two"] = r.count > 2;
}

void run_bohr_roundtrip(const ParamMap& given, std::uint64_t seed, ExperimentReport& rep,
                        CsvTable* csv) {
	rep.parameters = resolve(given, {{"grid_c", 20},
	                                 {"grid_paths", 20},
	                                 {"c_max", 3.0},
	                                 {"len_max", 3.0},
	                                 {"tol", 1e-12}});
	const int grid_c = int_param(rep.parameters, "grid_c");
	const int grid_paths = int_param(rep.parameters, "grid_paths");
	const double c_max = rep.parameters.at("c_max");
	const double len_max = rep.parameters.at("len_max");
	if (grid_c < 2 || grid_paths < 2) throw std::invalid_argument("grids need at least 2 points");

	auto rng = make_rng(seed, 3);
	std::vector<Path> paths;
	paths.reserve(grid_paths);
	for (int j = 0; j < grid_paths; ++j) {
		const double len = 0.1 + (len_max - 0.1) * j / (grid_paths - 1);
		paths.push_back(Path::single(LinearSeg(gaussian_vec3(rng), random_unit_vec3(rng), len)));
	}

	if (csv) csv->header = {"c", "max_deviation"};
	double max_dev = 0.0;
	for (int i = 0; i < grid_c; ++i) {
		const double c = -c_max + 2.0 * c_max * i / (grid_c - 1);
		const GenConn viaBohr = delta_map(BohrCharacter::embed(c));
		double row_dev = 0.0;
		for (const auto& p : paths) {
			const Su2Element a = viaBohr.evaluate(p);
			const Su2Element b = holonomy_closed(IsotropicConnection{c}, p);
			row_dev = std::max(row_dev, frobenius_distance(a, b));
		}
		max_dev = std::max(max_dev, row_dev);
		if (csv) csv->rows.push_back({c, row_dev});
	}
	rep.metrics["max_deviation"] = max_dev;
	rep.passes["round_trip_exact"] = max_dev <= rep.parameters.at("tol");
}

void run_circular_decomposition(const ParamMap& given, std::uint64_t, ExperimentReport& rep,
                                CsvTable* csv) {
	rep.parameters = resolve(given, {{"tau", 2.0},
	                                 {"r", 1.0},
	                                 {"c_min", 20.0},
	                                 {"points", 1000},
	                                 {"bound", 0.05},
	                                 {"exp_lo", 0.8},
	                                 {"exp_hi", 1.2},
	                                 {"buckets", 20}});
	const double tau = rep.parameters.at("tau");
	const double r = rep.parameters.at("r");
	const double c_min = rep.parameters.at("c_min");
	const int points = int_param(rep.parameters, "points");
	const int buckets = int_param(rep.parameters, "buckets");
	if (!(tau > 0.0) || !(r > 0.0) || !(c_min > 0.0) || points < 2 * buckets || buckets < 4)
		throw std::invalid_argument("circular-decomposition: bad grid parameters");

	// f(c) is the (1,1) entry of the circular holonomy; its almost periodic
	// part is e^{-i tau/2} cos(c r tau) and the rest decays like 1/c.
	if (csv) csv->header = {"c", "residual"};
	std::vector<double> cs(points), resid(points);
	for (int i = 0; i < points; ++i) {
		const double c = c_min + (10.0 * c_min - c_min) * i / (points - 1);
		double worst = 0.0;
		for (const double sc : {c, -c}) {
			const Complex f = standard_circular_holonomy(sc, r, tau).matrix().a11;
			const Complex ap = std::polar(1.0, -tau / 2.0) * std::cos(sc * r * tau);
			worst = std::max(worst, std::abs(f - ap));
		}
		cs[i] = c;
		resid[i] = worst;
		if (csv) csv->rows.push_back({c, worst});
	}

	double max_resid = 0.0;
	for (const double v : resid) max_resid = std::max(max_resid, v);

	// Envelope via per-bucket maxima on the log-log scale.
	std::vector<double> log_c, log_env;
	bool monotone = true;
	double prev = 0.0;
	for (int b = 0; b < buckets; ++b) {
		const int lo = b * points / buckets;
		const int hi = (b + 1) * points / buckets;
		double env = 0.0;
		for (int i = lo; i < hi; ++i) env = std::max(env, resid[i]);
		if (b > 0 && env > prev) monotone = false;
		prev = env;
		log_c.push_back(std::log(cs[(lo + hi) / 2]));
		log_env.push_back(std::log(env));
	}
	const double exponent = -fit_slope(log_c, log_env);

	rep.metrics["max_residual"] = max_resid;
	rep.metrics["fit_exponent"] = exponent;
	rep.passes["residual_bounded"] = max_resid <= rep.parameters.at("bound");
	rep.passes["envelope_monotone"] = monotone;
	rep.passes["envelope_decays_like_1_over_c"] =
	    exponent >= rep.parameters.at("exp_lo") && exponent <= rep.parameters.at("exp_hi");
}

void run_al_tube(const ParamMap& given, std::uint64_t seed, ExperimentReport& rep,
                 CsvTable* csv) {
	rep.parameters = resolve(given, {{"n", 1e6},
	                                 {"delta_max", 0.4},
	                                 {"delta_count", 4},
	                                 {"slope_lo", 1.7},
	                                 {"slope_hi", 2.3},
	                                 {"z_max", 6.0}});
	const auto n = static_cast<std::int64_t>(int_param(rep.parameters, "n"));
	const int count = int_param(rep.parameters, "delta_count");
	const double delta_max = rep.parameters.at("delta_max");
	if (n < 10000) throw std::invalid_argument("al-tube: n must be at least 10^4");
	if (count < 2 || !(delta_max > 0.0)) throw std::invalid_argument("al-tube: bad ladder");

	auto rng = make_rng(seed, 5);
	const TorusAxis axis(e3());
	if (csv) csv->header = {"delta", "estimate", "stderr", "exact"};

	std::vector<double> log_d, log_p;
	bool decreasing = true;
	double max_z = 0.0, prev_p = 2.0;
	for (int k = 0; k < count; ++k) {
		const double delta = delta_max / std::pow(2.0, k);
		const TubeEstimate est = tube_probability(axis, delta, n, rng);
		const double exact = std::sin(delta) * std::sin(delta);
		if (est.p >= prev_p) decreasing = false;
		prev_p = est.p;
		if (est.stderr_ > 0.0) max_z = std::max(max_z, std::abs(est.p - exact) / est.stderr_);
		log_d.push_back(std::log(delta));
		log_p.push_back(std::log(std::max(est.p, 1e-12)));
		if (csv) csv->rows.push_back({delta, est.p, est.stderr_, exact});
	}
	const double slope = fit_slope(log_d, log_p);

	rep.metrics["slope"] = slope;
	rep.metrics["max_z_score"] = max_z;
	rep.passes["strictly_decreasing"] = decreasing;
	rep.passes["slope_in_range"] =
	    slope >= rep.parameters.at("slope_lo") && slope <= rep.parameters.at("slope_hi");
	rep.passes["matches_exact_law"] = max_z <= rep.parameters.at("z_max");
}

void run_noncommutativity(const ParamMap& given, std::uint64_t seed, ExperimentReport& rep,
                          CsvTable*) {
	rep.parameters = resolve(given, {{"tau", 2.0},
	                                 {"r", 1.0},
	                                 {"threshold", 0.1},
	                                 {"linear_probes", 100},
	                                 {"linear_tol", 1e-12}});
	const double tau = rep.parameters.at("tau");
	const double r = rep.parameters.at("r");
	if (!(tau > 0.0) || !(tau < kPi) || !(r > 0.0))
		throw std::invalid_argument("noncommutativity: need 0 < tau < pi and r > 0");

	// c makes beta tau = pi, d makes beta tau = pi/2, beta = sqrt(c^2 r^2 + 1/4).
	const double c = std::sqrt(kPi * kPi / (tau * tau) - 0.25) / r;
	const double d = std::sqrt(kPi * kPi / (4.0 * tau * tau) - 0.25) / r;
	const Path loop = Path::single(CircularSeg({0, 0, 0}, e3(), Vec3{r, 0, 0}, tau / (2.0 * kPi)));
	const double comm =
	    commutator_norm(GenConn::from_isotropic(c), GenConn::from_isotropic(d), loop);

	const GenConn rule1 = GenConn::linear_rule(
	    AdditivePhase::closed_form([](double l) { return 0.8 * l; }, "0.8 l"));
	const GenConn rule2 = GenConn::linear_rule(
	    AdditivePhase::closed_form([](double l) { return std::sin(l) + 0.25 * l; },
	                               "sin(l) + 0.25 l"));
	auto rng = make_rng(seed, 6);
	double max_linear = 0.0;
	const int probes = int_param(rep.parameters, "linear_probes");
	for (int i = 0; i < probes; ++i) {
		const Path p = Path::single(
		    LinearSeg(gaussian_vec3(rng), random_unit_vec3(rng), uniform_in(rng, 0.2, 3.0)));
		max_linear = std::max(max_linear, commutator_norm(rule1, rule2, p));
	}

	rep.metrics["c"] = c;
	rep.metrics["d"] = d;
	rep.metrics["commutator_norm"] = comm;
	rep.metrics["max_linear_rule_commutator"] = max_linear;
	rep.passes["noncommuting"] = comm >= rep.parameters.at("threshold");
	rep.passes["linear_rules_commute"] = max_linear <= rep.parameters.at("linear_tol");
}

void run_wang_check(const ParamMap& given, std::uint64_t seed, ExperimentReport& rep,
                    CsvTable*) {
	rep.parameters = resolve(given, {{"c", 1.0},
	                                 {"motions", 100},
	                                 {"samples", 20},
	                                 {"tol", 1e-6},
	                                 {"shear_r", 1.0},
	                                 {"control_threshold", 0.01},
	                                 {"fd_step", 1e-5}});
	const double c = rep.parameters.at("c");
	const int motions = int_param(rep.parameters, "motions");
	const int samples = int_param(rep.parameters, "samples");
	const double fd_step = rep.parameters.at("fd_step");

	auto rng = make_rng(seed, 7);
	double max_residual = 0.0;
	for (int i = 0; i < motions; ++i) {
		const EuclideanMotion g{gaussian_vec3(rng, 2.0), random_su2(rng)};
		max_residual =
		    std::max(max_residual, verify_pullback_invariance(c, g, samples, rng, fd_step));
	}

	const EuclideanMotion rot{Vec3{0, 0, 0}, exp_su2(kPi / 2.0, e1())};
	const double control = verify_pullback_invariance(
	    GaugeField::shear(rep.parameters.at("shear_r")), rot, 100, rng, fd_step);

	rep.metrics["max_residual"] = max_residual;
	rep.metrics["shear_control_residual"] = control;
	rep.passes["invariant"] = max_residual <= rep.parameters.at("tol");
	rep.passes["control_detected"] = control >= rep.parameters.at("control_threshold");
}

void run_psi_injectivity(const ParamMap& given, std::uint64_t, ExperimentReport& rep,
                         CsvTable*) {
	rep.parameters = resolve(given, {{"n", 10}});
	const int n = int_param(rep.parameters, "n");
	if (n < 1 || n > 20) throw std::invalid_argument("psi-injectivity: n must be in [1, 20]");

	static const double kPrimes[20] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
	                                   31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
	std::vector<double> vals(n);
	for (int i = 0; i < n; ++i) vals[i] = std::sqrt(kPrimes[i]);
	const FrequencyBasis basis(vals);

	// Half-turn probes: the i-th probe evaluates to exactly -1 when basis
	// element i carries the full-turn phase and +1 otherwise, so the probe
	// signature recovers the subset and distinct subsets give distinct
	// characters.
	std::vector<RationalFreq> probes;
	probes.reserve(n);
	for (int i = 0; i < n; ++i)
		probes.push_back(RationalFreq::single(basis, static_cast<std::size_t>(i), Rational(1, 2)));

	const std::size_t total = std::size_t{1} << n;
	std::vector<bool> seen(total, false);
	std::size_t distinct = 0;
	for (std::size_t mask = 0; mask < total; ++mask) {
		std::vector<bool> in_j(n);
		for (int i = 0; i < n; ++i) in_j[i] = (mask >> i) & 1;
		const BohrCharacter psi = psi_from_subset(basis, in_j);
		std::size_t sig = 0;
		for (int i = 0; i < n; ++i)
			if (psi.eval(probes[i]).real() < 0.0) sig |= std::size_t{1} << i;
		if (!seen[sig]) {
			seen[sig] = true;
			++distinct;
		}
	}

	rep.metrics["total"] = static_cast<double>(total);
	rep.metrics["distinct"] = static_cast<double>(distinct);
	rep.passes["all_distinguishable"] = distinct == total;
}

using Runner = void (*)(const ParamMap&, std::uint64_t, ExperimentReport&, CsvTable*);

const std::vector<std::pair<std::string, Runner>>& runners() {
	static const std::vector<std::pair<std::string, Runner>> table{
	    {"discontinuity", run_discontinuity},
	    {"proper-inclusion", run_proper_inclusion},
	    {"bohr-roundtrip", run_bohr_roundtrip},
	    {"circular-decomposition", run_circular_decomposition},
	    {"al-tube", run_al_tube},
	    {"noncommutativity", run_noncommutativity},
	    {"wang-check", run_wang_check},
	    {"psi-injectivity", run_psi_injectivity},
	};
	return table;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
	static const std::vector<std::string> names = [] {
		std::vector<std::string> out;
		for (const auto& [name, fn] : runners()) {
			(void)fn;
			out.push_back(name);
		}
		return out;
	}();
	return names;
}

ExperimentReport run_experiment(const std::string& name, const ParamMap& params,
                                std::uint64_t seed, CsvTable* csv) {
	for (const auto& [known, fn] : runners()) {
		if (known != name) continue;
		ExperimentReport rep;
		rep.name = name;
		rep.seed = seed;
		const auto t0 = std::chrono::steady_clock::now();
		fn(params, seed, rep, csv);
		const auto t1 = std::chrono::steady_clock::now();
		rep.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
		return rep;
	}
	throw std::invalid_argument("unknown experiment '" + name + "'");
}

}  // namespace holonomy
