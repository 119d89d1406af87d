// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Tolerances are pinned here and nowhere else; exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "holonomy/connections.hpp"
#include "holonomy/gen_connection.hpp"
#include "holonomy/measures.hpp"
#include "holonomy/rng.hpp"

using namespace holonomy;

namespace {

constexpr double kPi = std::numbers::pi;

double now_seconds() {
	using clock = std::chrono::steady_clock;
	static const clock::time_point start = clock::now();
	return std::chrono::duration<double>(clock::now() - start).count();
}

CircularSeg random_circular(std::mt19937_64& rng, double r_lo = 0.2, double r_hi = 3.0) {
	const Vec3 axis = random_unit_vec3(rng);
	Vec3 perp = cross(axis, random_unit_vec3(rng));
	while (norm(perp) < 1e-3) perp = cross(axis, random_unit_vec3(rng));
	return CircularSeg(gaussian_vec3(rng, 1.5), axis, normalized(perp) * uniform_in(rng, r_lo, r_hi),
	                   uniform_in(rng, 0.02, 0.98));
}

LinearSeg random_linear(std::mt19937_64& rng) {
	return LinearSeg(gaussian_vec3(rng, 1.5), random_unit_vec3(rng), uniform_in(rng, 0.2, 3.0));
}

Path random_path(std::mt19937_64& rng) {
	const Segment first =
	    (rng() % 2 == 0) ? Segment{random_linear(rng)} : Segment{random_circular(rng)};
	if (rng() % 2 == 0) return Path::single(first);
	return Path({{first, false},
	             {Segment{LinearSeg(seg_end(first), random_unit_vec3(rng),
	                                uniform_in(rng, 0.2, 2.0))},
	              false}});
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	const double n = static_cast<double>(xs.size());
	for (std::size_t i = 0; i < xs.size(); ++i) {
		sx += xs[i];
		sy += ys[i];
		sxx += xs[i] * xs[i];
		sxy += xs[i] * ys[i];
	}
	return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

char detail_buf[256];

bool ode_matches_closed_form(std::string& detail) {
	const double t0 = now_seconds();
	auto rng = make_rng(2026, 11);
	double max_err = 0.0;
	for (int i = 0; i < 200; ++i) {
		const double c = uniform_in(rng, -5.0, 5.0);
		const Segment seg =
		    (i % 2 == 0) ? Segment{random_linear(rng)} : Segment{random_circular(rng)};
		const Path p = Path::single(seg);
		const double err = frobenius_distance(holonomy_ode(GaugeField::isotropic(c), p, 4096),
		                                      holonomy_closed(IsotropicConnection{c}, p));
		max_err = std::max(max_err, err);
	}

	// Order fit on a circular segment (straight isotropic segments integrate
	// exactly, so they carry no order information).
	const Path arc = Path::single(CircularSeg(Vec3{}, e3(), Vec3{1.2, 0, 0}, 0.45));
	const Su2Element exact = holonomy_closed(IsotropicConnection{2.0}, arc);
	std::vector<double> ln, le;
	for (int steps : {16, 32, 64, 128, 256}) {
		ln.push_back(std::log(static_cast<double>(steps)));
		le.push_back(std::log(
		    frobenius_distance(holonomy_ode(GaugeField::isotropic(2.0), arc, steps), exact)));
	}
	const double order = -fit_slope(ln, le);
	const double elapsed = now_seconds() - t0;

	std::snprintf(detail_buf, sizeof(detail_buf), "max_err=%.2e order=%.2f time=%.1fs", max_err,
	              order, elapsed);
	detail = detail_buf;
	return max_err <= 1e-8 && order >= 3.5 && order <= 4.5 && elapsed < 30.0;
}

bool holonomy_euclidean_invariance(std::string& detail) {
	auto rng = make_rng(2026, 12);
	double worst_closed = 0.0;
	double worst_ode = 0.0;
	for (int i = 0; i < 1000; ++i) {
		const double c = uniform_in(rng, -3.0, 3.0);
		const Path p = random_path(rng);
		const EuclideanMotion g{gaussian_vec3(rng, 2.0), random_su2(rng)};
		const IsotropicConnection conn{c};

		const Su2Element base_closed = holonomy_closed(conn, p);
		const Su2Element moved_closed =
		    conjugate(g.sigma, holonomy_closed(conn, act(g.inverse(), p)));
		worst_closed = std::max(worst_closed, frobenius_distance(moved_closed, base_closed));

		const GaugeField field = GaugeField::isotropic(c);
		const Su2Element base_ode = holonomy_ode(field, p, 4096);
		const Su2Element moved_ode =
		    conjugate(g.sigma, holonomy_ode(field, act(g.inverse(), p), 4096));
		worst_ode = std::max(worst_ode, frobenius_distance(moved_ode, base_ode));
	}
	std::snprintf(detail_buf, sizeof(detail_buf), "closed=%.2e ode=%.2e", worst_closed,
	              worst_ode);
	detail = detail_buf;
	return worst_closed <= 1e-9 && worst_ode <= 1e-6;
}

bool shear_discontinuity_gap(std::string& detail) {
	double worst = 0.0;
	for (double lambda : {0.1, 1.0, 10.0})
		worst = std::max(worst, std::abs(discontinuity_gap(lambda, kPi / (2.0 * lambda)) - 1.0));
	std::snprintf(detail_buf, sizeof(detail_buf), "max |gap-1|=%.2e", worst);
	detail = detail_buf;
	return worst <= 1e-9;
}

bool circular_entry_decomposition(std::string& detail) {
	const double tau = 2.0, r = 1.0;
	const int points = 1000;
	const Complex phase = std::polar(1.0, -tau / 2.0);

	std::vector<double> cs(points), residuals(points);
	double max_residual = 0.0;
	for (int i = 0; i < points; ++i) {
		const double c = 20.0 + (200.0 - 20.0) * static_cast<double>(i) / (points - 1);
		const Complex predicted = phase * std::cos(c * r * tau);
		const double res_pos =
		    std::abs(standard_circular_holonomy(c, r, tau).matrix().a11 - predicted);
		const double res_neg =
		    std::abs(standard_circular_holonomy(-c, r, tau).matrix().a11 - predicted);
		cs[i] = c;
		residuals[i] = std::max(res_pos, res_neg);
		max_residual = std::max(max_residual, residuals[i]);
	}

	// Envelope decay from per-bucket maxima on a log-log fit.
	const int buckets = 20, per = points / buckets;
	std::vector<double> lc, lr;
	for (int b = 0; b < buckets; ++b) {
		double env = 0.0;
		for (int i = b * per; i < (b + 1) * per; ++i) env = std::max(env, residuals[i]);
		lc.push_back(std::log(cs[b * per + per / 2]));
		lr.push_back(std::log(env));
	}
	const double exponent = -fit_slope(lc, lr);

	std::snprintf(detail_buf, sizeof(detail_buf), "max_residual=%.3f exponent=%.2f",
	              max_residual, exponent);
	detail = detail_buf;
	return max_residual <= 0.05 && exponent >= 0.8 && exponent <= 1.2;
}

bool winding_family_proper_inclusion(std::string& detail) {
	const InclusionReport report = proper_inclusion_witness(2026);
	std::snprintf(detail_buf, sizeof(detail_buf),
	              "count=%d inv=%.1e lin=%.1e min_dist=%.2f", report.count,
	              report.max_invariance_residual, report.max_linear_residual,
	              report.min_pairwise_distance);
	detail = detail_buf;
	return report.count == 3 && report.invariance_ok && report.linear_trivial_ok &&
	       report.pairwise_distinct_ok && report.max_invariance_residual <= 1e-9 &&
	       report.max_linear_residual <= 1e-12 && report.min_pairwise_distance >= 1.0;
}

bool character_transport_round_trip(std::string& detail) {
	auto rng = make_rng(2026, 13);
	double worst = 0.0;
	for (int i = 0; i < 20; ++i) {
		const Path p = Path::single(LinearSeg(gaussian_vec3(rng), random_unit_vec3(rng),
		                                      0.1 + 2.9 * static_cast<double>(i) / 19.0));
		for (int j = 0; j < 20; ++j) {
			const double c = -3.0 + 6.0 * static_cast<double>(j) / 19.0;
			worst = std::max(
			    worst, frobenius_distance(delta_map(BohrCharacter::embed(c)).evaluate(p),
			                              holonomy_closed(IsotropicConnection{c}, p)));
		}
	}
	std::snprintf(detail_buf, sizeof(detail_buf), "max_dev=%.2e over 20x20 grid", worst);
	detail = detail_buf;
	return worst <= 1e-12;
}

bool linear_values_on_torus(std::string& detail) {
	auto rng = make_rng(2026, 14);
	double worst = 0.0;
	for (int i = 0; i < 100; ++i) {
		const double c = uniform_in(rng, -4.0, 4.0);
		const TorusAxis axis{random_unit_vec3(rng)};
		worst = std::max(worst, torus_residual(GenConn::from_isotropic(c), axis,
		                                       {uniform_in(rng, 0.1, 4.0)}));
	}
	std::snprintf(detail_buf, sizeof(detail_buf), "max_dist=%.2e", worst);
	detail = detail_buf;
	return worst <= 1e-9;
}

bool subset_characters_distinct(std::string& detail) {
	const double t0 = now_seconds();
	std::vector<double> vals(10);
	for (int i = 0; i < 10; ++i) vals[i] = std::sqrt(static_cast<double>(2 + i * i));
	const FrequencyBasis basis(vals);

	std::vector<RationalFreq> probes;
	for (std::size_t i = 0; i < basis.size(); ++i)
		probes.push_back(RationalFreq::single(basis, i, Rational(1, 2)));

	// Half-turn probes return exactly +-1, so each subset yields a bit
	// signature; all 2^10 must be distinct.
	std::vector<bool> seen(1 << 10, false);
	int distinct = 0;
	for (int mask = 0; mask < (1 << 10); ++mask) {
		std::vector<bool> in_j(10);
		for (int i = 0; i < 10; ++i) in_j[i] = (mask >> i) & 1;
		const BohrCharacter psi = psi_from_subset(basis, in_j);
		int sig = 0;
		for (int i = 0; i < 10; ++i)
			if (psi.eval(probes[i]).real() < 0.0) sig |= 1 << i;
		if (!seen[sig]) {
			seen[sig] = true;
			++distinct;
		}
	}
	const double elapsed = now_seconds() - t0;
	std::snprintf(detail_buf, sizeof(detail_buf), "distinct=%d/1024 time=%.2fs", distinct,
	              elapsed);
	detail = detail_buf;
	return distinct == 1024 && elapsed < 10.0;
}

bool noncommuting_loop_values(std::string& detail) {
	const double tau = 2.0, r = 1.0;
	const double c = std::sqrt(kPi * kPi / (tau * tau) - 0.25) / r;
	const double d = std::sqrt(kPi * kPi / (4.0 * tau * tau) - 0.25) / r;
	const Path loop = Path::single(CircularSeg(Vec3{}, e3(), Vec3{r, 0, 0}, tau / (2.0 * kPi)));
	const double comm =
	    commutator_norm(GenConn::from_isotropic(c), GenConn::from_isotropic(d), loop);

	const GenConn lin_a = GenConn::linear_rule(
	    AdditivePhase::closed_form([](double l) { return 0.8 * l; }, "0.8 l"));
	const GenConn lin_b = GenConn::linear_rule(AdditivePhase::closed_form(
	    [](double l) { return std::sin(l) + 0.25 * l; }, "sin + linear"));
	auto rng = make_rng(2026, 15);
	double worst_lin = 0.0;
	for (int i = 0; i < 100; ++i)
		worst_lin = std::max(worst_lin,
		                     commutator_norm(lin_a, lin_b, Path::single(random_linear(rng))));

	std::snprintf(detail_buf, sizeof(detail_buf), "loop_comm=%.3f linear_comm=%.2e", comm,
	              worst_lin);
	detail = detail_buf;
	return comm >= 0.1 && worst_lin <= 1e-12;
}

bool torus_tube_scaling(std::string& detail) {
	const double t0 = now_seconds();
	auto rng = make_rng(2026, 16);
	const TorusAxis axis{e3()};
	const std::vector<double> deltas{0.4, 0.2, 0.1, 0.05};
	std::vector<double> ld, lp;
	bool decreasing = true;
	double prev = 2.0;
	for (double delta : deltas) {
		const TubeEstimate est = tube_probability(axis, delta, 1000000, rng);
		decreasing = decreasing && est.p < prev;
		prev = est.p;
		ld.push_back(std::log(delta));
		lp.push_back(std::log(est.p));
	}
	const double slope = fit_slope(ld, lp);
	const double elapsed = now_seconds() - t0;
	std::snprintf(detail_buf, sizeof(detail_buf), "slope=%.2f decreasing=%d time=%.1fs", slope,
	              decreasing ? 1 : 0, elapsed);
	detail = detail_buf;
	return decreasing && slope >= 1.7 && slope <= 2.3 && elapsed < 60.0;
}

bool connection_form_invariance(std::string& detail) {
	auto rng = make_rng(2026, 17);
	double worst = 0.0;
	for (int i = 0; i < 100; ++i) {
		const EuclideanMotion g{gaussian_vec3(rng, 2.0), random_su2(rng)};
		worst = std::max(worst, verify_pullback_invariance(1.0, g, 20, rng));
	}
	const EuclideanMotion rot{Vec3{}, exp_su2(kPi / 2.0, e1())};
	const double control = verify_pullback_invariance(GaugeField::shear(1.0), rot, 100, rng);
	std::snprintf(detail_buf, sizeof(detail_buf), "max_residual=%.2e control=%.3f", worst,
	              control);
	detail = detail_buf;
	return worst <= 1e-6 && control >= 0.01;
}

bool rescaling_action_laws(std::string& detail) {
	auto rng = make_rng(2026, 18);
	double worst_embed = 0.0;
	double worst_round = 0.0;
	for (int i = 0; i < 100; ++i) {
		const double lambda = uniform_in(rng, 0.2, 5.0) * (rng() % 2 ? 1.0 : -1.0);
		const double x = uniform_in(rng, -5.0, 5.0);
		const BohrCharacter scaled = scale_action(lambda, BohrCharacter::embed(x));
		worst_embed = std::max(worst_embed, std::abs(scaled.embedded().x - lambda * x));

		// Shifted round trip: phases and probe values return exactly.
		const FrequencyBasis basis({uniform_in(rng, 0.5, 2.0), uniform_in(rng, 2.5, 4.0)});
		const BohrCharacter psi =
		    BohrCharacter::shifted(basis, {uniform_in(rng, -2.0, 2.0), uniform_in(rng, -2.0, 2.0)});
		const BohrCharacter back = scale_action(1.0 / lambda, scale_action(lambda, psi));
		const FrequencyBasis back_basis = back.shifted_data().basis;
		for (std::size_t k = 0; k < basis.size(); ++k)
			worst_round = std::max(worst_round, std::abs(back_basis.at(k) - basis.at(k)));
		const RationalFreq probe_orig(basis, {Rational(1, 2), Rational(-2, 3)});
		const RationalFreq probe_back(back_basis, {Rational(1, 2), Rational(-2, 3)});
		worst_round = std::max(worst_round, std::abs(back.eval(probe_back) - psi.eval(probe_orig)));
	}
	std::snprintf(detail_buf, sizeof(detail_buf), "embed_dev=%.1e roundtrip_dev=%.1e",
	              worst_embed, worst_round);
	detail = detail_buf;
	return worst_embed <= 1e-12 && worst_round <= 1e-12;
}

}  // namespace

int main() {
	struct Criterion {
		const char* name;
		bool (*run)(std::string&);
	};
	const Criterion criteria[] = {
	    {"ode-matches-closed-form", ode_matches_closed_form},
	    {"holonomy-euclidean-invariance", holonomy_euclidean_invariance},
	    {"shear-discontinuity-gap", shear_discontinuity_gap},
	    {"circular-entry-decomposition", circular_entry_decomposition},
	    {"winding-family-proper-inclusion", winding_family_proper_inclusion},
	    {"character-transport-round-trip", character_transport_round_trip},
	    {"linear-values-on-torus", linear_values_on_torus},
	    {"subset-characters-distinct", subset_characters_distinct},
	    {"noncommuting-loop-values", noncommuting_loop_values},
	    {"torus-tube-scaling", torus_tube_scaling},
	    {"connection-form-invariance", connection_form_invariance},
	    {"rescaling-action-laws", rescaling_action_laws},
	};

	int failures = 0;
	int index = 0;
	for (const Criterion& crit : criteria) {
		++index;
		std::string detail;
		bool ok = false;
		try {
			ok = crit.run(detail);
		} catch (const std::exception& e) {
			detail = std::string("exception: ") + e.what();
		}
		if (!ok) ++failures;
		std::printf("[%2d] %s  %-34s %s\n", index, ok ? "PASS" : "FAIL", crit.name,
		            detail.c_str());
	}
	std::printf("%d/12 criteria passed\n", 12 - failures);
	return failures == 0 ? 0 : 1;
}
