#include "holonomy/gen_connection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "holonomy/rng.hpp"

namespace holonomy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Torus element u - v mu(n) for a unit complex value u + iv; chosen so that
// the embedded character e^{i l c} reproduces exp_mu(-c l, n).
Su2Element torus_element(Complex value, const Vec3& n) {
	Su2Element s{value.real(), -value.imag() * n.x, -value.imag() * n.y, -value.imag() * n.z};
	s.renormalize();
	return s;
}

}  // namespace

AdditivePhase AdditivePhase::character_data(FrequencyBasis lengths, std::vector<double> phases) {
	if (phases.size() != lengths.size())
		throw std::invalid_argument("AdditivePhase: one phase per basis length required");
	AdditivePhase p;
	p.unchecked_ = false;
	p.label_ = "character-data";
	p.lengths_ = std::move(lengths);
	p.phases_ = std::move(phases);
	return p;
}

AdditivePhase AdditivePhase::closed_form(std::function<double(double)> fn, std::string label) {
	if (!fn) throw std::invalid_argument("AdditivePhase: null callable");
	AdditivePhase p;
	p.unchecked_ = true;  // nothing certifies additivity of a bare callable
	p.label_ = std::move(label);
	p.fn_ = std::move(fn);
	return p;
}

const FrequencyBasis& AdditivePhase::lengths() const {
	if (!lengths_) throw std::logic_error("AdditivePhase: closed form has no length basis");
	return *lengths_;
}

const std::vector<double>& AdditivePhase::phases() const {
	if (unchecked_) throw std::logic_error("AdditivePhase: closed form has no phase table");
	return phases_;
}

double AdditivePhase::eval(const RationalFreq& freq) const {
	if (unchecked_) throw std::invalid_argument("AdditivePhase: exact evaluation needs character data");
	if (freq.basis != *lengths_) throw std::invalid_argument("AdditivePhase: length basis mismatch");
	double acc = 0.0;
	for (std::size_t i = 0; i < phases_.size(); ++i)
		acc += freq.coeffs[i].to_double() * phases_[i];
	return acc;
}

double AdditivePhase::operator()(double l) const {
	if (unchecked_) return fn_(l);
	for (std::size_t i = 0; i < lengths_->size(); ++i) {
		const double base = lengths_->at(i);
		Rational q;
		if (!rationalize(l / base, 1024, 1e-9 / base, &q)) continue;
		if (std::abs(q.to_double() * base - l) > 1e-9) continue;
		return q.to_double() * phases_[i];
	}
	throw std::domain_error("AdditivePhase: length outside the evaluable span");
}

CircularPhase CircularPhase::winding_multiple(double k) {
	CircularPhase p;
	p.is_winding_ = true;
	p.k_ = k;
	p.label_ = "winding-multiple";
	return p;
}

CircularPhase CircularPhase::custom(std::function<double(double, double)> fn, std::string label) {
	if (!fn) throw std::invalid_argument("CircularPhase: null callable");
	CircularPhase p;
	p.is_winding_ = false;
	p.fn_ = std::move(fn);
	p.label_ = std::move(label);
	return p;
}

double CircularPhase::winding_coeff() const {
	if (!is_winding_) throw std::logic_error("CircularPhase: custom rule has no winding coefficient");
	return k_;
}

double CircularPhase::operator()(double radius, double winding) const {
	return is_winding_ ? kTwoPi * k_ * winding : fn_(radius, winding);
}

GenConn GenConn::from_isotropic(double c) { return GenConn(Rule{FromIsotropic{c}}); }
GenConn GenConn::linear_rule(AdditivePhase phase) {
	return GenConn(Rule{LinearRule{std::move(phase)}});
}
GenConn GenConn::circular_rule(CircularPhase phase) {
	return GenConn(Rule{CircularRule{std::move(phase)}});
}
GenConn GenConn::from_bohr(BohrCharacter character) {
	return GenConn(Rule{FromBohr{std::move(character)}});
}
GenConn GenConn::non_invariant_witness() { return GenConn(Rule{NonInvariantWitness{}}); }

Su2Element GenConn::evaluate(const Segment& seg) const {
	const bool linear = std::holds_alternative<LinearSeg>(seg);
	return std::visit(
	    [&](const auto& rule) -> Su2Element {
		    using T = std::decay_t<decltype(rule)>;
		    if constexpr (std::is_same_v<T, FromIsotropic>) {
			    return holonomy_closed(IsotropicConnection{rule.c}, seg);
		    } else if constexpr (std::is_same_v<T, LinearRule>) {
			    if (!linear) return Su2Element::identity();
			    const auto& lin = std::get<LinearSeg>(seg);
			    return exp_mu(rule.phase(lin.len), lin.dir);
		    } else if constexpr (std::is_same_v<T, CircularRule>) {
			    if (linear) return Su2Element::identity();
			    const auto& circ = std::get<CircularSeg>(seg);
			    return exp_mu(rule.phase(circ.radius(), circ.winding), circ.axis);
		    } else if constexpr (std::is_same_v<T, FromBohr>) {
			    if (!linear) return Su2Element::identity();
			    const auto& lin = std::get<LinearSeg>(seg);
			    return torus_element(rule.character.eval_real_freq(lin.len), lin.dir);
		    } else {
			    if (!linear) return Su2Element::identity();
			    const auto& lin = std::get<LinearSeg>(seg);
			    return exp_mu(lin.len * dot(lin.dir, e1()), e1());
		    }
	    },
	    rule_);
}

Su2Element GenConn::evaluate(const Path& p) const {
	Su2Element h = Su2Element::identity();
	for (const auto& item : p.items()) h = evaluate(canonical_segment(item)) * h;
	return h;
}

namespace {

// In-span length for rules that only evaluate on rational multiples of a
// declared basis; any positive length otherwise.
double sample_length(const GenConn& gc, std::mt19937_64& rng) {
	const FrequencyBasis* basis = nullptr;
	if (const auto* lin = std::get_if<LinearRule>(&gc.rule());
	    lin && lin->phase.is_character_data()) {
		basis = &lin->phase.lengths();
	} else if (const auto* bohr = std::get_if<FromBohr>(&gc.rule());
	           bohr && !bohr->character.is_embedded()) {
		basis = &bohr->character.shifted_data().basis;
	}
	if (basis == nullptr) return uniform_in(rng, 0.2, 3.0);
	const auto i = static_cast<std::size_t>(rng() % basis->size());
	const auto num = static_cast<std::int64_t>(1 + rng() % 12);
	const auto den = static_cast<std::int64_t>(1 + rng() % 8);
	return Rational(num, den).to_double() * basis->at(i);
}

LinearSeg random_linear(const GenConn& gc, std::mt19937_64& rng) {
	return LinearSeg(gaussian_vec3(rng, 1.5), random_unit_vec3(rng), sample_length(gc, rng));
}

CircularSeg random_circular(std::mt19937_64& rng) {
	const Vec3 axis = random_unit_vec3(rng);
	Vec3 perp = cross(axis, random_unit_vec3(rng));
	while (norm(perp) < 1e-3) perp = cross(axis, random_unit_vec3(rng));
	const double radius = uniform_in(rng, 0.2, 2.5);
	return CircularSeg(gaussian_vec3(rng, 1.5), axis, normalized(perp) * radius,
	                   uniform_in(rng, 0.05, 0.95));
}

EuclideanMotion random_motion(std::mt19937_64& rng) {
	return {gaussian_vec3(rng, 2.0), random_su2(rng)};
}

}  // namespace

double check_invariance(const GenConn& gc, int samples, std::mt19937_64& rng) {
	double worst = 0.0;
	for (int i = 0; i < samples; ++i) {
		Path p = [&]() -> Path {
			switch (rng() % 5) {
				case 0:
				case 1:
					return Path::single(random_linear(gc, rng));
				case 2:
				case 3:
					return Path::single(random_circular(rng));
				default: {
					// Two-segment probe exercising the composite product law.
					const LinearSeg first = random_linear(gc, rng);
					const Vec3 joint = first.start + first.dir * first.len;
					return Path({{Segment{first}, false},
					             {Segment{LinearSeg(joint, random_unit_vec3(rng),
					                                sample_length(gc, rng))},
					              false}});
				}
			}
		}();
		const EuclideanMotion g = random_motion(rng);
		const Su2Element lhs = gc.evaluate(act(g, p));
		const Su2Element rhs = conjugate(g.sigma, gc.evaluate(p));
		worst = std::max(worst, frobenius_distance(lhs, rhs));
	}
	return worst;
}

GenConn delta_map(const BohrCharacter& character) { return GenConn::from_bohr(character); }

BohrCharacter psi_from_linear_rule(const GenConn& gc) {
	const auto* lin = std::get_if<LinearRule>(&gc.rule());
	if (lin == nullptr)
		throw std::invalid_argument("psi_from_linear_rule: rule must be a linear rule");
	if (!lin->phase.is_character_data())
		throw std::invalid_argument("psi_from_linear_rule: closed-form phase has unchecked "
		                            "additivity; finitely-presented character data required");
	// chi_tau |-> e^{i sign(tau) eps(|tau|)}: each basis length l_i carries
	// phase theta_i per unit coefficient.
	const FrequencyBasis& basis = lin->phase.lengths();
	std::vector<PhaseStep> phases(basis.size());
	for (std::size_t i = 0; i < basis.size(); ++i)
		phases[i] = PhaseStep{Rational(0), lin->phase.phases()[i]};
	return BohrCharacter::shifted_phases(basis, std::move(phases));
}

double commutator_norm(const GenConn& a, const GenConn& b, const Path& p) {
	const Mat2c ma = a.evaluate(p).matrix();
	const Mat2c mb = b.evaluate(p).matrix();
	return (ma * mb - mb * ma).frobenius();
}

double torus_residual(const GenConn& gc, const TorusAxis& axis,
                      const std::vector<double>& lengths) {
	double worst = 0.0;
	for (double l : lengths) {
		const Su2Element val = gc.evaluate(Segment{LinearSeg(Vec3{}, axis.n, l)});
		worst = std::max(worst, torus_log(val, axis).dist);
	}
	return worst;
}

InclusionReport inclusion_report(const std::vector<GenConn>& rules, std::uint64_t seed) {
	InclusionReport report;
	report.invariance_ok = true;
	report.linear_trivial_ok = true;
	report.pairwise_distinct_ok = true;
	report.min_pairwise_distance = std::numeric_limits<double>::infinity();

	// Quarter-winding circles about each coordinate axis: enough to separate
	// rules whose straight-path values all agree.
	const Vec3 axes[3] = {e1(), e2(), e3()};
	std::vector<std::vector<Su2Element>> signatures;
	std::vector<bool> passes;

	auto rng = make_rng(seed, 101);
	for (const auto& rule : rules) {
		const double inv = check_invariance(rule, 300, rng);
		report.max_invariance_residual = std::max(report.max_invariance_residual, inv);
		const bool inv_ok = inv <= 1e-9;
		report.invariance_ok = report.invariance_ok && inv_ok;

		double lin_res = 0.0;
		for (int i = 0; i < 100; ++i) {
			const LinearSeg seg(gaussian_vec3(rng, 1.5), random_unit_vec3(rng),
			                    uniform_in(rng, 0.2, 3.0));
			lin_res = std::max(lin_res, frobenius_distance(rule.evaluate(Segment{seg}),
			                                               Su2Element::identity()));
		}
		report.max_linear_residual = std::max(report.max_linear_residual, lin_res);
		const bool lin_ok = lin_res <= 1e-12;
		report.linear_trivial_ok = report.linear_trivial_ok && lin_ok;
		passes.push_back(inv_ok && lin_ok);

		std::vector<Su2Element> sig;
		for (const Vec3& n : axes) {
			const Vec3 r = (distance(n, e3()) > 0.5) ? cross(n, e3()) : e1();
			sig.push_back(rule.evaluate(Segment{CircularSeg(Vec3{}, n, normalized(r), 0.25)}));
		}
		signatures.push_back(std::move(sig));
	}

	// Count equivalence classes among passing rules; two rules coincide when
	// every probe value agrees within the distinctness threshold.
	const double distinct_tol = 1e-6;
	std::vector<int> cls(rules.size(), -1);
	int next = 0;
	for (std::size_t i = 0; i < rules.size(); ++i) {
		if (!passes[i]) continue;
		for (std::size_t j = 0; j < i; ++j) {
			if (!passes[j] || cls[j] < 0) continue;
			double dist = 0.0;
			for (std::size_t k = 0; k < signatures[i].size(); ++k)
				dist = std::max(dist, frobenius_distance(signatures[i][k], signatures[j][k]));
			if (dist <= distinct_tol) {
				cls[i] = cls[j];
				break;
			}
		}
		if (cls[i] < 0) cls[i] = next++;
	}
	report.count = next;

	for (std::size_t i = 0; i < rules.size(); ++i) {
		for (std::size_t j = i + 1; j < rules.size(); ++j) {
			double dist = 0.0;
			for (std::size_t k = 0; k < signatures[i].size(); ++k)
				dist = std::max(dist, frobenius_distance(signatures[i][k], signatures[j][k]));
			report.min_pairwise_distance = std::min(report.min_pairwise_distance, dist);
			if (dist <= distinct_tol) report.pairwise_distinct_ok = false;
		}
	}
	if (rules.size() < 2) report.min_pairwise_distance = 0.0;
	return report;
}

InclusionReport proper_inclusion_witness(std::uint64_t seed) {
	return inclusion_report(
	    {GenConn::circular_winding(0.0), GenConn::circular_winding(1.0),
	     GenConn::circular_winding(-1.0)},
	    seed);
}

}  // namespace holonomy
