#pragma once

// Generalized connections: groupoid homomorphisms from piecewise
// linear/circular paths into SU(2), given by per-segment rules rather than by
// integrating a smooth field.  Includes the dictionary between
// Euclidean-invariant homomorphisms and characters of the line.
//
// Sign convention, fixed once: the correspondence between a linear-path rule
// and its character is pinned by requiring delta_map(embed(c)) to reproduce
// the isotropic holonomy exp_mu(-c l, n) exactly.  With psi_from_linear_rule
// evaluating chi_tau |-> e^{i sign(tau) eps(|tau|)}, composing the two maps
// therefore returns the rule with negated phase (equivalently, the pointwise
// inverse); tests assert that round trip in exactly this form.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "holonomy/bohr.hpp"
#include "holonomy/connections.hpp"
#include "holonomy/paths.hpp"

namespace holonomy {

// Additive phase assignment eps: lengths -> R for linear-path rules.  Either
// finitely-presented character data (a trusted Q-independent basis of
// admissible lengths with one phase per basis element, extended Q-linearly)
// or an arbitrary closed-form callable.  Closed forms carry the
// "unchecked-additivity" flag: nothing certifies eps(a+b) = eps(a)+eps(b)
// for them, and the character extraction below rejects them.
class AdditivePhase {
 public:
	static AdditivePhase character_data(FrequencyBasis lengths, std::vector<double> phases);
	static AdditivePhase closed_form(std::function<double(double)> fn, std::string label);

	bool is_character_data() const { return !unchecked_; }
	const std::string& label() const { return label_; }
	const FrequencyBasis& lengths() const;
	const std::vector<double>& phases() const;

	// Exact evaluation at a rational combination of the basis lengths.
	double eval(const RationalFreq& freq) const;
	// Evaluation at a bare length.  Character data reconstructs l as a
	// rational multiple (denominator <= 1024, tolerance 1e-9) of a single
	// basis length and throws std::domain_error outside that span; closed
	// forms just call the function.
	double operator()(double l) const;

 private:
	AdditivePhase() = default;
	bool unchecked_ = false;
	std::string label_;
	std::optional<FrequencyBasis> lengths_;
	std::vector<double> phases_;
	std::function<double(double)> fn_;
};

// Phase assignment (radius, winding) -> R for circular-path rules, additive
// mod 2 pi in the winding.
class CircularPhase {
 public:
	// eps(r, m) = 2 pi k m (exactly additive in m).
	static CircularPhase winding_multiple(double k);
	static CircularPhase custom(std::function<double(double, double)> fn, std::string label);

	bool is_winding_multiple() const { return is_winding_; }
	double winding_coeff() const;
	const std::string& label() const { return label_; }
	double operator()(double radius, double winding) const;

 private:
	CircularPhase() = default;
	bool is_winding_ = false;
	double k_ = 0.0;
	std::string label_;
	std::function<double(double, double)> fn_;
};

struct FromIsotropic {
	double c = 0.0;
};
struct LinearRule {
	AdditivePhase phase;
};
struct CircularRule {
	CircularPhase phase;
};
struct FromBohr {
	BohrCharacter character;
};
struct NonInvariantWitness {};

class GenConn {
 public:
	using Rule = std::variant<FromIsotropic, LinearRule, CircularRule, FromBohr, NonInvariantWitness>;

	// Closed-form isotropic holonomy on every segment type.
	static GenConn from_isotropic(double c);
	// exp_mu(eps(len), dir) on straight segments, identity on circular ones.
	static GenConn linear_rule(AdditivePhase phase);
	// exp_mu(eps(radius, winding), axis) on circular segments, identity on
	// straight ones.
	static GenConn circular_rule(CircularPhase phase);
	static GenConn circular_winding(double k) {
		return circular_rule(CircularPhase::winding_multiple(k));
	}
	// Character-induced rule on straight segments: with u + iv = psi(chi_len),
	// the value is the torus element u - v mu(dir); identity on circular
	// segments.  delta_map below is the same thing with intent spelled out.
	static GenConn from_bohr(BohrCharacter character);
	// exp_mu(len * <dir, e1>, e1) on straight segments: a homomorphism that
	// fails Euclidean invariance (rotating the path changes <dir, e1>).
	static GenConn non_invariant_witness();

	const Rule& rule() const { return rule_; }

	Su2Element evaluate(const Segment& seg) const;
	Su2Element evaluate(const Path& p) const;

 private:
	explicit GenConn(Rule rule) : rule_(std::move(rule)) {}
	Rule rule_;
};

// Max invariance residual || gc(act(g, p)) - sigma gc(p) sigma^-1 ||_F over
// `samples` random (motion, path) draws (straight, circular, and short
// composite probes).  Rules with a restricted length span are probed with
// rational multiples of their own basis lengths.
double check_invariance(const GenConn& gc, int samples, std::mt19937_64& rng);

// Character -> generalized connection (the straight-segment transport
// induced by a character; circular segments map to the identity).
GenConn delta_map(const BohrCharacter& character);

// Character of a linear rule: chi_0 |-> 1, chi_tau |-> e^{i sign(tau)
// eps(|tau|)}.  Requires finitely-presented character data; closed-form
// phases (unchecked additivity) are rejected with std::invalid_argument.
BohrCharacter psi_from_linear_rule(const GenConn& gc);

// || A B - B A ||_F for the two rule values on the path.
double commutator_norm(const GenConn& a, const GenConn& b, const Path& p);

// Max geodesic distance of gc's value on straight segments (origin, axis n,
// given lengths) from the torus {exp_mu(t, n)}: invariant rules land on the
// torus of the path direction.
double torus_residual(const GenConn& gc, const TorusAxis& axis,
                      const std::vector<double>& lengths);

struct InclusionReport {
	int count = 0;  // distinct rules passing both gates below
	bool invariance_ok = false;      // every rule invariant within 1e-9
	bool linear_trivial_ok = false;  // every rule trivial on straight paths within 1e-12
	bool pairwise_distinct_ok = false;
	double max_invariance_residual = 0.0;
	double max_linear_residual = 0.0;
	double min_pairwise_distance = 0.0;  // over quarter-circle probes
};

// Gate report for a family of rules; distinctness is matrix distance > 1e-6
// on the declared quarter-winding circular probes about the coordinate axes.
InclusionReport inclusion_report(const std::vector<GenConn>& rules, std::uint64_t seed);

// The three winding rules k = 0, +1, -1: invariant homomorphisms that are
// trivial on every straight path yet pairwise distinct, so the invariant
// theory is strictly larger than the isotropic family (which is determined
// by its straight-path values).
InclusionReport proper_inclusion_witness(std::uint64_t seed);

}  // namespace holonomy
