#pragma once

// Characters of the real line viewed discretely (the Bohr-compactification
// picture), almost periodic trig polynomials, and cylindrical functions on
// the disjoint union  R  |_|  (Bohr points).
//
// Frequencies are exact rational combinations over a declared, trusted
// Q-independent positive basis; characters either come from a real point x
// (chi_tau |-> e^{i tau x}) or from per-basis phase shifts.  Shifted
// characters keep their per-unit phase as an exact whole-turn part plus a
// real remainder, so probe evaluations such as half-turn tests are exact and
// large rational coefficients lose no precision to accumulated 2 pi wrapping.

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "holonomy/rational.hpp"
#include "holonomy/su2.hpp"

namespace holonomy {

class FrequencyBasis {
 public:
	// Values must be positive and pairwise distinct; Q-independence is the
	// caller's responsibility (it cannot be certified in floating point).
	explicit FrequencyBasis(std::vector<double> values);

	std::size_t size() const { return vals_->size(); }
	double at(std::size_t i) const { return (*vals_)[i]; }
	const std::vector<double>& values() const { return *vals_; }

	// Basis with every element divided by the positive factor s.
	FrequencyBasis scaled_down_by(double s) const;

	friend bool operator==(const FrequencyBasis& a, const FrequencyBasis& b);
	friend bool operator!=(const FrequencyBasis& a, const FrequencyBasis& b) { return !(a == b); }

 private:
	std::shared_ptr<const std::vector<double>> vals_;
};

// tau = sum_i coeffs[i] * basis[i], with exact rational coefficients.
struct RationalFreq {
	FrequencyBasis basis;
	std::vector<Rational> coeffs;

	RationalFreq(FrequencyBasis basis_, std::vector<Rational> coeffs_);

	// Single basis element scaled: q * basis[i].
	static RationalFreq single(const FrequencyBasis& basis, std::size_t i, const Rational& q);

	double to_real() const;
	bool is_zero() const;

	RationalFreq operator+(const RationalFreq& o) const;
	RationalFreq operator-() const;
};

// Per-unit-coefficient phase 2 pi * turns + extra of a shifted character.
struct PhaseStep {
	Rational turns;
	double extra = 0.0;

	double value() const;
};

class BohrCharacter {
 public:
	struct Embedded {
		double x = 0.0;
	};
	struct Shifted {
		FrequencyBasis basis;
		std::vector<PhaseStep> phases;
	};

	// chi_tau |-> e^{i tau x}; embed(0) is the unit character.
	static BohrCharacter embed(double x) { return BohrCharacter(Embedded{x}); }
	static BohrCharacter zero() { return embed(0.0); }
	// Per-basis real shifts delta_i: chi_tau |-> prod_i e^{i q_i basis_i delta_i}.
	static BohrCharacter shifted(const FrequencyBasis& basis, const std::vector<double>& shifts);
	static BohrCharacter shifted_phases(FrequencyBasis basis, std::vector<PhaseStep> phases);

	bool is_embedded() const { return std::holds_alternative<Embedded>(v_); }
	const Embedded& embedded() const { return std::get<Embedded>(v_); }
	const Shifted& shifted_data() const { return std::get<Shifted>(v_); }
	// View of a shifted character as per-basis real shifts delta_i.
	std::vector<double> shifts() const;

	// Evaluate at an exact in-span frequency.  Shifted characters require the
	// same basis; embedded ones accept any.
	Complex eval(const RationalFreq& freq) const;
	// Evaluate at a bare real frequency.  Embedded characters accept any tau;
	// shifted ones reconstruct tau as a rational multiple (denominator <=
	// 1024, tolerance 1e-9) of a single basis element and throw
	// std::domain_error when tau is outside that evaluable span.
	Complex eval_real_freq(double tau) const;

 private:
	using V = std::variant<Embedded, Shifted>;
	explicit BohrCharacter(V v) : v_(std::move(v)) {}
	V v_;
};

// Pointwise product / inverse of characters.  Products mix only compatible
// representations: embedded*embedded, shifted*shifted over one basis, or a
// pair with embed(0); anything else throws std::invalid_argument (lift the
// embedded factor explicitly with lift_embedded first).
BohrCharacter char_mul(const BohrCharacter& a, const BohrCharacter& b);
BohrCharacter char_inv(const BohrCharacter& a);

// embed(x) rewritten as a shifted character over the given basis.
BohrCharacter lift_embedded(double x, const FrequencyBasis& basis);

// The multiplicative rescaling x-bar |-> lambda * x-bar: embedded points map
// to embed(lambda x); shifted characters keep their phases on the rescaled
// basis {tau_i / lambda}.  lambda must be nonzero.
BohrCharacter scale_action(double lambda, const BohrCharacter& psi);

// Character that is trivial exactly on the sub-span selected by in_j: basis
// element i carries a full-turn phase when in_j[i] is false.  Distinct
// subsets give characters separated by half-turn probes q = 1/2.
BohrCharacter psi_from_subset(const FrequencyBasis& basis, const std::vector<bool>& in_j);

// True when psi evaluates to 1 on every probe within tol.
bool is_zero_like(const BohrCharacter& psi, const std::vector<RationalFreq>& probes,
                  double tol = 1e-12);

// Trigonometric polynomial sum_j c_j chi_{tau_j}; all frequencies share one
// basis and are combined/reduced on construction.
class AlmostPeriodicFn {
 public:
	struct Term {
		Complex coeff;
		RationalFreq freq;
	};

	AlmostPeriodicFn(const FrequencyBasis& basis, std::vector<Term> terms);
	static AlmostPeriodicFn zero(const FrequencyBasis& basis);

	const std::vector<Term>& terms() const { return terms_; }
	const FrequencyBasis& basis() const { return basis_; }

	Complex eval_real(double x) const;
	Complex eval_char(const BohrCharacter& psi) const;

	// Coefficient of the zero frequency (the Haar mean).
	Complex constant_coeff() const;
	// Haar L^2 norm squared: sum_j |c_j|^2 by character orthogonality.
	double l2_normsq() const;

	AlmostPeriodicFn operator+(const AlmostPeriodicFn& o) const;
	AlmostPeriodicFn operator*(Complex s) const;

 private:
	FrequencyBasis basis_;
	std::vector<Term> terms_;
};

// Cylindrical function on R |_| Bohr: a vanishing-at-infinity part living
// only on the R copy plus an almost periodic part contributing on both.
struct CylFnOnR {
	std::function<Complex(double)> c0;  // evaluated on real points only
	AlmostPeriodicFn ap;

	Complex eval_real(double x) const { return c0(x) + ap.eval_real(x); }
};

struct RBarPoint {
	std::variant<double, BohrCharacter> v;

	static RBarPoint real(double x) { return {x}; }
	static RBarPoint bohr(const BohrCharacter& psi) { return {psi}; }

	bool is_real() const { return std::holds_alternative<double>(v); }
	double real_value() const { return std::get<double>(v); }
	const BohrCharacter& bohr_value() const { return std::get<BohrCharacter>(v); }
};

Complex cylfn_eval(const CylFnOnR& f, const RBarPoint& p);

// Basic open sets of the glued space:
//  * IntervalUnion: an open subset of the R copy only;
//  * CompactExterior: everything outside a compact K of R, together with all
//    Bohr points (the neighborhoods of infinity);
//  * ApPreimage: points whose value under an almost periodic function (real
//    evaluation on R, character evaluation at Bohr points) lands in a union
//    of open discs.
struct IntervalUnion {
	std::vector<std::pair<double, double>> open_intervals;
};
struct CompactExterior {
	std::vector<std::pair<double, double>> closed_intervals;
};
struct Disc {
	Complex center;
	double radius = 0.0;
};
struct ApPreimage {
	AlmostPeriodicFn f;
	std::vector<Disc> discs;
};
using BasicOpen = std::variant<IntervalUnion, CompactExterior, ApPreimage>;

bool in_basic_open(const RBarPoint& p, const BasicOpen& set);

}  // namespace holonomy
