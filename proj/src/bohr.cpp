#include "holonomy/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holonomy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

bool rationalize(double x, std::int64_t max_den, double tol, Rational* out) {
	// Continued-fraction convergents of x; stop at the denominator cap.
	double v = x;
	std::int64_t p0 = 0, q0 = 1;  // h(-2)/k(-2)
	std::int64_t p1 = 1, q1 = 0;  // h(-1)/k(-1)
	for (int iter = 0; iter < 64; ++iter) {
		const double fl = std::floor(v);
		if (std::abs(fl) > 9.0e17) break;
		const auto a = static_cast<std::int64_t>(fl);
		const __int128 p = static_cast<__int128>(a) * p1 + p0;
		const __int128 q = static_cast<__int128>(a) * q1 + q0;
		if (q > max_den || p > INT64_MAX || p < INT64_MIN) break;
		p0 = p1;
		q0 = q1;
		p1 = static_cast<std::int64_t>(p);
		q1 = static_cast<std::int64_t>(q);
		const double approx = static_cast<double>(p1) / static_cast<double>(q1);
		if (std::abs(approx - x) <= tol) {
			*out = Rational(p1, q1);
			return true;
		}
		const double rem = v - fl;
		if (rem < 1e-15) break;
		v = 1.0 / rem;
	}
	return false;
}

FrequencyBasis::FrequencyBasis(std::vector<double> values) {
	if (values.empty()) throw std::invalid_argument("FrequencyBasis: must be nonempty");
	for (std::size_t i = 0; i < values.size(); ++i) {
		if (!(values[i] > 0.0)) throw std::invalid_argument("FrequencyBasis: values must be positive");
		for (std::size_t j = i + 1; j < values.size(); ++j) {
			if (values[i] == values[j])
				throw std::invalid_argument("FrequencyBasis: values must be distinct");
		}
	}
	vals_ = std::make_shared<const std::vector<double>>(std::move(values));
}

FrequencyBasis FrequencyBasis::scaled_down_by(double s) const {
	if (!(s > 0.0)) throw std::invalid_argument("FrequencyBasis: scale must be positive");
	std::vector<double> scaled(*vals_);
	for (double& v : scaled) v /= s;
	return FrequencyBasis(std::move(scaled));
}

bool operator==(const FrequencyBasis& a, const FrequencyBasis& b) {
	return a.vals_ == b.vals_ || *a.vals_ == *b.vals_;
}

RationalFreq::RationalFreq(FrequencyBasis basis_, std::vector<Rational> coeffs_)
    : basis(std::move(basis_)), coeffs(std::move(coeffs_)) {
	if (coeffs.size() != basis.size())
		throw std::invalid_argument("RationalFreq: coefficient count must match basis size");
}

RationalFreq RationalFreq::single(const FrequencyBasis& basis, std::size_t i, const Rational& q) {
	std::vector<Rational> coeffs(basis.size(), Rational(0));
	coeffs.at(i) = q;
	return RationalFreq(basis, std::move(coeffs));
}

double RationalFreq::to_real() const {
	double tau = 0.0;
	for (std::size_t i = 0; i < coeffs.size(); ++i) tau += coeffs[i].to_double() * basis.at(i);
	return tau;
}

bool RationalFreq::is_zero() const {
	return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q.is_zero(); });
}

RationalFreq RationalFreq::operator+(const RationalFreq& o) const {
	if (basis != o.basis) throw std::invalid_argument("RationalFreq: basis mismatch");
	std::vector<Rational> sum(coeffs.size());
	for (std::size_t i = 0; i < coeffs.size(); ++i) sum[i] = coeffs[i] + o.coeffs[i];
	return RationalFreq(basis, std::move(sum));
}

RationalFreq RationalFreq::operator-() const {
	std::vector<Rational> neg(coeffs.size());
	for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
	return RationalFreq(basis, std::move(neg));
}

double PhaseStep::value() const { return kTwoPi * turns.to_double() + extra; }

BohrCharacter BohrCharacter::shifted(const FrequencyBasis& basis,
                                     const std::vector<double>& shifts) {
	if (shifts.size() != basis.size())
		throw std::invalid_argument("BohrCharacter: shift count must match basis size");
	std::vector<PhaseStep> phases(shifts.size());
	for (std::size_t i = 0; i < shifts.size(); ++i)
		phases[i] = PhaseStep{Rational(0), basis.at(i) * shifts[i]};
	return BohrCharacter(Shifted{basis, std::move(phases)});
}

BohrCharacter BohrCharacter::shifted_phases(FrequencyBasis basis, std::vector<PhaseStep> phases) {
	if (phases.size() != basis.size())
		throw std::invalid_argument("BohrCharacter: phase count must match basis size");
	return BohrCharacter(Shifted{std::move(basis), std::move(phases)});
}

std::vector<double> BohrCharacter::shifts() const {
	const Shifted& s = shifted_data();
	std::vector<double> out(s.phases.size());
	for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.phases[i].value() / s.basis.at(i);
	return out;
}

Complex BohrCharacter::eval(const RationalFreq& freq) const {
	if (is_embedded()) {
		const double phi = std::fmod(freq.to_real() * embedded().x, kTwoPi);
		return unit_phase(phi);
	}
	const Shifted& s = std::get<Shifted>(v_);
	if (freq.basis != s.basis)
		throw std::invalid_argument("BohrCharacter: frequency basis mismatch");
	// Whole turns reduce exactly before anything touches floating point.
	Rational turn_frac(0);
	double extra = 0.0;
	for (std::size_t i = 0; i < s.phases.size(); ++i) {
		const Rational& q = freq.coeffs[i];
		if (q.is_zero()) continue;
		turn_frac = (turn_frac + (q * s.phases[i].turns).frac()).frac();
		extra += q.to_double() * s.phases[i].extra;
	}
	const double phi = std::fmod(kTwoPi * turn_frac.to_double() + std::fmod(extra, kTwoPi), kTwoPi);
	return unit_phase(phi);
}

Complex BohrCharacter::eval_real_freq(double tau) const {
	if (is_embedded()) return unit_phase(std::fmod(tau * embedded().x, kTwoPi));
	if (tau == 0.0) return {1.0, 0.0};
	const Shifted& s = std::get<Shifted>(v_);
	for (std::size_t i = 0; i < s.basis.size(); ++i) {
		Rational q;
		if (!rationalize(tau / s.basis.at(i), 1024, 1e-9 / s.basis.at(i), &q)) continue;
		if (std::abs(q.to_double() * s.basis.at(i) - tau) > 1e-9) continue;
		return eval(RationalFreq::single(s.basis, i, q));
	}
	throw std::domain_error("BohrCharacter: frequency outside evaluable span");
}

BohrCharacter char_mul(const BohrCharacter& a, const BohrCharacter& b) {
	if (a.is_embedded() && b.is_embedded())
		return BohrCharacter::embed(a.embedded().x + b.embedded().x);
	if (a.is_embedded() && a.embedded().x == 0.0) return b;
	if (b.is_embedded() && b.embedded().x == 0.0) return a;
	if (a.is_embedded() || b.is_embedded())
		throw std::invalid_argument("char_mul: mixed embedded/shifted product; lift the embedded "
		                            "factor onto the basis first");
	const auto& sa = a.shifted_data();
	const auto& sb = b.shifted_data();
	if (sa.basis != sb.basis) throw std::invalid_argument("char_mul: basis mismatch");
	std::vector<PhaseStep> phases(sa.phases.size());
	for (std::size_t i = 0; i < phases.size(); ++i) {
		phases[i] = PhaseStep{sa.phases[i].turns + sb.phases[i].turns,
		                     sa.phases[i].extra + sb.phases[i].extra};
	}
	return BohrCharacter::shifted_phases(sa.basis, std::move(phases));
}

BohrCharacter char_inv(const BohrCharacter& a) {
	if (a.is_embedded()) return BohrCharacter::embed(-a.embedded().x);
	const auto& s = a.shifted_data();
	std::vector<PhaseStep> phases(s.phases.size());
	for (std::size_t i = 0; i < phases.size(); ++i)
		phases[i] = PhaseStep{-s.phases[i].turns, -s.phases[i].extra};
	return BohrCharacter::shifted_phases(s.basis, std::move(phases));
}

BohrCharacter lift_embedded(double x, const FrequencyBasis& basis) {
	std::vector<double> shifts(basis.size(), x);
	return BohrCharacter::shifted(basis, shifts);
}

BohrCharacter scale_action(double lambda, const BohrCharacter& psi) {
	if (lambda == 0.0) throw std::invalid_argument("scale_action: lambda must be nonzero");
	if (psi.is_embedded()) return BohrCharacter::embed(lambda * psi.embedded().x);
	const auto& s = psi.shifted_data();
	// (lambda . psi)(chi_tau) = psi(chi_{lambda tau}): same phases over the
	// basis {tau_i / lambda}; a negative lambda additionally inverts.
	std::vector<PhaseStep> phases = s.phases;
	if (lambda < 0.0) {
		for (auto& ph : phases) ph = PhaseStep{-ph.turns, -ph.extra};
	}
	return BohrCharacter::shifted_phases(s.basis.scaled_down_by(std::abs(lambda)),
	                                     std::move(phases));
}

BohrCharacter psi_from_subset(const FrequencyBasis& basis, const std::vector<bool>& in_j) {
	if (in_j.size() != basis.size())
		throw std::invalid_argument("psi_from_subset: membership size must match basis");
	std::vector<PhaseStep> phases(in_j.size());
	for (std::size_t i = 0; i < in_j.size(); ++i)
		phases[i] = PhaseStep{Rational(in_j[i] ? 0 : 1), 0.0};
	return BohrCharacter::shifted_phases(basis, std::move(phases));
}

bool is_zero_like(const BohrCharacter& psi, const std::vector<RationalFreq>& probes, double tol) {
	for (const auto& freq : probes) {
		if (std::abs(psi.eval(freq) - Complex{1.0, 0.0}) > tol) return false;
	}
	return true;
}

AlmostPeriodicFn::AlmostPeriodicFn(const FrequencyBasis& basis, std::vector<Term> terms)
    : basis_(basis) {
	for (auto& term : terms) {
		if (term.freq.basis != basis_)
			throw std::invalid_argument("AlmostPeriodicFn: all terms must share the basis");
		bool merged = false;
		for (auto& kept : terms_) {
			if (kept.freq.coeffs == term.freq.coeffs) {
				kept.coeff += term.coeff;
				merged = true;
				break;
			}
		}
		if (!merged) terms_.push_back(std::move(term));
	}
	std::erase_if(terms_, [](const Term& t) { return std::abs(t.coeff) == 0.0; });
}

AlmostPeriodicFn AlmostPeriodicFn::zero(const FrequencyBasis& basis) {
	return AlmostPeriodicFn(basis, {});
}

Complex AlmostPeriodicFn::eval_real(double x) const {
	Complex acc{0.0, 0.0};
	for (const auto& t : terms_) acc += t.coeff * unit_phase(std::fmod(t.freq.to_real() * x, kTwoPi));
	return acc;
}

Complex AlmostPeriodicFn::eval_char(const BohrCharacter& psi) const {
	Complex acc{0.0, 0.0};
	for (const auto& t : terms_) acc += t.coeff * psi.eval(t.freq);
	return acc;
}

Complex AlmostPeriodicFn::constant_coeff() const {
	for (const auto& t : terms_) {
		if (t.freq.is_zero()) return t.coeff;
	}
	return {0.0, 0.0};
}

double AlmostPeriodicFn::l2_normsq() const {
	double acc = 0.0;
	for (const auto& t : terms_) acc += std::norm(t.coeff);
	return acc;
}

AlmostPeriodicFn AlmostPeriodicFn::operator+(const AlmostPeriodicFn& o) const {
	std::vector<Term> all = terms_;
	all.insert(all.end(), o.terms_.begin(), o.terms_.end());
	return AlmostPeriodicFn(basis_, std::move(all));
}

AlmostPeriodicFn AlmostPeriodicFn::operator*(Complex s) const {
	std::vector<Term> scaled = terms_;
	for (auto& t : scaled) t.coeff *= s;
	return AlmostPeriodicFn(basis_, std::move(scaled));
}

Complex cylfn_eval(const CylFnOnR& f, const RBarPoint& p) {
	if (p.is_real()) return f.eval_real(p.real_value());
	return f.ap.eval_char(p.bohr_value());
}

namespace {

bool in_any_interval(double x, const std::vector<std::pair<double, double>>& intervals,
                     bool closed) {
	for (const auto& [a, b] : intervals) {
		if (closed ? (x >= a && x <= b) : (x > a && x < b)) return true;
	}
	return false;
}

}  // namespace

bool in_basic_open(const RBarPoint& p, const BasicOpen& set) {
	return std::visit(
	    [&p](const auto& s) -> bool {
		    using T = std::decay_t<decltype(s)>;
		    if constexpr (std::is_same_v<T, IntervalUnion>) {
			    return p.is_real() && in_any_interval(p.real_value(), s.open_intervals, false);
		    } else if constexpr (std::is_same_v<T, CompactExterior>) {
			    if (!p.is_real()) return true;
			    return !in_any_interval(p.real_value(), s.closed_intervals, true);
		    } else {
			    const Complex val = p.is_real() ? s.f.eval_real(p.real_value())
			                                    : s.f.eval_char(p.bohr_value());
			    for (const auto& disc : s.discs) {
				    if (std::abs(val - disc.center) < disc.radius) return true;
			    }
			    return false;
		    }
	    },
	    set);
}

}  // namespace holonomy
