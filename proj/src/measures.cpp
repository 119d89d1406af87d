#include "holonomy/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holonomy {

ALSampler::ALSampler(std::vector<Path> paths) : paths_(std::move(paths)) {
	if (paths_.empty()) throw std::invalid_argument("ALSampler: needs at least one path");
}

std::vector<Su2Element> ALSampler::sample(std::mt19937_64& rng) const {
	std::vector<Su2Element> out;
	out.reserve(paths_.size());
	for (std::size_t i = 0; i < paths_.size(); ++i) out.push_back(sample_haar(rng));
	return out;
}

TubeEstimate tube_probability(const TorusAxis& axis, double delta, std::int64_t n,
                              std::mt19937_64& rng) {
	if (!(delta > 0.0)) throw std::invalid_argument("tube_probability: delta must be positive");
	if (n <= 0) throw std::invalid_argument("tube_probability: sample count must be positive");
	std::int64_t hits = 0;
	for (std::int64_t i = 0; i < n; ++i) {
		if (torus_log(sample_haar(rng), axis).dist <= delta) ++hits;
	}
	TubeEstimate est;
	est.delta = delta;
	est.n = n;
	est.p = static_cast<double>(hits) / static_cast<double>(n);
	est.stderr_ = std::sqrt(est.p * (1.0 - est.p) / static_cast<double>(n));
	return est;
}

namespace {

Complex simpson(double a, double b, Complex fa, Complex fm, Complex fb) {
	return (fa + fm * 4.0 + fb) * ((b - a) / 6.0);
}

Complex adaptive_step(const std::function<Complex(double)>& f, double a, double b, Complex fa,
                      Complex fm, Complex fb, Complex whole, double tol, int depth) {
	if (depth <= 0) throw std::runtime_error("adaptive_simpson: depth limit reached");
	const double m = 0.5 * (a + b);
	const Complex fl = f(0.5 * (a + m));
	const Complex fr = f(0.5 * (m + b));
	const Complex left = simpson(a, m, fa, fl, fm);
	const Complex right = simpson(m, b, fm, fr, fb);
	if (std::abs(left + right - whole) <= 15.0 * tol)
		return left + right + (left + right - whole) * (1.0 / 15.0);
	return adaptive_step(f, a, m, fa, fl, fm, left, 0.5 * tol, depth - 1) +
	       adaptive_step(f, m, b, fm, fr, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, double tol,
                         int max_depth) {
	const Complex fa = f(a);
	const Complex fm = f(0.5 * (a + b));
	const Complex fb = f(b);
	const Complex whole = simpson(a, b, fa, fm, fb);
	return adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

RadonCombo::RadonCombo(double t_, Mu1 mu1_) : t(t_), mu1(mu1_) {
	if (!(t >= 0.0) || !(t <= 1.0)) throw std::invalid_argument("RadonCombo: t must lie in [0, 1]");
}

Complex integrate_mu1(const std::function<Complex(double)>& f, const Mu1& mu1, double tol) {
	return std::visit(
	    [&](const auto& m) -> Complex {
		    using T = std::decay_t<decltype(m)>;
		    if constexpr (std::is_same_v<T, GaussianMu1>) {
			    // 12 sigma of support covers the mass to ~1e-32.
			    const double norm_const = 1.0 / (m.sigma * std::sqrt(2.0 * std::numbers::pi));
			    const auto weighted = [&](double x) -> Complex {
				    const double u = (x - m.mean) / m.sigma;
				    return f(x) * (norm_const * std::exp(-0.5 * u * u));
			    };
			    return adaptive_simpson(weighted, m.mean - 12.0 * m.sigma,
			                            m.mean + 12.0 * m.sigma, tol);
		    } else {
			    if (!(m.b > m.a)) throw std::invalid_argument("UniformMu1: b must exceed a");
			    const Complex raw = adaptive_simpson(f, m.a, m.b, tol * (m.b - m.a));
			    return raw * (1.0 / (m.b - m.a));
		    }
	    },
	    mu1);
}

Complex integrate_cylfn(const CylFnOnR& f, const RadonCombo& combo, double tol) {
	const Complex real_part =
	    integrate_mu1([&f](double x) { return f.eval_real(x); }, combo.mu1, tol);
	const Complex bohr_part = f.ap.constant_coeff();
	return real_part * combo.t + bohr_part * (1.0 - combo.t);
}

namespace {

void check_weights(double t1, double t2) {
	if (!(t1 > 0.0) || !(t1 < 1.0) || !(t2 > 0.0) || !(t2 < 1.0))
		throw std::invalid_argument("l2 rescale: weights must lie in (0, 1)");
}

}  // namespace

L2Rescale l2_isometry(double t1, double t2) {
	check_weights(t1, t2);
	return {std::sqrt(t1 / t2), std::sqrt((1.0 - t1) / (1.0 - t2))};
}

L2Rescale l2_literal(double t1, double t2) {
	check_weights(t1, t2);
	return {t1 / t2, (1.0 - t1) / (1.0 - t2)};
}

double cylfn_l2_normsq(const CylFnOnR& f, double t, const Mu1& mu1, const L2Rescale& scale,
                       double tol) {
	if (!(t >= 0.0) || !(t <= 1.0)) throw std::invalid_argument("cylfn_l2_normsq: t must lie in [0, 1]");
	const Complex real_sq = integrate_mu1(
	    [&f](double x) -> Complex {
		    return {std::norm(f.eval_real(x)), 0.0};
	    },
	    mu1, tol);
	return t * scale.real_scale * scale.real_scale * real_sq.real() +
	       (1.0 - t) * scale.bohr_scale * scale.bohr_scale * f.ap.l2_normsq();
}

}  // namespace holonomy
