#include "holonomy/connections.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "holonomy/rng.hpp"

namespace holonomy {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

Su2Element holonomy_closed_segment(double c, const Segment& seg) {
	if (std::holds_alternative<LinearSeg>(seg)) {
		const auto& lin = std::get<LinearSeg>(seg);
		return exp_mu(-c * lin.len, lin.dir);
	}
	const auto& circ = std::get<CircularSeg>(seg);
	const Vec3 rhat = normalized(circ.radius_vec);
	const Su2Element frame = su2_from_rotation_columns(rhat, cross(circ.axis, rhat), circ.axis);
	const Su2Element h =
	    standard_circular_holonomy(c, circ.radius(), 2.0 * std::numbers::pi * circ.winding);
	return conjugate(frame, h);
}

}  // namespace

GaugeField GaugeField::isotropic(double c) {
	return {"isotropic", [c](const Vec3&, const Vec3& v) { return v * c; }};
}

GaugeField GaugeField::shear(double r) {
	return {"shear", [r](const Vec3& x, const Vec3& v) { return Vec3{0.0, -r * x.y * v.x, 0.0}; }};
}

Su2Element standard_circular_holonomy(double c, double r, double tau) {
	// Quaternion form of the standard-frame transport matrix
	//   [[e^{-i tau/2} (cos(b tau) + i sin(b tau)/(2b)), (c r / b) e^{-i tau/2} sin(b tau)],
	//    [-(c r / b) e^{+i tau/2} sin(b tau),             conj(top-left)]],
	// b = sqrt(c^2 r^2 + 1/4).  At c = 0 this collapses to the identity.
	const double b = std::sqrt(c * c * r * r + 0.25);
	const double cb = std::cos(b * tau);
	const double sb = std::sin(b * tau);
	const double ch = std::cos(tau / 2.0);
	const double sh = std::sin(tau / 2.0);
	const double k = c * r / b;
	Su2Element out{ch * cb + sh * sb / (2.0 * b), k * sb * sh, -k * sb * ch,
	               sh * cb - ch * sb / (2.0 * b)};
	out.renormalize();
	return out;
}

Su2Element holonomy_closed(const IsotropicConnection& conn, const Segment& seg) {
	return holonomy_closed_segment(conn.c, seg);
}

Su2Element holonomy_closed(const IsotropicConnection& conn, const Path& p) {
	Su2Element h = Su2Element::identity();
	for (const auto& item : p.items())
		h = holonomy_closed_segment(conn.c, canonical_segment(item)) * h;
	return h;
}

Su2Element holonomy_ode(const GaugeField& field, const Segment& seg, int steps) {
	if (steps < 16) throw std::invalid_argument("holonomy_ode: steps must be >= 16");
	// Commutator-free 4th-order Lie-group step (two Gauss nodes): each stage
	// exponentiates an su(2) average exactly, so the iterate never leaves the
	// group and stiff coefficients cost accuracy, not stability.
	constexpr double node1 = 0.5 - kSqrt3 / 6.0;
	constexpr double node2 = 0.5 + kSqrt3 / 6.0;
	constexpr double wa = 0.25 + kSqrt3 / 6.0;
	constexpr double wb = 0.25 - kSqrt3 / 6.0;

	const double total = seg_param_length(seg);
	const double h = total / steps;
	const auto f = [&](double t) -> Vec3 {
		return -field(seg_point(seg, t), seg_velocity(seg, t));
	};

	Su2Element s = Su2Element::identity();
	for (int k = 0; k < steps; ++k) {
		const double t0 = k * h;
		const Vec3 f1 = f(t0 + node1 * h);
		const Vec3 f2 = f(t0 + node2 * h);
		const Vec3 u1 = (wa * f1 + wb * f2) * h;
		const Vec3 u2 = (wb * f1 + wa * f2) * h;
		s = exp_mu_vec(u2) * (exp_mu_vec(u1) * s);
	}
	return s;
}

Su2Element holonomy_ode(const GaugeField& field, const Path& p, int steps) {
	Su2Element h = Su2Element::identity();
	for (const auto& item : p.items())
		h = holonomy_ode(field, canonical_segment(item), steps) * h;
	return h;
}

Su2Element pullback_holonomy(const EuclideanMotion& g, const Path& p,
                             const std::function<Su2Element(const Path&)>& h) {
	return conjugate(g.sigma, h(act(g.inverse(), p)));
}

double discontinuity_gap(double lambda, double r, int steps) {
	const GaugeField field = GaugeField::shear(r);
	const Path gamma0 = Path::single(LinearSeg(Vec3{}, e1(), 1.0));
	const EuclideanMotion g{Vec3{0.0, -lambda, 0.0}, Su2Element::identity()};
	const auto evaluate = [&](const Path& p) { return holonomy_ode(field, p, steps); };
	const Complex before = evaluate(gamma0).matrix().a11;
	const Complex after = pullback_holonomy(g, gamma0, evaluate).matrix().a11;
	return std::abs(before - after);
}

namespace {

// omega_(x,s)(v, Sigma) = Ad(s^-1) mu(A(x, v)) + s^-1 Sigma with Sigma an
// ambient matrix tangent at s.
Mat2c bundle_form(const GaugeField& field, const Vec3& x, const Su2Element& s, const Vec3& v,
                  const Mat2c& sigma_tangent) {
	const Mat2c sm = s.matrix();
	const Mat2c si = sm.adjoint();
	return si * mu_matrix(field(x, v)) * sm + si * sigma_tangent;
}

}  // namespace

double verify_pullback_invariance(const GaugeField& field, const EuclideanMotion& g, int samples,
                              std::mt19937_64& rng, double fd_step) {
	double worst = 0.0;
	for (int i = 0; i < samples; ++i) {
		const Vec3 x = gaussian_vec3(rng, 1.5);
		const Su2Element s = random_su2(rng);
		const Vec3 v = gaussian_vec3(rng);
		const Vec3 yv = gaussian_vec3(rng);

		// Curve through (x, s) with tangent (v, s mu(yv)), evaluated at +-h.
		const auto curve = [&](double t) {
			return std::pair<Vec3, Su2Element>{x + v * t, s * exp_mu_vec(yv * t)};
		};
		const auto [xp, sp] = curve(fd_step);
		const auto [xm, sm] = curve(-fd_step);

		// Tangent at (x, s) by central differences.
		const Vec3 v0 = (xp - xm) * (1.0 / (2.0 * fd_step));
		const Mat2c t0 = (sp.matrix() - sm.matrix()) * Complex{1.0 / (2.0 * fd_step), 0.0};
		const Mat2c before = bundle_form(field, x, s, v0, t0);

		// Same tangent pushed through the lifted action (x, s) |-> (g x, sigma s).
		const Vec3 gx = g.apply(x);
		const Su2Element gs = g.sigma * s;
		const Vec3 v1 = (g.apply(xp) - g.apply(xm)) * (1.0 / (2.0 * fd_step));
		const Mat2c t1 = ((g.sigma * sp).matrix() - (g.sigma * sm).matrix()) *
		                 Complex{1.0 / (2.0 * fd_step), 0.0};
		const Mat2c after = bundle_form(field, gx, gs, v1, t1);

		worst = std::max(worst, frobenius_distance(before, after));
	}
	return worst;
}

double verify_pullback_invariance(double c, const EuclideanMotion& g, int samples,
                              std::mt19937_64& rng, double fd_step) {
	return verify_pullback_invariance(GaugeField::isotropic(c), g, samples, rng, fd_step);
}

}  // namespace holonomy
