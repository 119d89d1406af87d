#include "holonomy/su2.hpp"

#include <algorithm>
#include <cmath>

namespace holonomy {

Mat2c tau1() { return {{0.0, 0.0}, {0.0, -1.0}, {0.0, -1.0}, {0.0, 0.0}}; }
Mat2c tau2() { return {{0.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}; }
Mat2c tau3() { return {{0.0, -1.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}}; }

Mat2c mu_matrix(const Vec3& a) {
	return {{0.0, -a.z}, {-a.y, -a.x}, {a.y, -a.x}, {0.0, a.z}};
}

Su2Element exp_mu(double beta, const Vec3& n) {
	if (!is_unit(n, kGeomTol)) throw std::invalid_argument("exp_mu: axis must be unit length");
	const double c = std::cos(beta);
	const double s = std::sin(beta);
	return {c, s * n.x, s * n.y, s * n.z};
}

Su2Element exp_su2(double alpha, const Vec3& n) { return exp_mu(alpha / 2.0, n); }

Su2Element exp_mu_vec(const Vec3& u) {
	const double r = norm(u);
	if (r < 1e-300) return Su2Element::identity();
	const double c = std::cos(r);
	const double s = std::sin(r) / r;
	return {c, s * u.x, s * u.y, s * u.z};
}

Vec3 covering_map(const Su2Element& sigma, const Vec3& a) {
	// v' = v + 2 w (q x v) + 2 q x (q x v), the rotation of the unit
	// quaternion (w, q) acting on v.
	const Vec3 q = sigma.vector_part();
	const Vec3 t = cross(q, a) * 2.0;
	return a + sigma.w * t + cross(q, t);
}

Su2Element conjugate(const Su2Element& sigma, const Su2Element& s) {
	return sigma * s * sigma.inverse();
}

TorusProjection torus_log(const Su2Element& s, const TorusAxis& axis) {
	// <s, exp_mu(t, n)> = w cos t + <v, n> sin t is maximized at
	// t = atan2(<v, n>, w) with maximum R = sqrt(w^2 + <v, n>^2).  The
	// complementary leg sin(dist) is the off-axis part of the vector
	// component, so atan2 keeps full precision near the torus where
	// acos(R) would bottom out at sqrt(eps).
	const Vec3 v = s.vector_part();
	const double p = dot(v, axis.n);
	const double r = std::sqrt(s.w * s.w + p * p);
	const double off = norm(v - axis.n * p);
	TorusProjection out;
	out.t = (r < 1e-14) ? 0.0 : std::atan2(p, s.w);
	out.dist = std::atan2(off, r);
	return out;
}

Su2Element su2_from_matrix(const Mat2c& m, double tol) {
	const Mat2c gram = m * m.adjoint();
	if (frobenius_distance(gram, Mat2c::identity()) > tol ||
	    std::abs(m.det() - Complex{1.0, 0.0}) > tol) {
		throw std::invalid_argument("su2_from_matrix: matrix is not in SU(2)");
	}
	// m = [[w - iz, -y - ix], [y - ix, w + iz]]
	Su2Element s{m.a11.real(), -m.a12.imag(), m.a21.real(), -m.a11.imag()};
	s.renormalize();
	return s;
}

Su2Element su2_from_rotation_columns(const Vec3& col1, const Vec3& col2, const Vec3& col3) {
	for (const Vec3* c : {&col1, &col2, &col3}) {
		if (!is_unit(*c, kGeomTol))
			throw std::invalid_argument("su2_from_rotation_columns: columns must be unit");
	}
	if (std::abs(dot(col1, col2)) > kGeomTol || std::abs(dot(col1, col3)) > kGeomTol ||
	    std::abs(dot(col2, col3)) > kGeomTol || distance(cross(col1, col2), col3) > 1e-6) {
		throw std::invalid_argument("su2_from_rotation_columns: frame is not positively "
		                            "oriented orthonormal");
	}
	// Shepperd's method on R = [col1 | col2 | col3].
	const double r11 = col1.x, r21 = col1.y, r31 = col1.z;
	const double r12 = col2.x, r22 = col2.y, r32 = col2.z;
	const double r13 = col3.x, r23 = col3.y, r33 = col3.z;
	const double tr = r11 + r22 + r33;
	Su2Element q;
	if (tr >= r11 && tr >= r22 && tr >= r33) {
		const double s = std::sqrt(1.0 + tr) * 2.0;
		q = {0.25 * s, (r32 - r23) / s, (r13 - r31) / s, (r21 - r12) / s};
	} else if (r11 >= r22 && r11 >= r33) {
		const double s = std::sqrt(1.0 + r11 - r22 - r33) * 2.0;
		q = {(r32 - r23) / s, 0.25 * s, (r12 + r21) / s, (r13 + r31) / s};
	} else if (r22 >= r33) {
		const double s = std::sqrt(1.0 + r22 - r11 - r33) * 2.0;
		q = {(r13 - r31) / s, (r12 + r21) / s, 0.25 * s, (r23 + r32) / s};
	} else {
		const double s = std::sqrt(1.0 + r33 - r11 - r22) * 2.0;
		q = {(r21 - r12) / s, (r13 + r31) / s, (r23 + r32) / s, 0.25 * s};
	}
	q.renormalize();
	return q;
}

}  // namespace holonomy
