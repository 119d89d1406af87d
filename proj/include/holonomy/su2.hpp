#pragma once

// SU(2) as unit quaternions, together with the fixed basis dictionary used
// everywhere else in this library.
//
// The real Lie algebra su(2) is identified with R^3 through the basis
//
//   t1 = [[0, -i], [-i, 0]],  t2 = [[0, -1], [1, 0]],  t3 = [[-i, 0], [0, i]],
//
// so mu(a) = a.x*t1 + a.y*t2 + a.z*t3 and [mu(a), mu(b)] = mu(2 a x b).
// A unit quaternion (w, x, y, z) corresponds to the group element
//
//   w*1 + x*t1 + y*t2 + z*t3 = [[w - i z, -y - i x], [y - i x, w + i z]].
//
// Quaternion multiplication matches matrix multiplication under this map and
// the quaternion conjugate is the matrix adjoint (= inverse).  This dictionary
// is fixed here once, pinned by unit tests against the explicit matrices, and
// never re-derived anywhere else.

#include <complex>
#include <stdexcept>

#include "holonomy/vec3.hpp"

namespace holonomy {

using Complex = std::complex<double>;

// Dense 2x2 complex matrix, the "matrix view" of group and algebra elements.
struct Mat2c {
	Complex a11{0.0, 0.0}, a12{0.0, 0.0};
	Complex a21{0.0, 0.0}, a22{0.0, 0.0};

	static Mat2c identity() { return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}; }

	Mat2c operator*(const Mat2c& o) const {
		return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
		        a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
	}
	Mat2c operator+(const Mat2c& o) const {
		return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
	}
	Mat2c operator-(const Mat2c& o) const {
		return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
	}
	Mat2c operator*(Complex s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

	Mat2c adjoint() const {
		return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
	}
	Complex trace() const { return a11 + a22; }
	Complex det() const { return a11 * a22 - a12 * a21; }

	double frobenius() const {
		return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
	}
};

inline double frobenius_distance(const Mat2c& a, const Mat2c& b) { return (a - b).frobenius(); }

// Algebra basis matrices (see the dictionary above).
Mat2c tau1();
Mat2c tau2();
Mat2c tau3();

// mu: R^3 -> su(2), the basis identification.
Mat2c mu_matrix(const Vec3& a);

// Group element, stored as a unit quaternion.
struct Su2Element {
	double w = 1.0;
	double x = 0.0;
	double y = 0.0;
	double z = 0.0;

	static Su2Element identity() { return {}; }

	// Quaternion product, renormalized so long chains stay on the unit sphere.
	Su2Element operator*(const Su2Element& o) const {
		Su2Element r{w * o.w - x * o.x - y * o.y - z * o.z,
		             w * o.x + x * o.w + y * o.z - z * o.y,
		             w * o.y - x * o.z + y * o.w + z * o.x,
		             w * o.z + x * o.y - y * o.x + z * o.w};
		r.renormalize();
		return r;
	}

	Su2Element inverse() const { return {w, -x, -y, -z}; }
	Su2Element operator-() const { return {-w, -x, -y, -z}; }

	Vec3 vector_part() const { return {x, y, z}; }
	double quat_norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

	void renormalize() {
		const double n = quat_norm();
		if (n < 1e-14) throw std::domain_error("Su2Element: degenerate quaternion");
		w /= n;
		x /= n;
		y /= n;
		z /= n;
	}

	Mat2c matrix() const {
		return {{w, -z}, {-y, -x}, {y, -x}, {w, z}};
	}
};

inline double quat_dot(const Su2Element& a, const Su2Element& b) {
	return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double frobenius_distance(const Su2Element& a, const Su2Element& b) {
	return frobenius_distance(a.matrix(), b.matrix());
}

inline bool approx_equal(const Su2Element& a, const Su2Element& b, double tol = kGeomTol) {
	return frobenius_distance(a, b) <= tol;
}

// exp(beta * mu(n)) = cos(beta) 1 + sin(beta) mu(n) for a unit axis n.
// Throws std::invalid_argument when n is not unit length.
Su2Element exp_mu(double beta, const Vec3& n);

// Rotation-angle form: exp_su2(alpha, n) = exp((alpha/2) mu(n)), so alpha is
// the angle of the induced SO(3) rotation about n.
Su2Element exp_su2(double alpha, const Vec3& n);

// exp(mu(u)) for an arbitrary (not necessarily unit) u.
Su2Element exp_mu_vec(const Vec3& u);

// covering_map(sigma) is the SO(3) rotation with mu(covering_map(sigma, a)) =
// sigma mu(a) sigma^-1.  Orientation: exp_su2(alpha, n) rotates by +alpha
// about n with the right-hand rule (pinned by tests).
Vec3 covering_map(const Su2Element& sigma, const Vec3& a);

// Group conjugation sigma * s * sigma^-1.
Su2Element conjugate(const Su2Element& sigma, const Su2Element& s);

// Unit axis wrapper; the one-parameter subgroups {exp_mu(t, n)} are the
// maximal tori of SU(2).
struct TorusAxis {
	Vec3 n;
	explicit TorusAxis(const Vec3& axis) : n(axis) {
		if (!is_unit(n, kGeomTol)) throw std::invalid_argument("TorusAxis: axis must be unit");
	}
};

struct TorusProjection {
	double t = 0.0;    // parameter of the closest torus element exp_mu(t, n)
	double dist = 0.0; // geodesic (great-circle) distance on the unit quaternions
};

// Closest point on the torus {exp_mu(t, n)} to s, with geodesic distance.
// At the antipodal fibre (w = <v,n> = 0) the minimizer is not unique; t = 0 is
// returned.  For s = +-identity the parameter lands in {0, pi}.
TorusProjection torus_log(const Su2Element& s, const TorusAxis& axis);

// Inverse of the matrix view; throws std::invalid_argument unless m is in
// SU(2) within tol (unitary, det 1).
Su2Element su2_from_matrix(const Mat2c& m, double tol = 1e-9);

// Quaternion lift of the rotation with the given orthonormal, positively
// oriented column frame (covering_map(result) maps e1,e2,e3 to the columns).
// The lift is fixed up to global sign; either choice conjugates identically.
Su2Element su2_from_rotation_columns(const Vec3& col1, const Vec3& col2, const Vec3& col3);

}  // namespace holonomy
