#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace holonomy {

// Shared geometric tolerance: endpoint matching, unit-vector checks after
// rotation, canonical-form comparison.
inline constexpr double kGeomTol = 1e-9;

struct Vec3 {
	double x = 0.0;
	double y = 0.0;
	double z = 0.0;

	Vec3() = default;
	Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

	Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
	Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
	Vec3 operator-() const { return {-x, -y, -z}; }
	Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
	Vec3& operator+=(const Vec3& o) {
		x += o.x;
		y += o.y;
		z += o.z;
		return *this;
	}
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
	return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalized(const Vec3& v) {
	const double n = norm(v);
	if (n < 1e-14) throw std::invalid_argument("normalized: zero vector");
	return v * (1.0 / n);
}

inline bool approx_equal(const Vec3& a, const Vec3& b, double tol = kGeomTol) {
	return distance(a, b) <= tol;
}

inline bool is_unit(const Vec3& v, double tol = 1e-12) { return std::abs(norm(v) - 1.0) <= tol; }

inline Vec3 e1() { return {1.0, 0.0, 0.0}; }
inline Vec3 e2() { return {0.0, 1.0, 0.0}; }
inline Vec3 e3() { return {0.0, 0.0, 1.0}; }

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
	return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

}  // namespace holonomy
