#pragma once

// Piecewise linear/circular curves in R^3 and the Euclidean group acting on
// them.
//
// Parameterization conventions:
//  * linear segments run at unit speed, parameter in [0, len];
//  * a circular segment with center c, unit axis n, radius vector r (nonzero,
//    orthogonal to n) and winding m in (0, 1) is
//        t |-> c + cos(t) r + sin(t) (n x r),  t in [0, 2 pi m],
//    i.e. it starts at c + r and turns counterclockwise about n.  Full circles
//    are not single segments; build them as composites.
//
// A Path is a list of (segment, reversed) items whose endpoints match within
// kGeomTol.  Equivalence of paths is equality of canonical parameterizations
// segment-by-segment after joint normalization (reversed items rewritten as
// forward segments, adjacent continuations merged).

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "holonomy/su2.hpp"
#include "holonomy/vec3.hpp"

namespace holonomy {

struct LinearSeg {
	Vec3 start;
	Vec3 dir;  // unit
	double len = 0.0;

	LinearSeg(const Vec3& start_, const Vec3& dir_, double len_);
};

struct CircularSeg {
	Vec3 center;
	Vec3 axis;        // unit
	Vec3 radius_vec;  // nonzero, orthogonal to axis
	double winding = 0.0;  // m in (0, 1); parameter length is 2 pi m

	CircularSeg(const Vec3& center_, const Vec3& axis_, const Vec3& radius_vec_, double winding_);

	double radius() const { return norm(radius_vec); }
};

using Segment = std::variant<LinearSeg, CircularSeg>;

Vec3 seg_start(const Segment& s);
Vec3 seg_end(const Segment& s);
double seg_param_length(const Segment& s);
Vec3 seg_point(const Segment& s, double t);     // t in [0, param length]
Vec3 seg_velocity(const Segment& s, double t);  // d/dt of seg_point

// The same curve traversed backwards, written as a forward segment.
Segment reverse_segment(const Segment& s);

struct PathItem {
	Segment seg;
	bool reversed = false;
};

// Forward form of an item: the segment itself, or its reversal.
Segment canonical_segment(const PathItem& item);

class Path {
 public:
	explicit Path(std::vector<PathItem> items);
	static Path single(const Segment& seg);
	static Path single(const LinearSeg& seg) { return single(Segment{seg}); }
	static Path single(const CircularSeg& seg) { return single(Segment{seg}); }

	const std::vector<PathItem>& items() const { return items_; }
	std::size_t size() const { return items_.size(); }

	Vec3 start() const;
	Vec3 end() const;
	double param_length() const;

 private:
	std::vector<PathItem> items_;
};

// Point of the path at global parameter s in [0, param_length]; out of range
// throws std::out_of_range.
Vec3 point_at(const Path& p, double s);

// The reversed path (inverse in the path groupoid).
Path reverse(const Path& p);

// Split at interior parameter s.  Values within kGeomTol of a joint snap to
// the joint; s within kGeomTol of 0 or the total length is an error.
std::pair<Path, Path> split(const Path& p, double s);

// Rigid motion (v, sigma): x |-> v + covering_map(sigma, x).
struct EuclideanMotion {
	Vec3 v;
	Su2Element sigma;

	static EuclideanMotion identity() { return {Vec3{}, Su2Element::identity()}; }

	Vec3 apply(const Vec3& x) const { return v + covering_map(sigma, x); }

	EuclideanMotion operator*(const EuclideanMotion& o) const {
		return {v + covering_map(sigma, o.v), sigma * o.sigma};
	}
	EuclideanMotion inverse() const {
		const Su2Element si = sigma.inverse();
		return {-covering_map(si, v), si};
	}
};

Segment act(const EuclideanMotion& g, const Segment& s);
Path act(const EuclideanMotion& g, const Path& p);

// Canonical forward segment list with adjacent continuations merged.
std::vector<Segment> canonicalize(const Path& p);

// True iff the canonical forms agree segment-by-segment within tol.
bool equivalent(const Path& a, const Path& b, double tol = kGeomTol);

}  // namespace holonomy
