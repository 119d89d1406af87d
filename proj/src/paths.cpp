#include "holonomy/paths.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holonomy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Rotate a about the unit axis n by angle t (Rodrigues).
Vec3 rotate_about(const Vec3& n, double t, const Vec3& a) {
	const double c = std::cos(t);
	const double s = std::sin(t);
	return a * c + cross(n, a) * s + n * (dot(n, a) * (1.0 - c));
}

}  // namespace

LinearSeg::LinearSeg(const Vec3& start_, const Vec3& dir_, double len_)
    : start(start_), dir(dir_), len(len_) {
	if (!is_unit(dir, kGeomTol)) throw std::invalid_argument("LinearSeg: dir must be unit");
	if (!(len > 0.0)) throw std::invalid_argument("LinearSeg: len must be positive");
}

CircularSeg::CircularSeg(const Vec3& center_, const Vec3& axis_, const Vec3& radius_vec_,
                         double winding_)
    : center(center_), axis(axis_), radius_vec(radius_vec_), winding(winding_) {
	if (!is_unit(axis, kGeomTol)) throw std::invalid_argument("CircularSeg: axis must be unit");
	if (norm(radius_vec) <= kGeomTol)
		throw std::invalid_argument("CircularSeg: radius_vec must be nonzero");
	if (std::abs(dot(axis, radius_vec)) > kGeomTol * (1.0 + norm(radius_vec)))
		throw std::invalid_argument("CircularSeg: radius_vec must be orthogonal to axis");
	if (!(winding > 0.0) || !(winding < 1.0))
		throw std::invalid_argument("CircularSeg: winding must lie in (0, 1)");
}

Vec3 seg_start(const Segment& s) {
	return std::visit(
	    [](const auto& seg) -> Vec3 {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) return seg.start;
		    else return seg.center + seg.radius_vec;
	    },
	    s);
}

Vec3 seg_end(const Segment& s) { return seg_point(s, seg_param_length(s)); }

double seg_param_length(const Segment& s) {
	return std::visit(
	    [](const auto& seg) -> double {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) return seg.len;
		    else return kTwoPi * seg.winding;
	    },
	    s);
}

Vec3 seg_point(const Segment& s, double t) {
	return std::visit(
	    [t](const auto& seg) -> Vec3 {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) {
			    return seg.start + seg.dir * t;
		    } else {
			    return seg.center + seg.radius_vec * std::cos(t) +
			           cross(seg.axis, seg.radius_vec) * std::sin(t);
		    }
	    },
	    s);
}

Vec3 seg_velocity(const Segment& s, double t) {
	return std::visit(
	    [t](const auto& seg) -> Vec3 {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) {
			    return seg.dir;
		    } else {
			    return seg.radius_vec * (-std::sin(t)) +
			           cross(seg.axis, seg.radius_vec) * std::cos(t);
		    }
	    },
	    s);
}

Segment reverse_segment(const Segment& s) {
	return std::visit(
	    [](const auto& seg) -> Segment {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) {
			    return LinearSeg(seg.start + seg.dir * seg.len, -seg.dir, seg.len);
		    } else {
			    // Flipping the axis and starting from the original endpoint
			    // retraces the same arc backwards:
			    //   cos(T - t) r + sin(T - t) (n x r)
			    //     = cos(t) r' + sin(t) ((-n) x r'),  r' = end - center.
			    const Vec3 end = seg_point(Segment{seg}, kTwoPi * seg.winding) - seg.center;
			    return CircularSeg(seg.center, -seg.axis, end, seg.winding);
		    }
	    },
	    s);
}

Segment canonical_segment(const PathItem& item) {
	return item.reversed ? reverse_segment(item.seg) : item.seg;
}

Path::Path(std::vector<PathItem> items) : items_(std::move(items)) {
	if (items_.empty()) throw std::invalid_argument("Path: needs at least one segment");
	for (std::size_t i = 0; i + 1 < items_.size(); ++i) {
		const Vec3 a = seg_end(canonical_segment(items_[i]));
		const Vec3 b = seg_start(canonical_segment(items_[i + 1]));
		if (!approx_equal(a, b, kGeomTol))
			throw std::invalid_argument("Path: consecutive segments do not connect");
	}
}

Path Path::single(const Segment& seg) { return Path({PathItem{seg, false}}); }

Vec3 Path::start() const { return seg_start(canonical_segment(items_.front())); }
Vec3 Path::end() const { return seg_end(canonical_segment(items_.back())); }

double Path::param_length() const {
	double total = 0.0;
	for (const auto& item : items_) total += seg_param_length(item.seg);
	return total;
}

Vec3 point_at(const Path& p, double s) {
	if (s < -kGeomTol || s > p.param_length() + kGeomTol)
		throw std::out_of_range("point_at: parameter outside path domain");
	double rem = std::max(s, 0.0);
	for (const auto& item : p.items()) {
		const Segment seg = canonical_segment(item);
		const double plen = seg_param_length(seg);
		if (rem <= plen) return seg_point(seg, rem);
		rem -= plen;
	}
	return p.end();
}

Path reverse(const Path& p) {
	std::vector<PathItem> items(p.items().rbegin(), p.items().rend());
	for (auto& item : items) item.reversed = !item.reversed;
	return Path(std::move(items));
}

std::pair<Path, Path> split(const Path& p, double s) {
	const double total = p.param_length();
	if (s <= kGeomTol || s >= total - kGeomTol)
		throw std::invalid_argument("split: parameter must be interior");

	std::vector<PathItem> head, tail;
	double acc = 0.0;
	bool done = false;
	for (const auto& item : p.items()) {
		if (done) {
			tail.push_back(item);
			continue;
		}
		const Segment seg = canonical_segment(item);
		const double plen = seg_param_length(seg);
		const double local = s - acc;
		if (local <= kGeomTol) {
			// Falls on the joint before this segment.
			tail.push_back(item);
			continue;
		}
		if (local >= plen - kGeomTol) {
			head.push_back(item);
			acc += plen;
			if (std::abs(local - plen) <= kGeomTol) done = true;
			continue;
		}
		done = true;
		std::visit(
		    [&](const auto& cseg) {
			    using T = std::decay_t<decltype(cseg)>;
			    if constexpr (std::is_same_v<T, LinearSeg>) {
				    head.push_back({Segment{LinearSeg(cseg.start, cseg.dir, local)}, false});
				    tail.push_back({Segment{LinearSeg(cseg.start + cseg.dir * local, cseg.dir,
				                                      cseg.len - local)},
				                    false});
			    } else {
				    const double m1 = local / kTwoPi;
				    const Vec3 r2 = rotate_about(cseg.axis, local, cseg.radius_vec);
				    head.push_back(
				        {Segment{CircularSeg(cseg.center, cseg.axis, cseg.radius_vec, m1)},
				         false});
				    tail.push_back({Segment{CircularSeg(cseg.center, cseg.axis, r2,
				                                        cseg.winding - m1)},
				                    false});
			    }
		    },
		    seg);
	}
	if (head.empty() || tail.empty()) throw std::invalid_argument("split: parameter must be interior");
	return {Path(std::move(head)), Path(std::move(tail))};
}

Segment act(const EuclideanMotion& g, const Segment& s) {
	return std::visit(
	    [&g](const auto& seg) -> Segment {
		    using T = std::decay_t<decltype(seg)>;
		    if constexpr (std::is_same_v<T, LinearSeg>) {
			    return LinearSeg(g.apply(seg.start), normalized(covering_map(g.sigma, seg.dir)),
			                     seg.len);
		    } else {
			    return CircularSeg(g.apply(seg.center),
			                       normalized(covering_map(g.sigma, seg.axis)),
			                       covering_map(g.sigma, seg.radius_vec), seg.winding);
		    }
	    },
	    s);
}

Path act(const EuclideanMotion& g, const Path& p) {
	std::vector<PathItem> items;
	items.reserve(p.size());
	for (const auto& item : p.items()) items.push_back({act(g, item.seg), item.reversed});
	return Path(std::move(items));
}

namespace {

bool try_merge(const Segment& a, const Segment& b, Segment* out) {
	if (a.index() != b.index()) return false;
	if (std::holds_alternative<LinearSeg>(a)) {
		const auto& la = std::get<LinearSeg>(a);
		const auto& lb = std::get<LinearSeg>(b);
		if (!approx_equal(la.dir, lb.dir, kGeomTol)) return false;
		if (!approx_equal(la.start + la.dir * la.len, lb.start, kGeomTol)) return false;
		*out = LinearSeg(la.start, la.dir, la.len + lb.len);
		return true;
	}
	const auto& ca = std::get<CircularSeg>(a);
	const auto& cb = std::get<CircularSeg>(b);
	if (!approx_equal(ca.center, cb.center, kGeomTol)) return false;
	if (!approx_equal(ca.axis, cb.axis, kGeomTol)) return false;
	if (std::abs(ca.radius() - cb.radius()) > kGeomTol) return false;
	if (ca.winding + cb.winding >= 1.0) return false;  // windings stay below a full turn
	const Vec3 cont = rotate_about(ca.axis, kTwoPi * ca.winding, ca.radius_vec);
	if (!approx_equal(cont, cb.radius_vec, kGeomTol)) return false;
	*out = CircularSeg(ca.center, ca.axis, ca.radius_vec, ca.winding + cb.winding);
	return true;
}

}  // namespace

std::vector<Segment> canonicalize(const Path& p) {
	std::vector<Segment> out;
	for (const auto& item : p.items()) {
		Segment seg = canonical_segment(item);
		while (!out.empty()) {
			Segment merged = seg;
			if (!try_merge(out.back(), seg, &merged)) break;
			out.pop_back();
			seg = merged;
		}
		out.push_back(seg);
	}
	return out;
}

bool equivalent(const Path& a, const Path& b, double tol) {
	const auto ca = canonicalize(a);
	const auto cb = canonicalize(b);
	if (ca.size() != cb.size()) return false;
	for (std::size_t i = 0; i < ca.size(); ++i) {
		if (ca[i].index() != cb[i].index()) return false;
		if (std::holds_alternative<LinearSeg>(ca[i])) {
			const auto& la = std::get<LinearSeg>(ca[i]);
			const auto& lb = std::get<LinearSeg>(cb[i]);
			if (!approx_equal(la.start, lb.start, tol) || !approx_equal(la.dir, lb.dir, tol) ||
			    std::abs(la.len - lb.len) > tol)
				return false;
		} else {
			const auto& va = std::get<CircularSeg>(ca[i]);
			const auto& vb = std::get<CircularSeg>(cb[i]);
			if (!approx_equal(va.center, vb.center, tol) || !approx_equal(va.axis, vb.axis, tol) ||
			    !approx_equal(va.radius_vec, vb.radius_vec, tol) ||
			    std::abs(va.winding - vb.winding) > tol)
				return false;
		}
	}
	return true;
}

}  // namespace holonomy
