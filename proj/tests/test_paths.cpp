#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "holonomy/json_io.hpp"
#include "holonomy/paths.hpp"
#include "holonomy/rng.hpp"

using namespace holonomy;

namespace {

constexpr double kPi = std::numbers::pi;

Segment random_segment(std::mt19937_64& rng) {
	if (rng() % 2 == 0)
		return LinearSeg(gaussian_vec3(rng), random_unit_vec3(rng), uniform_in(rng, 0.3, 2.5));
	const Vec3 axis = random_unit_vec3(rng);
	Vec3 r = cross(axis, random_unit_vec3(rng));
	while (norm(r) < 0.1) r = cross(axis, random_unit_vec3(rng));
	return CircularSeg(gaussian_vec3(rng), axis, normalized(r) * uniform_in(rng, 0.3, 2.0),
	                   uniform_in(rng, 0.1, 0.9));
}

// Composite path: the given segment followed by a linear leg from its end.
Path composite_from(const Segment& seg, std::mt19937_64& rng) {
	const LinearSeg tail(seg_end(seg), random_unit_vec3(rng), uniform_in(rng, 0.3, 2.0));
	return Path({{seg, false}, {Segment{tail}, false}});
}

EuclideanMotion random_motion(std::mt19937_64& rng) {
	return {gaussian_vec3(rng, 2.0), random_su2(rng)};
}

}  // namespace

TEST_SUITE("paths") {

TEST_CASE("constructor validation") {
	CHECK_THROWS_AS(LinearSeg(Vec3{0, 0, 0}, Vec3{1, 1, 0}, 1.0), std::invalid_argument);
	CHECK_THROWS_AS(LinearSeg(Vec3{0, 0, 0}, e1(), 0.0), std::invalid_argument);
	CHECK_THROWS_AS(LinearSeg(Vec3{0, 0, 0}, e1(), -1.0), std::invalid_argument);
	CHECK_THROWS_AS(CircularSeg(Vec3{0, 0, 0}, Vec3{0, 0, 2}, e1(), 0.5), std::invalid_argument);
	CHECK_THROWS_AS(CircularSeg(Vec3{0, 0, 0}, e3(), e3(), 0.5), std::invalid_argument);
	CHECK_THROWS_AS(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.0), std::invalid_argument);
	CHECK_THROWS_AS(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 1.0), std::invalid_argument);
	CHECK_NOTHROW(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.999));

	// Disconnected composite rejected.
	const LinearSeg a(Vec3{0, 0, 0}, e1(), 1.0);
	const LinearSeg b(Vec3{5, 0, 0}, e2(), 1.0);
	CHECK_THROWS_AS(Path({{Segment{a}, false}, {Segment{b}, false}}), std::invalid_argument);
}

TEST_CASE("point_at endpoints and curve shape") {
	const LinearSeg lin(Vec3{1, 2, 3}, e2(), 2.0);
	CHECK(approx_equal(seg_point(Segment{lin}, 0.0), Vec3{1, 2, 3}));
	CHECK(approx_equal(seg_point(Segment{lin}, 2.0), Vec3{1, 4, 3}));

	// Quarter turn about e3 starting at center + r e1.
	const CircularSeg circ(Vec3{1, 0, 0}, e3(), Vec3{2, 0, 0}, 0.25);
	CHECK(approx_equal(seg_point(Segment{circ}, 0.0), Vec3{3, 0, 0}));
	CHECK(approx_equal(seg_point(Segment{circ}, kPi / 2.0), Vec3{1, 2, 0}));
	CHECK(seg_param_length(Segment{circ}) == doctest::Approx(kPi / 2.0));

	// Velocity matches a central finite difference.
	auto rng = make_rng(21, 1);
	for (int i = 0; i < 20; ++i) {
		const Segment seg = random_segment(rng);
		const double len = seg_param_length(seg);
		const double t = uniform_in(rng, 0.05, 0.95) * len;
		const double h = 1e-6;
		const Vec3 fd = (seg_point(seg, t + h) - seg_point(seg, t - h)) * (1.0 / (2.0 * h));
		CHECK(approx_equal(seg_velocity(seg, t), fd, 1e-7));
	}

	const Path p = Path::single(lin);
	CHECK_THROWS_AS(point_at(p, -0.5), std::out_of_range);
	CHECK_THROWS_AS(point_at(p, 2.5), std::out_of_range);
}

TEST_CASE("reverse closed forms") {
	const Path lin = Path::single(LinearSeg(Vec3{0, 0, 0}, e1(), 2.0));
	const Path lin_rev = reverse(lin);
	CHECK(equivalent(lin_rev, Path::single(LinearSeg(Vec3{2, 0, 0}, -e1(), 2.0))));

	const Path circ = Path::single(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.25));
	const Path circ_rev = reverse(circ);
	CHECK(equivalent(circ_rev, Path::single(CircularSeg(Vec3{0, 0, 0}, -e3(), e2(), 0.25))));
}

TEST_CASE("reverse against the parameter-flip oracle") {
	auto rng = make_rng(21, 2);
	for (int i = 0; i < 20; ++i) {
		const Path p = composite_from(random_segment(rng), rng);
		const Path r = reverse(p);
		const double len = p.param_length();
		CHECK(r.param_length() == doctest::Approx(len));
		CHECK(approx_equal(r.start(), p.end()));
		CHECK(approx_equal(r.end(), p.start()));
		for (int k = 0; k <= 100; ++k) {
			const double s = len * k / 100;
			CHECK(approx_equal(point_at(r, s), point_at(p, len - s), 1e-9));
		}
		CHECK(equivalent(reverse(r), p));
	}
}

TEST_CASE("split closed forms") {
	const Path lin = Path::single(LinearSeg(Vec3{1, 0, 0}, e2(), 3.0));
	const auto [a, b] = split(lin, 1.5);
	CHECK(equivalent(a, Path::single(LinearSeg(Vec3{1, 0, 0}, e2(), 1.5))));
	CHECK(equivalent(b, Path::single(LinearSeg(Vec3{1, 1.5, 0}, e2(), 1.5))));

	// Half circle split at the quarter point: second radius vector is e2.
	const Path circ = Path::single(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.5));
	const auto [c, d] = split(circ, kPi / 2.0);
	CHECK(equivalent(c, Path::single(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.25))));
	CHECK(equivalent(d, Path::single(CircularSeg(Vec3{0, 0, 0}, e3(), e2(), 0.25))));

	CHECK_THROWS_AS(split(lin, 0.0), std::invalid_argument);
	CHECK_THROWS_AS(split(lin, 3.0), std::invalid_argument);
}

TEST_CASE("split against the grid oracle and joint snapping") {
	auto rng = make_rng(21, 3);
	for (int i = 0; i < 20; ++i) {
		const Path p = composite_from(random_segment(rng), rng);
		const double len = p.param_length();
		const double s = uniform_in(rng, 0.1, 0.9) * len;
		const auto [head, tail] = split(p, s);
		CHECK(head.param_length() + tail.param_length() == doctest::Approx(len));
		CHECK(approx_equal(head.end(), tail.start(), 1e-9));
		for (int k = 0; k <= 50; ++k) {
			const double u = s * k / 50;
			CHECK(approx_equal(point_at(head, u), point_at(p, u), 1e-9));
			const double w = (len - s) * k / 50;
			CHECK(approx_equal(point_at(tail, w), point_at(p, s + w), 1e-9));
		}

		// Concatenation of the pieces is equivalent to the original.
		std::vector<PathItem> joined = head.items();
		for (const auto& item : tail.items()) joined.push_back(item);
		CHECK(equivalent(Path(joined), p));
	}

	// Split exactly at a joint returns the two items.
	const Segment seg = random_segment(rng);
	const Path comp = composite_from(seg, rng);
	const auto [head, tail] = split(comp, seg_param_length(comp.items()[0].seg));
	CHECK(head.size() == 1);
	CHECK(tail.size() == 1);
}

TEST_CASE("euclidean motions form a group acting on points") {
	auto rng = make_rng(21, 4);
	for (int i = 0; i < 30; ++i) {
		const EuclideanMotion g = random_motion(rng);
		const EuclideanMotion h = random_motion(rng);
		const EuclideanMotion k = random_motion(rng);
		const Vec3 x = gaussian_vec3(rng);

		CHECK(approx_equal((g * h).apply(x), g.apply(h.apply(x)), 1e-10));
		CHECK(approx_equal((g * g.inverse()).apply(x), x, 1e-10));
		CHECK(approx_equal(((g * h) * k).apply(x), (g * (h * k)).apply(x), 1e-10));
		CHECK(approx_equal(EuclideanMotion::identity().apply(x), x));
		CHECK(approx_equal(g.apply(x), g.v + covering_map(g.sigma, x)));
	}
}

TEST_CASE("act closed forms") {
	const EuclideanMotion shift{Vec3{1, 2, 3}, Su2Element::identity()};
	const Path lin = Path::single(LinearSeg(Vec3{0, 0, 0}, e1(), 1.0));
	CHECK(equivalent(act(shift, lin), Path::single(LinearSeg(Vec3{1, 2, 3}, e1(), 1.0))));

	// Pure rotation maps the circular data through the covering map.
	const Su2Element rot = exp_su2(kPi / 2.0, e3());
	const EuclideanMotion g{Vec3{0, 0, 0}, rot};
	const Path circ = Path::single(CircularSeg(Vec3{1, 0, 0}, e1(), e2(), 0.3));
	const Path expect = Path::single(CircularSeg(Vec3{0, 1, 0}, e2(), -e1(), 0.3));
	CHECK(equivalent(act(g, circ), expect));
}

TEST_CASE("act against the pointwise oracle and action laws") {
	auto rng = make_rng(21, 5);
	for (int i = 0; i < 20; ++i) {
		const Path p = composite_from(random_segment(rng), rng);
		const EuclideanMotion g = random_motion(rng);
		const EuclideanMotion h = random_motion(rng);
		const Path gp = act(g, p);
		const double len = p.param_length();
		CHECK(gp.param_length() == doctest::Approx(len));
		for (int k = 0; k <= 60; ++k) {
			const double s = len * k / 60;
			CHECK(approx_equal(point_at(gp, s), g.apply(point_at(p, s)), 1e-9));
		}
		CHECK(equivalent(act(g * h, p), act(g, act(h, p)), 1e-8));
		CHECK(equivalent(act(EuclideanMotion::identity(), p), p));
		CHECK(equivalent(act(g.inverse(), gp), p, 1e-8));
	}
}

TEST_CASE("equivalence relation basics") {
	const Path a = Path::single(LinearSeg(Vec3{0, 0, 0}, e1(), 1.0));
	CHECK(equivalent(a, a));
	// Same image, opposite traversal: not equivalent as parametrized paths.
	CHECK_FALSE(equivalent(a, Path::single(LinearSeg(Vec3{1, 0, 0}, -e1(), 1.0))));
	CHECK_FALSE(equivalent(a, Path::single(LinearSeg(Vec3{0.5, 0, 0}, e1(), 1.0))));
	CHECK_FALSE(equivalent(a, Path::single(LinearSeg(Vec3{0, 0, 0}, e1(), 1.5))));

	// A reversed-flag item equals the rewritten canonical segment.
	const CircularSeg circ(Vec3{0, 0, 0}, e3(), e1(), 0.25);
	const Path flagged({{Segment{circ}, true}});
	CHECK(equivalent(flagged, Path::single(reverse_segment(Segment{circ}))));

	// Equivalence is preserved by the group action.
	auto rng = make_rng(21, 6);
	for (int i = 0; i < 10; ++i) {
		const Path p = composite_from(random_segment(rng), rng);
		const EuclideanMotion g = random_motion(rng);
		const auto [h, t] = split(p, 0.4 * p.param_length());
		std::vector<PathItem> joined = h.items();
		for (const auto& item : t.items()) joined.push_back(item);
		const Path rejoined(joined);
		CHECK(equivalent(p, rejoined));
		CHECK(equivalent(act(g, p), act(g, rejoined), 1e-8));
	}
}

TEST_CASE("canonicalize merges continuations but never a full circle") {
	// Two collinear halves merge into one segment.
	const Path lin({{Segment{LinearSeg(Vec3{0, 0, 0}, e1(), 1.0)}, false},
	                {Segment{LinearSeg(Vec3{1, 0, 0}, e1(), 0.5)}, false}});
	CHECK(canonicalize(lin).size() == 1);
	CHECK(equivalent(lin, Path::single(LinearSeg(Vec3{0, 0, 0}, e1(), 1.5))));

	// Quarter circle continued by a quarter circle is the half circle.
	const Path quarters({{Segment{CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.25)}, false},
	                     {Segment{CircularSeg(Vec3{0, 0, 0}, e3(), e2(), 0.25)}, false}});
	CHECK(canonicalize(quarters).size() == 1);
	CHECK(equivalent(quarters, Path::single(CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.5))));

	// Two half circles close up to a full circle, which stays two segments.
	const Path halves({{Segment{CircularSeg(Vec3{0, 0, 0}, e3(), e1(), 0.5)}, false},
	                   {Segment{CircularSeg(Vec3{0, 0, 0}, e3(), -e1(), 0.5)}, false}});
	CHECK(canonicalize(halves).size() == 2);

	// A forward leg followed by its own reversal does not merge away.
	const LinearSeg leg(Vec3{0, 0, 0}, e1(), 1.0);
	const Path back_and_forth({{Segment{leg}, false}, {Segment{leg}, true}});
	CHECK(canonicalize(back_and_forth).size() == 2);
}

TEST_CASE("json round trips preserve canonical form") {
	auto rng = make_rng(21, 7);
	for (int i = 0; i < 15; ++i) {
		const Path p = composite_from(random_segment(rng), rng);
		const Path q = path_from_json(to_json(p));
		CHECK(equivalent(p, q, 1e-12));

		const EuclideanMotion g = random_motion(rng);
		const EuclideanMotion h = motion_from_json(to_json(g));
		CHECK(approx_equal(g.v, h.v, 1e-12));
		CHECK(approx_equal(g.sigma, h.sigma, 1e-12));
	}

	CHECK_THROWS_AS(segment_from_json(Json{{"type", "helix"}}), std::invalid_argument);
	CHECK_THROWS_AS(path_from_json(Json::array()), std::invalid_argument);
	CHECK_THROWS_AS(vec3_from_json(Json::array({1.0, 2.0})), std::invalid_argument);
}

}  // TEST_SUITE
