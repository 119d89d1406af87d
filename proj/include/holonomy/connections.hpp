#pragma once

// Holonomy of su(2)-valued gauge fields on R^3 along piecewise
// linear/circular paths.
//
// Convention (fixed for the whole library): a gauge field A assigns to a base
// point x and velocity v the algebra vector A(x, v) in R^3 (mu-coordinates),
// linearly in v.  The parallel-transport lift along gamma solves
//
//     s'(t) = -mu(A(gamma(t), gamma'(t))) s(t),   s(start) = identity,
//
// and the holonomy of a segment is s(end).  The holonomy of a composite path
// is h_k ... h_1, left-multiplied in traversal order.  For the isotropic
// family A(x, v) = c v this yields exp(-c L mu(v_hat)) on a straight segment
// of length L, which is what holonomy_closed evaluates.

#include <functional>
#include <random>
#include <string>

#include "holonomy/paths.hpp"
#include "holonomy/su2.hpp"

namespace holonomy {

// The isotropic gauge field A(x, v) = c v; invariant under the full Euclidean
// group, with closed-form holonomies.
struct IsotropicConnection {
	double c = 0.0;
};

struct GaugeField {
	std::string kind;
	std::function<Vec3(const Vec3& x, const Vec3& v)> coeff;

	Vec3 operator()(const Vec3& x, const Vec3& v) const { return coeff(x, v); }

	static GaugeField isotropic(double c);
	// A(x, v) = (0, -r * x.y * v.x, 0): invariant under translations along e1
	// but not under translations along e2 (the discontinuity witness family).
	static GaugeField shear(double r);
};

// Closed-form holonomy of the isotropic family.
//  * straight segment (dir n, length L): exp_mu(-c L, n);
//  * circular segment (radius r, parameter length T = 2 pi m): conjugate of
//    the standard-frame holonomy, whose (1,1) entry is
//    e^{-iT/2} (cos(bT) + i sin(bT) / (2b)) with b = sqrt(c^2 r^2 + 1/4).
Su2Element holonomy_closed(const IsotropicConnection& conn, const Segment& seg);
Su2Element holonomy_closed(const IsotropicConnection& conn, const Path& p);

// Standard-frame circular holonomy (center 0, axis e3, radius_vec r*e1,
// parameter length tau); exposed for tests.
Su2Element standard_circular_holonomy(double c, double r, double tau);

// Numerical holonomy: fixed-step 4th-order Lie-group integration of the lift
// ODE per segment (two exact su(2) exponentials per step, Gauss nodes), so
// every iterate is exactly unitary.  steps is the per-segment step count
// (minimum 16).
Su2Element holonomy_ode(const GaugeField& field, const Segment& seg, int steps);
Su2Element holonomy_ode(const GaugeField& field, const Path& p, int steps);

// Pullback of the holonomy assignment along the motion g:
// (g . h)(path) = sigma * h(act(g^-1, path)) * sigma^-1.
Su2Element pullback_holonomy(const EuclideanMotion& g, const Path& p,
                             const std::function<Su2Element(const Path&)>& h);

// Gap witnessing that the shear family's holonomy assignment moves under the
// translation g = (-lambda e2, 1): absolute difference of the (1,1) matrix
// entries of h(gamma_0) and (g . h)(gamma_0) for the unit segment gamma_0
// along e1 through the origin.  Equals |1 - cos(lambda r)|, maximal (= 1) at
// r = pi / (2 lambda).
double discontinuity_gap(double lambda, double r, int steps = 4096);

// Finite-difference check that the bundle connection form of `field`,
//   omega_(x,s)(v, s Y) = Ad(s^-1) mu(A(x, v)) + mu(Y),
// is invariant under the lifted action of g: random points/tangents are
// pushed forward through the action by central differences (step fd_step) and
// omega is compared before and after.  Returns the maximum Frobenius
// residual over `samples` draws.
double verify_pullback_invariance(const GaugeField& field, const EuclideanMotion& g, int samples,
                                  std::mt19937_64& rng, double fd_step = 1e-5);
double verify_pullback_invariance(double c, const EuclideanMotion& g, int samples,
                                  std::mt19937_64& rng, double fd_step = 1e-5);

}  // namespace holonomy
