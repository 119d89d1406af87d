#pragma once

// Haar sampling on SU(2), Ashtekar-Lewandowski-style product sampling over a
// finite path family, and Radon measures on R |_| Bohr of the form
//   mu = t * mu1(. on R) + (1 - t) * BohrHaar(. on the Bohr copy),
// with mu1 a concrete quadrature measure on R and the Bohr Haar integral
// evaluated symbolically (chi_tau integrates to [tau = 0]).

#include <cstdint>
#include <functional>
#include <random>
#include <variant>
#include <vector>

#include "holonomy/bohr.hpp"
#include "holonomy/paths.hpp"
#include "holonomy/rng.hpp"
#include "holonomy/su2.hpp"

namespace holonomy {

// Haar-uniform SU(2) element (uniform on the unit quaternions).
inline Su2Element sample_haar(std::mt19937_64& rng) { return random_su2(rng); }

class HaarSamplerSU2 {
 public:
	explicit HaarSamplerSU2(std::uint64_t seed) : rng_(make_rng(seed, 7)) {}
	Su2Element operator()() { return sample_haar(rng_); }

 private:
	std::mt19937_64 rng_;
};

// Product Haar sampler over a family of paths declared independent by the
// caller; one group element per path, i.i.d. Haar (so every single-path
// marginal, i.e. the pushforward under evaluation at one path, is again
// Haar).
class ALSampler {
 public:
	explicit ALSampler(std::vector<Path> paths);

	std::size_t size() const { return paths_.size(); }
	const std::vector<Path>& paths() const { return paths_; }
	std::vector<Su2Element> sample(std::mt19937_64& rng) const;

 private:
	std::vector<Path> paths_;
};

struct TubeEstimate {
	double delta = 0.0;
	double p = 0.0;       // fraction of Haar samples within delta of the torus
	double stderr_ = 0.0; // binomial standard error sqrt(p (1-p) / n)
	std::int64_t n = 0;
};

// Monte Carlo estimate of the Haar mass of the geodesic delta-tube around
// the torus {exp_mu(t, n)}.  The torus has codimension 2, so the small-delta
// mass scales like delta^2 (exact law: sin^2 delta).
TubeEstimate tube_probability(const TorusAxis& axis, double delta, std::int64_t n,
                              std::mt19937_64& rng);

// Adaptive Simpson quadrature; throws std::runtime_error if the tolerance is
// not reached within the depth limit.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, double tol,
                         int max_depth = 40);

// The concrete factor measure on the R copy.
struct GaussianMu1 {
	double mean = 0.0;
	double sigma = 1.0;
};
struct UniformMu1 {
	double a = -1.0;
	double b = 1.0;
};
using Mu1 = std::variant<GaussianMu1, UniformMu1>;

struct RadonCombo {
	double t = 0.5;  // weight of the R copy; 1 - t goes to the Bohr copy
	Mu1 mu1;

	RadonCombo(double t_, Mu1 mu1_);
};

// integral of f dmu1 (normalized: gaussian weight, or 1/(b-a) on [a, b]).
Complex integrate_mu1(const std::function<Complex(double)>& f, const Mu1& mu1, double tol = 1e-8);

// integral of f over R |_| Bohr against the combination measure: the R copy
// sees c0 + ap pointwise, the Bohr copy contributes the Haar mean of the ap
// part (its zero-frequency coefficient).
Complex integrate_cylfn(const CylFnOnR& f, const RadonCombo& combo, double tol = 1e-8);

// Piecewise rescaling (a on the R copy, b on the Bohr copy) used to compare
// the L^2 spaces of two combination weights.
struct L2Rescale {
	double real_scale = 1.0;
	double bohr_scale = 1.0;
};

// Rescaling that carries L^2(mu_{t1}) isometrically onto L^2(mu_{t2}):
// a = sqrt(t1/t2), b = sqrt((1-t1)/(1-t2)).
L2Rescale l2_isometry(double t1, double t2);
// The same map with unsquare-rooted coefficients a = t1/t2, b =
// (1-t1)/(1-t2); kept for comparison, it distorts norms (pure-R functions
// come out scaled by sqrt(t1/t2)).
L2Rescale l2_literal(double t1, double t2);

// Squared L^2 norm of the rescaled function against mu_t:
// t a^2 int |c0 + ap|^2 dmu1 + (1 - t) b^2 sum |coeff|^2.
double cylfn_l2_normsq(const CylFnOnR& f, double t, const Mu1& mu1,
                       const L2Rescale& scale = {1.0, 1.0}, double tol = 1e-8);

}  // namespace holonomy
