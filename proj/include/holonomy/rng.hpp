#pragma once

// Deterministic randomness helpers.  All stochastic code in this library
// draws through these so that a (seed, stream) pair fully determines results
// independently of platform distribution implementations.

#include <cstdint>
#include <random>

#include "holonomy/su2.hpp"
#include "holonomy/vec3.hpp"

namespace holonomy {

inline std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

// Independent generator for task `stream` under a common experiment seed.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
	return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

inline double uniform_unit(std::mt19937_64& rng) {
	return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double a, double b) {
	return a + (b - a) * uniform_unit(rng);
}

// Box-Muller without state; draws two uniforms per variate.
inline double gaussian(std::mt19937_64& rng) {
	double u1 = uniform_unit(rng);
	while (u1 <= 0.0) u1 = uniform_unit(rng);
	const double u2 = uniform_unit(rng);
	return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

inline Vec3 gaussian_vec3(std::mt19937_64& rng, double scale = 1.0) {
	return {scale * gaussian(rng), scale * gaussian(rng), scale * gaussian(rng)};
}

inline Vec3 random_unit_vec3(std::mt19937_64& rng) {
	for (;;) {
		const Vec3 v = gaussian_vec3(rng);
		if (norm(v) > 1e-6) return normalized(v);
	}
}

// Haar-uniform SU(2) element: normalized 4-vector of independent gaussians.
inline Su2Element random_su2(std::mt19937_64& rng) {
	for (;;) {
		Su2Element q{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
		if (q.quat_norm() > 1e-6) {
			q.renormalize();
			return q;
		}
	}
}

}  // namespace holonomy
