#pragma once

// Exact rational arithmetic on int64 numerator/denominator.  Intermediate
// products go through __int128; results that do not fit back into int64 throw
// std::overflow_error rather than wrapping.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace holonomy {

class Rational {
 public:
	Rational() = default;
	Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit by design
	Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
		if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
		normalize();
	}

	std::int64_t num() const { return num_; }
	std::int64_t den() const { return den_; }
	bool is_zero() const { return num_ == 0; }
	bool is_integer() const { return den_ == 1; }

	double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

	Rational operator-() const { return Rational(-num_, den_); }

	friend Rational operator+(const Rational& a, const Rational& b) {
		const __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
		const __int128 d = i128(a.den_) * b.den_;
		return from_i128(n, d);
	}
	friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
	friend Rational operator*(const Rational& a, const Rational& b) {
		return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
	}
	friend Rational operator/(const Rational& a, const Rational& b) {
		if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
		return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
	}

	friend bool operator==(const Rational& a, const Rational& b) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
	friend bool operator<(const Rational& a, const Rational& b) {
		return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
	}

	// Fractional part in [0, 1): q - floor(q), exact.
	Rational frac() const {
		std::int64_t r = num_ % den_;
		if (r < 0) r += den_;
		return Rational(r, den_);
	}

	friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
		os << q.num_;
		if (q.den_ != 1) os << "/" << q.den_;
		return os;
	}

 private:
	static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

	static Rational from_i128(__int128 n, __int128 d) {
		if (d < 0) {
			n = -n;
			d = -d;
		}
		const __int128 g = gcd128(n < 0 ? -n : n, d);
		if (g > 1) {
			n /= g;
			d /= g;
		}
		constexpr __int128 lo = INT64_MIN;
		constexpr __int128 hi = INT64_MAX;
		if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: overflow");
		Rational out;
		out.num_ = static_cast<std::int64_t>(n);
		out.den_ = static_cast<std::int64_t>(d);
		return out;
	}

	static __int128 gcd128(__int128 a, __int128 b) {
		while (b != 0) {
			const __int128 t = a % b;
			a = b;
			b = t;
		}
		return a < 0 ? -a : a;
	}

	void normalize() {
		if (den_ < 0) {
			num_ = -num_;
			den_ = -den_;
		}
		const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
		if (g > 1) {
			num_ /= g;
			den_ /= g;
		}
	}

	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
};

// Best rational approximation of x with denominator <= max_den via continued
// fractions; returns false when no convergent lands within tol.
bool rationalize(double x, std::int64_t max_den, double tol, Rational* out);

}  // namespace holonomy
