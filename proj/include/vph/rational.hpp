#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vph {

using int128_t = __int128;

// Exact rational scalar with 64-bit numerator and denominator.
// Distance matrices at the scale this library targets (small decimal or p/q
// text entries) stay far below the 64-bit range; any operation that would
// leave it throws std::overflow_error instead of wrapping.
class rational {
public:
	rational() = default;
	rational(long long v) : num_(v) {}

	static rational from_ratio(long long num, long long den) {
		return make(num, den);
	}

	long long num() const { return num_; }
	long long den() const { return den_; }
	bool is_zero() const { return num_ == 0; }
	bool is_negative() const { return num_ < 0; }

	friend rational operator+(const rational& a, const rational& b) {
		return make(int128_t(a.num_) * b.den_ + int128_t(b.num_) * a.den_,
		            int128_t(a.den_) * b.den_);
	}
	friend rational operator-(const rational& a, const rational& b) {
		return make(int128_t(a.num_) * b.den_ - int128_t(b.num_) * a.den_,
		            int128_t(a.den_) * b.den_);
	}
	rational operator-() const { return make(-int128_t(num_), den_); }

	rational abs() const { return num_ < 0 ? -*this : *this; }
	rational half() const { return make(num_, int128_t(den_) * 2); }

	friend bool operator==(const rational& a, const rational& b) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
	friend bool operator<(const rational& a, const rational& b) {
		return int128_t(a.num_) * b.den_ < int128_t(b.num_) * a.den_;
	}
	friend bool operator>(const rational& a, const rational& b) { return b < a; }
	friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
	friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

	double to_double() const { return double(num_) / double(den_); }

	// Canonical text form: "p/q", or just "p" when the denominator is 1.
	std::string str() const {
		std::string s = std::to_string(num_);
		if (den_ != 1) s += "/" + std::to_string(den_);
		return s;
	}

	// Accepts optionally signed integers ("-3"), fractions ("5/4") and
	// decimals ("2.75"). Throws std::invalid_argument on malformed input.
	static rational parse(std::string_view s) {
		size_t pos = 0;
		bool neg = false;
		if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
		int128_t num = 0, den = 1;
		size_t digits = 0;
		while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
			num = num * 10 + (s[pos] - '0');
			++pos, ++digits;
			if (digits > 18) throw std::invalid_argument("rational: too many digits");
		}
		if (digits == 0) throw std::invalid_argument("rational: expected a number");
		if (pos < s.size() && s[pos] == '/') {
			++pos;
			int128_t d = 0;
			size_t ddigits = 0;
			while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
				d = d * 10 + (s[pos] - '0');
				++pos, ++ddigits;
				if (ddigits > 18) throw std::invalid_argument("rational: too many digits");
			}
			if (ddigits == 0 || d == 0) throw std::invalid_argument("rational: bad denominator");
			den = d;
		} else if (pos < s.size() && s[pos] == '.') {
			++pos;
			size_t fdigits = 0;
			while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
				num = num * 10 + (s[pos] - '0');
				den *= 10;
				++pos, ++fdigits;
				if (digits + fdigits > 18) throw std::invalid_argument("rational: too many digits");
			}
			if (fdigits == 0) throw std::invalid_argument("rational: bad decimal");
		}
		if (pos != s.size()) throw std::invalid_argument("rational: trailing characters");
		return make(neg ? -num : num, den);
	}

private:
	long long num_ = 0;
	long long den_ = 1;

	static rational make(int128_t n, int128_t d) {
		if (d == 0) throw std::invalid_argument("rational: zero denominator");
		if (d < 0) n = -n, d = -d;
		int128_t g = gcd128(n < 0 ? -n : n, d);
		if (g > 1) n /= g, d /= g;
		constexpr int128_t lim = int128_t(INT64_MAX);
		if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
		rational r;
		r.num_ = (long long)n;
		r.den_ = (long long)d;
		return r;
	}

	static int128_t gcd128(int128_t a, int128_t b) {
		while (b) {
			int128_t t = a % b;
			a = b;
			b = t;
		}
		return a == 0 ? 1 : a;
	}
};

}  // namespace vph
