#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vph/rational.hpp"

namespace vph {

// Numeric policy for the two scalar modes: exact rationals (default) and
// doubles. Float mode relaxes feasibility comparisons by a fixed slack.
template <typename T> struct num_traits;

template <> struct num_traits<rational> {
	static constexpr bool exact = true;
	static rational parse(std::string_view s) { return rational::parse(s); }
	static std::string str(const rational& v) { return v.str(); }
	static double to_double(const rational& v) { return v.to_double(); }
	static rational abs(const rational& v) { return v.abs(); }
	static rational half(const rational& v) { return v.half(); }
	// Feasibility comparison used by threshold tests in matchings.
	static bool feas_le(const rational& a, const rational& b) { return a <= b; }
	// Result comparison: bit-exact in exact mode.
	static bool close(const rational& a, const rational& b) { return a == b; }
};

template <> struct num_traits<double> {
	static constexpr bool exact = false;
	static constexpr double feas_slack = 1e-12;
	static double parse(std::string_view s) {
		size_t slash = s.find('/');
		if (slash != std::string_view::npos) {
			double n = parse(s.substr(0, slash));
			double d = parse(s.substr(slash + 1));
			if (d == 0) throw std::invalid_argument("value: zero denominator");
			return n / d;
		}
		std::string tmp(s);
		char* end = nullptr;
		double v = std::strtod(tmp.c_str(), &end);
		if (end == tmp.c_str() || *end != '\0') throw std::invalid_argument("value: bad number");
		return v;
	}
	static std::string str(double v) {
		char buf[40];
		std::snprintf(buf, sizeof(buf), "%.17g", v);
		return buf;
	}
	static double to_double(double v) { return v; }
	static double abs(double v) { return std::fabs(v); }
	static double half(double v) { return v / 2; }
	static bool feas_le(double a, double b) { return a <= b + feas_slack; }
	static constexpr double result_tol = 1e-9;
	static bool close(double a, double b) { return std::fabs(a - b) <= result_tol; }
};

// A nonnegative value extended with +infinity; used for death times and for
// matching costs.
template <typename T> struct extended {
	bool finite = true;
	T value{};

	extended() = default;
	extended(const T& v) : finite(true), value(v) {}
	static extended infinity() {
		extended e;
		e.finite = false;
		return e;
	}

	friend bool operator==(const extended& a, const extended& b) {
		if (a.finite != b.finite) return false;
		return !a.finite || a.value == b.value;
	}
	friend bool operator!=(const extended& a, const extended& b) { return !(a == b); }
	friend bool operator<(const extended& a, const extended& b) {
		if (!a.finite) return false;
		if (!b.finite) return true;
		return a.value < b.value;
	}
	friend bool operator>(const extended& a, const extended& b) { return b < a; }
	friend bool operator<=(const extended& a, const extended& b) { return !(b < a); }
	friend bool operator>=(const extended& a, const extended& b) { return !(a < b); }

	std::string str() const { return finite ? num_traits<T>::str(value) : "inf"; }
};

template <typename T>
extended<T> max_ext(const extended<T>& a, const extended<T>& b) {
	return a < b ? b : a;
}

template <typename T>
bool close_ext(const extended<T>& a, const extended<T>& b) {
	if (a.finite != b.finite) return false;
	return !a.finite || num_traits<T>::close(a.value, b.value);
}

}  // namespace vph
