#pragma once

#include <stdexcept>
#include <string>

namespace vph {

// Malformed or inconsistent input (parse failures, axiom violations,
// mismatched dimensions). CLI maps these to exit code 2.
struct input_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct dimension_mismatch_error : input_error {
	using input_error::input_error;
};

struct length_mismatch_error : input_error {
	using input_error::input_error;
};

struct cardinality_mismatch_error : input_error {
	using input_error::input_error;
};

struct degree_out_of_range_error : input_error {
	using input_error::input_error;
};

// A configured resource cap was hit. CLI maps these to exit code 3.
struct resource_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct size_cap_error : resource_error {
	using resource_error::resource_error;
};

struct budget_error : resource_error {
	using resource_error::resource_error;
};

struct oracle_cap_error : resource_error {
	using resource_error::resource_error;
};

enum class metric_axiom { square, symmetry, nonnegative, zero_diagonal, triangle };

inline const char* axiom_name(metric_axiom a) {
	switch (a) {
	case metric_axiom::square: return "NonSquare";
	case metric_axiom::symmetry: return "NonSymmetric";
	case metric_axiom::nonnegative: return "NegativeEntry";
	case metric_axiom::zero_diagonal: return "NonzeroDiagonal";
	case metric_axiom::triangle: return "TriangleViolation";
	}
	return "?";
}

// Names the failed axiom and the offending indices. For a triangle
// violation d(i,j) > d(i,k) + d(k,j) the indices are reported as (i,k,j).
struct metric_error : input_error {
	metric_axiom axiom;
	int i = -1, j = -1, k = -1;

	metric_error(metric_axiom a, int i_, int j_, int k_ = -1)
	    : input_error(format(a, i_, j_, k_)), axiom(a), i(i_), j(j_), k(k_) {}

	static std::string format(metric_axiom a, int i, int j, int k) {
		std::string s = axiom_name(a);
		if (a == metric_axiom::triangle)
			s += "(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(j) + ")";
		else if (i >= 0)
			s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
		return s;
	}
};

}  // namespace vph
