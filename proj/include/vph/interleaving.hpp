#pragma once

#include "vph/matching.hpp"

namespace vph {

// Interleaving distance between two filtered chain complexes, computed as
// the sup over degrees of the matching distance between their verbose
// barcodes (the two quantities coincide). Infinite as soon as some degree
// has mismatched cardinalities, i.e. the underlying chain complexes are
// non-isomorphic.
template <typename T> struct interleaving_result {
	extended<T> value{};
	std::vector<extended<T>> per_degree;
};

template <typename T>
interleaving_result<T> interleaving_distance(const barcode_family<T>& a,
                                             const barcode_family<T>& b) {
	interleaving_result<T> out;
	out.value = extended<T>(T{});
	size_t degrees = std::max(a.size(), b.size());
	for (size_t k = 0; k < degrees; ++k) {
		barcode<T> x = k < a.size() ? a[k] : barcode<T>{};
		barcode<T> y = k < b.size() ? b[k] : barcode<T>{};
		auto m = matching_distance(x, y);
		out.per_degree.push_back(m.cost);
		out.value = max_ext(out.value, m.cost);
	}
	return out;
}

// Verbose barcode family of the elementary complex with a single interval
// (a, death) in the given degree.
template <typename T>
barcode_family<T> elementary_family(const T& a, const extended<T>& death, int degree) {
	barcode_family<T> fam(degree + 1);
	fam[degree].push_back({a, death});
	return fam;
}

// Bound report for two filtration functions on one chain complex, i.e. two
// metric structures on the same vertex set:
//   |diam_1 - diam_2| <= d_I <= max entrywise |d_1 - d_2|.
// The report also carries the minimum distortion over vertex bijections
// (when small enough to enumerate), which sits between d_I and the upper
// bound.
template <typename T> struct di_bounds_report {
	T lower{};                       // |diam_1 - diam_2|
	extended<T> di{};                // interleaving distance
	T upper{};                       // max simplex-wise level difference
	bool min_bijection_computed = false;
	T min_bijection_dis{};
	bool ok = false;
};

template <typename T>
di_bounds_report<T> di_bounds_check(const metric_space<T>& x1, const metric_space<T>& x2,
                                    int field_char = 2, size_t size_cap = default_size_cap) {
	if (x1.n != x2.n)
		throw dimension_mismatch_error("di_bounds_check: spaces must share the vertex set");
	di_bounds_report<T> rep;
	rep.lower = num_traits<T>::abs(x1.diameter() - x2.diameter());
	rep.upper = max_entrywise_difference(x1, x2);
	auto fam1 = vr_verbose_barcodes(x1, field_char, size_cap);
	auto fam2 = vr_verbose_barcodes(x2, field_char, size_cap);
	rep.di = interleaving_distance(fam1, fam2).value;

	rep.ok = extended<T>(rep.lower) <= rep.di && rep.di <= extended<T>(rep.upper);
	if (x1.n <= 6) {
		rep.min_bijection_computed = true;
		std::vector<int> perm(x1.n);
		for (int i = 0; i < x1.n; ++i) perm[i] = i;
		bool first = true;
		do {
			T dis{};
			for (int i = 0; i < x1.n; ++i)
				for (int j = i + 1; j < x1.n; ++j) {
					T diff = num_traits<T>::abs(x1(i, j) - x2(perm[i], perm[j]));
					if (dis < diff) dis = diff;
				}
			if (first || dis < rep.min_bijection_dis) rep.min_bijection_dis = dis;
			first = false;
		} while (std::next_permutation(perm.begin(), perm.end()));
		rep.ok = rep.ok && rep.di <= extended<T>(rep.min_bijection_dis) &&
		         rep.min_bijection_dis <= rep.upper;
	}
	return rep;
}

}  // namespace vph
