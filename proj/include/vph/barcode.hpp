#pragma once

#include <algorithm>
#include <vector>

#include "vph/reduction.hpp"

namespace vph {

// One barcode point: birth finite, death possibly infinite, birth <= death.
template <typename T> struct bar {
	T birth{};
	extended<T> death{};

	friend bool operator==(const bar& a, const bar& b) {
		return a.birth == b.birth && a.death == b.death;
	}
	friend bool operator<(const bar& a, const bar& b) {
		if (a.birth != b.birth) return a.birth < b.birth;
		return a.death < b.death;
	}
};

// A barcode is a finite multiset of points; canonical form is sorted.
template <typename T> using barcode = std::vector<bar<T>>;
// One barcode per homological degree, index = degree.
template <typename T> using barcode_family = std::vector<barcode<T>>;

template <typename T>
void canonicalize(barcode<T>& b) {
	std::sort(b.begin(), b.end());
}

template <typename T>
bool barcodes_equal(barcode<T> a, barcode<T> b) {
	canonicalize(a);
	canonicalize(b);
	return a == b;
}

// Degree-k verbose barcode: one point (diam creator, diam destroyer) per
// pair and one point (diam creator, inf) per unpaired creator.
template <typename T>
barcode<T> verbose_barcode(const filtered_complex<T>& fc, const persistence_pairing& pairing,
                           int k) {
	if (k < 0 || k > fc.max_dim)
		throw degree_out_of_range_error("DegreeOutOfRange: degree " + std::to_string(k) +
		                                " not covered (max " + std::to_string(fc.max_dim) + ")");
	barcode<T> b;
	for (auto [creator, destroyer] : pairing.pairs[k])
		b.push_back({fc[creator].diameter, extended<T>(fc[destroyer].diameter)});
	for (int creator : pairing.unpaired[k])
		b.push_back({fc[creator].diameter, extended<T>::infinity()});
	canonicalize(b);
	return b;
}

// The sub-multiset of points with death > birth.
template <typename T>
barcode<T> concise_barcode(const barcode<T>& verbose) {
	barcode<T> out;
	for (const auto& p : verbose)
		if (!p.death.finite || p.birth < p.death.value) out.push_back(p);
	return out;
}

template <typename T>
barcode_family<T> concise_family(const barcode_family<T>& fam) {
	barcode_family<T> out;
	out.reserve(fam.size());
	for (const auto& b : fam) out.push_back(concise_barcode(b));
	return out;
}

// Verbose barcodes for every degree 0..max_dim of the complex.
template <typename T>
barcode_family<T> all_verbose_barcodes(const filtered_complex<T>& fc,
                                       const persistence_pairing& pairing) {
	barcode_family<T> fam;
	for (int k = 0; k <= fc.max_dim; ++k) fam.push_back(verbose_barcode(fc, pairing, k));
	return fam;
}

// Convenience: full-complex verbose barcodes of a space.
template <typename T>
barcode_family<T> vr_verbose_barcodes(const metric_space<T>& space, int field_char = 2,
                                      size_t size_cap = default_size_cap) {
	auto fc = build_vr_fcc(space, -1, size_cap);
	auto red = reduce(fc, field_char);
	auto pairing = group_pairing(fc, red);
	return all_verbose_barcodes(fc, pairing);
}

template <typename T>
bool families_equal(const barcode_family<T>& a, const barcode_family<T>& b) {
	size_t m = std::max(a.size(), b.size());
	for (size_t k = 0; k < m; ++k) {
		barcode<T> x = k < a.size() ? a[k] : barcode<T>{};
		barcode<T> y = k < b.size() ? b[k] : barcode<T>{};
		if (!barcodes_equal(x, y)) return false;
	}
	return true;
}

// Filtered chain isomorphism test: identical verbose barcodes in all degrees.
template <typename T>
bool fci_equal(const barcode_family<T>& a, const barcode_family<T>& b) {
	return families_equal(a, b);
}

// Filtered homotopy equivalence test: identical concise barcodes.
template <typename T>
bool fhe_equal(const barcode_family<T>& a, const barcode_family<T>& b) {
	return families_equal(concise_family(a), concise_family(b));
}

// Expected verbose barcode size for the full complex on a genuine n-point
// metric space: n at degree 0, C(n-1, k+1) for 1 <= k <= n-2, 0 beyond.
inline long long expected_verbose_count(int n, int k) {
	if (k == 0) return n;
	if (k >= n - 1) return 0;
	return binomial(n - 1, k + 1);
}

// One elementary summand per verbose barcode point. Its chain-level
// dimension is 2 for a finite interval and 1 for an infinite one.
template <typename T> struct elementary_summand {
	T birth{};
	extended<T> death{};
	int degree = 0;

	int dimension() const { return death.finite ? 2 : 1; }
};

template <typename T>
std::vector<elementary_summand<T>> decompose_elementary(const barcode_family<T>& fam) {
	std::vector<elementary_summand<T>> out;
	for (int k = 0; k < (int)fam.size(); ++k)
		for (const auto& p : fam[k]) out.push_back({p.birth, p.death, k});
	return out;
}

template <typename T>
long long total_summand_dimension(const std::vector<elementary_summand<T>>& summands) {
	long long dim = 0;
	for (const auto& s : summands) dim += s.dimension();
	return dim;
}

}  // namespace vph
