#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vph/metric_space.hpp"

namespace vph {

// Default cap on the total number of simplices a filtration may hold.
// Overridable per call (the CLI wires it to VERBOSE_PH_SIZE_CAP).
inline constexpr size_t default_size_cap = 4096;

template <typename T> struct simplex_t {
	uint32_t mask = 0;          // vertex set as a bitmask
	std::vector<int> vertices;  // strictly increasing
	T diameter{};               // max pairwise distance, 0 for vertices

	int dim() const { return (int)vertices.size() - 1; }
};

// All simplices of the full Vietoris-Rips complex on a finite
// (pseudo-)metric space, up to the dimension needed for degree-max_dim
// barcodes, in a filtration-compatible total order: sorted by (diameter,
// dimension, lexicographic vertex tuple), so faces precede cofaces and
// diameters are non-decreasing.
template <typename T> struct filtered_complex {
	metric_space<T> space;
	int max_dim = 0;  // barcodes are valid for degrees <= max_dim
	std::vector<simplex_t<T>> simplices;   // global filtration order
	std::vector<std::vector<int>> by_dim;  // global ids per dimension
	std::unordered_map<uint32_t, int> id_of_mask;

	int count(int dim) const {
		return dim < (int)by_dim.size() ? (int)by_dim[dim].size() : 0;
	}
	const simplex_t<T>& operator[](int id) const { return simplices[id]; }
};

inline long long binomial(int n, int k) {
	if (k < 0 || k > n) return 0;
	long long r = 1;
	for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
	return r;
}

// Builds the filtration. max_dim < 0 means the full complex (degrees up to
// n-2). Throws size_cap_error when the total simplex count would exceed
// size_cap.
template <typename T>
filtered_complex<T> build_vr_fcc(const metric_space<T>& space, int max_dim = -1,
                                 size_t size_cap = default_size_cap) {
	int n = space.n;
	if (n > 31) throw size_cap_error("SizeCapExceeded: more than 31 points");
	if (max_dim < 0) max_dim = n - 2;
	if (max_dim < 0) max_dim = 0;
	int top_dim = std::min(max_dim + 1, n - 1);

	size_t total = 0;
	for (int d = 0; d <= top_dim; ++d) total += (size_t)binomial(n, d + 1);
	if (total > size_cap)
		throw size_cap_error("SizeCapExceeded: " + std::to_string(total) + " simplices (cap " +
		                     std::to_string(size_cap) + ")");

	filtered_complex<T> fc;
	fc.space = space;
	fc.max_dim = max_dim;
	fc.simplices.reserve(total);

	std::vector<int> verts;
	auto emit = [&](const std::vector<int>& vs, const T& diam) {
		simplex_t<T> s;
		s.vertices = vs;
		s.diameter = diam;
		for (int v : vs) s.mask |= uint32_t(1) << v;
		fc.simplices.push_back(std::move(s));
	};
	// Lexicographic subset enumeration, extending diameters incrementally.
	auto rec = [&](auto&& self, int next, const T& diam) -> void {
		if ((int)verts.size() - 1 >= 0) emit(verts, diam);
		if ((int)verts.size() == top_dim + 1) return;
		for (int v = next; v < n; ++v) {
			T d2 = diam;
			for (int u : verts)
				if (d2 < space(u, v)) d2 = space(u, v);
			verts.push_back(v);
			self(self, v + 1, d2);
			verts.pop_back();
		}
	};
	rec(rec, 0, T{});

	std::sort(fc.simplices.begin(), fc.simplices.end(),
	          [](const simplex_t<T>& a, const simplex_t<T>& b) {
		          if (a.diameter != b.diameter) return a.diameter < b.diameter;
		          if (a.dim() != b.dim()) return a.dim() < b.dim();
		          return a.vertices < b.vertices;
	          });

	fc.by_dim.assign(top_dim + 1, {});
	for (int id = 0; id < (int)fc.simplices.size(); ++id) {
		fc.by_dim[fc.simplices[id].dim()].push_back(id);
		fc.id_of_mask[fc.simplices[id].mask] = id;
	}
	return fc;
}

}  // namespace vph
