#pragma once

#include <functional>
#include <vector>

#include "vph/metric_space.hpp"

namespace vph {

// Enumerates all tripods between [0,nx) and [0,ny) with z_size up to
// max(nx, ny) + max_extra, without duplicates under relabeling of Z: a
// tripod is canonicalized as the lexicographically sorted multiset of pairs
// (phi_x(z), phi_y(z)), and the enumeration emits exactly the sorted pair
// sequences that are surjective on both factors, in deterministic
// lexicographic order, smaller z_size first.
inline void enumerate_tripods(int nx, int ny, int max_extra,
                              const std::function<void(const tripod&)>& fn) {
	if (nx <= 0 || ny <= 0) throw input_error("enumerate_tripods: empty space");
	if (max_extra < 0) throw input_error("enumerate_tripods: max_extra must be >= 0");
	int zmin = std::max(nx, ny);
	int zmax = zmin + max_extra;
	int alphabet = nx * ny;  // pair (a,b) encoded as a*ny + b

	std::vector<int> seq;
	std::vector<int> count_x(nx, 0), count_y(ny, 0);
	int missing_x = nx, missing_y = ny;

	tripod r;
	auto emit = [&](int z) {
		r.phi_x.domain_size = r.phi_y.domain_size = z;
		r.phi_x.image_size = nx;
		r.phi_y.image_size = ny;
		r.phi_x.map.resize(z);
		r.phi_y.map.resize(z);
		for (int t = 0; t < z; ++t) {
			r.phi_x.map[t] = seq[t] / ny;
			r.phi_y.map[t] = seq[t] % ny;
		}
		fn(r);
	};

	// Non-decreasing sequences over the pair alphabet = multisets of pairs.
	auto rec = [&](auto&& self, int z, int min_pair) -> void {
		int slots = z - (int)seq.size();
		if (slots == 0) {
			if (missing_x == 0 && missing_y == 0) emit(z);
			return;
		}
		if (missing_x > slots || missing_y > slots) return;  // cannot become surjective
		for (int pair = min_pair; pair < alphabet; ++pair) {
			int a = pair / ny, b = pair % ny;
			seq.push_back(pair);
			if (count_x[a]++ == 0) --missing_x;
			if (count_y[b]++ == 0) --missing_y;
			self(self, z, pair);
			seq.pop_back();
			if (--count_x[a] == 0) ++missing_x;
			if (--count_y[b] == 0) ++missing_y;
		}
	};
	for (int z = zmin; z <= zmax; ++z) rec(rec, z, 0);
}

inline uint64_t count_tripods(int nx, int ny, int max_extra) {
	uint64_t c = 0;
	enumerate_tripods(nx, ny, max_extra, [&](const tripod&) { ++c; });
	return c;
}

}  // namespace vph
