#pragma once

#include <utility>
#include <vector>

#include "vph/filtration.hpp"

namespace vph {

// Arithmetic in the prime field GF(p).
struct prime_field {
	int p = 2;

	explicit prime_field(int p_ = 2) : p(p_) {
		if (p_ < 2) throw input_error("field characteristic must be a prime >= 2");
		for (int d = 2; d * d <= p_; ++d)
			if (p_ % d == 0) throw input_error("field characteristic must be prime");
	}
	int norm(long long v) const {
		int r = int(v % p);
		return r < 0 ? r + p : r;
	}
	int neg(int a) const { return a == 0 ? 0 : p - a; }
	int mul(int a, int b) const { return int((long long)a * b % p); }
	int inv(int a) const {
		// Fermat: a^(p-2) mod p.
		int r = 1, b = a, e = p - 2;
		while (e) {
			if (e & 1) r = mul(r, b);
			b = mul(b, b);
			e >>= 1;
		}
		return r;
	}
};

// Sparse vector over GF(p): (index, coefficient) entries with strictly
// increasing indices and coefficients in [1, p).
struct sparse_vec {
	std::vector<std::pair<int, int>> e;

	bool empty() const { return e.empty(); }
	int pivot() const { return e.back().first; }
	int pivot_coeff() const { return e.back().second; }
};

// r += c * s (mod p).
inline void add_scaled(sparse_vec& r, const sparse_vec& s, int c, const prime_field& f) {
	if (c == 0) return;
	sparse_vec out;
	out.e.reserve(r.e.size() + s.e.size());
	size_t i = 0, j = 0;
	while (i < r.e.size() || j < s.e.size()) {
		if (j == s.e.size() || (i < r.e.size() && r.e[i].first < s.e[j].first)) {
			out.e.push_back(r.e[i++]);
		} else if (i == r.e.size() || s.e[j].first < r.e[i].first) {
			out.e.emplace_back(s.e[j].first, f.mul(c, s.e[j].second));
			++j;
		} else {
			int v = f.norm(r.e[i].second + (long long)f.mul(c, s.e[j].second));
			if (v != 0) out.e.emplace_back(r.e[i].first, v);
			++i, ++j;
		}
	}
	r = std::move(out);
}

// Boundary of a simplex as a sparse vector over the global ids of its
// facets, with alternating signs.
template <typename T>
sparse_vec boundary_column(const filtered_complex<T>& fc, int id, const prime_field& f) {
	const auto& s = fc[id];
	sparse_vec col;
	if (s.dim() == 0) return col;
	for (int i = 0; i <= s.dim(); ++i) {
		uint32_t facet = s.mask ^ (uint32_t(1) << s.vertices[i]);
		int fid = fc.id_of_mask.at(facet);
		col.e.emplace_back(fid, (i % 2 == 0) ? 1 : f.neg(1));
	}
	std::sort(col.e.begin(), col.e.end());
	return col;
}

// Output of the column reduction: reduced boundary columns R = dV, the
// change-of-basis columns V (unit upper-triangular in filtration order),
// and the creator/destroyer pairing.
struct reduction_result {
	int field_char = 2;
	std::vector<sparse_vec> R;   // by global column id
	std::vector<sparse_vec> V;   // by global column id
	std::vector<char> creator;   // column reduced to zero
	std::vector<int> partner;    // destroyer of a creator / creator of a destroyer, -1 if none
};

// Creator/destroyer pairs and unpaired creators, grouped by degree.
struct persistence_pairing {
	// pairs[k]: (creator id of dim k, destroyer id of dim k+1)
	std::vector<std::vector<std::pair<int, int>>> pairs;
	std::vector<std::vector<int>> unpaired;  // unpaired creators of dim k
};

// Standard persistence column reduction in the global filtration order,
// keeping every pair including zero-persistence ones.
template <typename T>
reduction_result reduce(const filtered_complex<T>& fc, int field_char = 2) {
	prime_field f(field_char);
	int m = (int)fc.simplices.size();
	reduction_result out;
	out.field_char = field_char;
	out.R.resize(m);
	out.V.resize(m);
	out.creator.assign(m, 0);
	out.partner.assign(m, -1);

	std::vector<int> owner(m, -1);  // pivot row -> column owning it
	for (int id = 0; id < m; ++id) {
		sparse_vec col = boundary_column(fc, id, f);
		sparse_vec chain;
		chain.e.emplace_back(id, 1);
		while (!col.empty() && owner[col.pivot()] != -1) {
			int j = owner[col.pivot()];
			int c = f.neg(f.mul(col.pivot_coeff(), f.inv(out.R[j].pivot_coeff())));
			add_scaled(col, out.R[j], c, f);
			add_scaled(chain, out.V[j], c, f);
		}
		if (col.empty()) {
			out.creator[id] = 1;
		} else {
			int low = col.pivot();
			owner[low] = id;
			out.partner[low] = id;
			out.partner[id] = low;
		}
		out.R[id] = std::move(col);
		out.V[id] = std::move(chain);
	}
	return out;
}

// Groups the reduction's pairing by degree. Degree k lists pairs
// (creator of dim k, destroyer of dim k+1) whose destroyer exists within
// the built complex, and the unpaired creators of dim k.
template <typename T>
persistence_pairing group_pairing(const filtered_complex<T>& fc, const reduction_result& red) {
	persistence_pairing p;
	int degrees = fc.max_dim + 1;
	p.pairs.assign(degrees, {});
	p.unpaired.assign(degrees, {});
	for (int id = 0; id < (int)fc.simplices.size(); ++id) {
		if (!red.creator[id]) continue;
		int k = fc[id].dim();
		if (k > fc.max_dim) continue;
		if (red.partner[id] != -1)
			p.pairs[k].emplace_back(id, red.partner[id]);
		else
			p.unpaired[k].push_back(id);
	}
	return p;
}

}  // namespace vph
