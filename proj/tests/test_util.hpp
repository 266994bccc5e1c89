#pragma once

// Shared fixtures for the test suites: random space/barcode generators and
// the independent brute-force oracles the library is checked against.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "vph/barcode.hpp"
#include "vph/matching.hpp"
#include "vph/metric_space.hpp"
#include "vph/pullback.hpp"

namespace vphtest {

using vph::bar;
using vph::barcode;
using vph::extended;
using vph::metric_space;
using vph::rational;

using rng_t = std::mt19937_64;

inline rational rat(long long num, long long den = 1) { return rational::from_ratio(num, den); }

// Random genuine metric space: random integer-weight complete graph made
// metric by shortest-path closure; entries are halves to exercise exact
// arithmetic.
inline metric_space<rational> random_metric(rng_t& rng, int n, int max_num = 12, int den = 2) {
	std::uniform_int_distribution<int> w(1, max_num);
	std::vector<std::vector<rational>> d(n, std::vector<rational>(n, rational(0)));
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rat(w(rng), den);
	for (int k = 0; k < n; ++k)
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				rational via = d[i][k] + d[k][j];
				if (i != j && via < d[i][j]) d[i][j] = d[j][i] = via;
			}
	return vph::validate_metric(d);
}

// Random pseudo-metric space as a pullback of a genuine one.
inline metric_space<rational> random_pseudo_metric(rng_t& rng, int n_support, int n_total) {
	auto base = random_metric(rng, n_support);
	vph::surjection phi;
	phi.image_size = n_support;
	phi.domain_size = n_total;
	phi.map.resize(n_total);
	for (int i = 0; i < n_support; ++i) phi.map[i] = i;
	std::uniform_int_distribution<int> pick(0, n_support - 1);
	for (int i = n_support; i < n_total; ++i) phi.map[i] = pick(rng);
	std::shuffle(phi.map.begin(), phi.map.end(), rng);
	return vph::pullback_metric(base, phi);
}

inline bar<rational> finite_bar(rational b, rational d) { return {b, extended<rational>(d)}; }
inline bar<rational> infinite_bar(rational b) { return {b, extended<rational>::infinity()}; }

inline barcode<rational> random_barcode(rng_t& rng, int n_finite, int n_infinite) {
	std::uniform_int_distribution<int> v(0, 8), len(0, 6);
	barcode<rational> b;
	for (int i = 0; i < n_finite; ++i) {
		rational birth = rat(v(rng), 2);
		b.push_back(finite_bar(birth, birth + rat(len(rng), 2)));
	}
	for (int i = 0; i < n_infinite; ++i) b.push_back(infinite_bar(rat(v(rng), 2)));
	vph::canonicalize(b);
	return b;
}

// Factorial brute force for the matching distance.
inline extended<rational> brute_matching(const barcode<rational>& a, const barcode<rational>& b) {
	if (a.size() != b.size()) return extended<rational>::infinity();
	std::vector<int> perm(b.size());
	std::iota(perm.begin(), perm.end(), 0);
	extended<rational> best = extended<rational>::infinity();
	do {
		extended<rational> cost{rational(0)};
		for (size_t i = 0; i < a.size(); ++i) cost = vph::max_ext(cost, vph::dinf(a[i], b[perm[i]]));
		if (cost < best) best = cost;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return best;
}

namespace detail {

inline bool bottleneck_feasible(const barcode<rational>& a, const barcode<rational>& b,
                                const rational& t, size_t i, std::vector<char>& used) {
	if (i == a.size()) {
		for (size_t j = 0; j < b.size(); ++j) {
			if (used[j]) continue;
			if (!b[j].death.finite) return false;
			if (t < vph::diagonal_gap(b[j])) return false;
		}
		return true;
	}
	for (size_t j = 0; j < b.size(); ++j) {
		if (used[j]) continue;
		auto d = vph::dinf(a[i], b[j]);
		if (!d.finite || t < d.value) continue;
		used[j] = 1;
		if (bottleneck_feasible(a, b, t, i + 1, used)) return true;
		used[j] = 0;
	}
	if (a[i].death.finite && !(t < vph::diagonal_gap(a[i])) &&
	    bottleneck_feasible(a, b, t, i + 1, used))
		return true;
	return false;
}

}  // namespace detail

// Quadratic-candidate brute force for the bottleneck distance: the optimum
// is one of the pairwise distances or half-persistences; feasibility is
// checked by exhaustive assignment.
inline extended<rational> brute_bottleneck(const barcode<rational>& a,
                                           const barcode<rational>& b) {
	std::vector<rational> candidates{rational(0)};
	for (const auto& p : a)
		if (p.death.finite) candidates.push_back(vph::diagonal_gap(p));
	for (const auto& q : b)
		if (q.death.finite) candidates.push_back(vph::diagonal_gap(q));
	for (const auto& p : a)
		for (const auto& q : b) {
			auto d = vph::dinf(p, q);
			if (d.finite) candidates.push_back(d.value);
		}
	std::sort(candidates.begin(), candidates.end());
	candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
	for (const rational& t : candidates) {
		std::vector<char> used(b.size(), 0);
		if (detail::bottleneck_feasible(a, b, t, 0, used)) return extended<rational>(t);
	}
	return extended<rational>::infinity();
}

// Single-linkage oracle: the multiset of minimum-spanning-tree edge weights
// equals the finite degree-0 verbose death times.
inline std::vector<rational> mst_merge_weights(const metric_space<rational>& s) {
	struct edge {
		rational w;
		int i, j;
	};
	std::vector<edge> edges;
	for (int i = 0; i < s.n; ++i)
		for (int j = i + 1; j < s.n; ++j) edges.push_back({s(i, j), i, j});
	std::sort(edges.begin(), edges.end(), [](const edge& a, const edge& b) {
		if (!(a.w == b.w)) return a.w < b.w;
		return std::tie(a.i, a.j) < std::tie(b.i, b.j);
	});
	std::vector<int> parent(s.n);
	std::iota(parent.begin(), parent.end(), 0);
	std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
	std::vector<rational> weights;
	for (const auto& e : edges) {
		int a = find(e.i), b = find(e.j);
		if (a == b) continue;
		parent[a] = b;
		weights.push_back(e.w);
	}
	std::sort(weights.begin(), weights.end());
	return weights;
}

// Second, independently coded reduction: dense GF(2) columns as sorted index
// sets, processed in a different (still filtration-compatible) order that
// breaks diameter/dimension ties by *descending* vertex tuples.
inline std::vector<barcode<rational>> oracle_reduce_gf2(const metric_space<rational>& s) {
	struct osimplex {
		std::vector<int> verts;
		rational diam;
	};
	std::vector<osimplex> simplices;
	int n = s.n;
	std::vector<int> cur;
	auto rec = [&](auto&& self, int next, rational diam) -> void {
		if (!cur.empty()) simplices.push_back({cur, diam});
		if ((int)cur.size() == n) return;
		for (int v = next; v < n; ++v) {
			rational d2 = diam;
			for (int u : cur)
				if (d2 < s(u, v)) d2 = s(u, v);
			cur.push_back(v);
			self(self, v + 1, d2);
			cur.pop_back();
		}
	};
	rec(rec, 0, rational(0));
	std::sort(simplices.begin(), simplices.end(), [](const osimplex& a, const osimplex& b) {
		if (!(a.diam == b.diam)) return a.diam < b.diam;
		if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
		return b.verts < a.verts;  // descending tuple order
	});
	std::map<std::vector<int>, int> id_of;
	for (int i = 0; i < (int)simplices.size(); ++i) id_of[simplices[i].verts] = i;

	std::vector<std::set<int>> reduced(simplices.size());
	std::vector<int> owner(simplices.size(), -1);
	std::vector<int> killer(simplices.size(), -1);
	std::vector<char> creator(simplices.size(), 0);
	for (int id = 0; id < (int)simplices.size(); ++id) {
		std::set<int> col;
		const auto& verts = simplices[id].verts;
		if (verts.size() > 1) {
			for (size_t drop = 0; drop < verts.size(); ++drop) {
				std::vector<int> facet;
				for (size_t t = 0; t < verts.size(); ++t)
					if (t != drop) facet.push_back(verts[t]);
				col.insert(id_of.at(facet));
			}
		}
		while (!col.empty() && owner[*col.rbegin()] != -1) {
			for (int e : reduced[owner[*col.rbegin()]]) {
				if (col.count(e))
					col.erase(e);
				else
					col.insert(e);
			}
		}
		if (col.empty()) {
			creator[id] = 1;
		} else {
			owner[*col.rbegin()] = id;
			killer[*col.rbegin()] = id;
		}
		reduced[id] = std::move(col);
	}
	std::vector<barcode<rational>> fam(std::max(n - 1, 1));
	for (int id = 0; id < (int)simplices.size(); ++id) {
		if (!creator[id]) continue;
		int k = (int)simplices[id].verts.size() - 1;
		if (k >= (int)fam.size()) continue;
		if (killer[id] != -1)
			fam[k].push_back(finite_bar(simplices[id].diam, simplices[killer[id]].diam));
		else
			fam[k].push_back(infinite_bar(simplices[id].diam));
	}
	for (auto& b : fam) vph::canonicalize(b);
	return fam;
}

// Brute tripod count: all surjection pairs on z labelled points, deduped by
// the canonical sorted pair sequence.
inline uint64_t brute_tripod_count(int nx, int ny, int max_extra) {
	uint64_t total = 0;
	int zmin = std::max(nx, ny);
	for (int z = zmin; z <= zmin + max_extra; ++z) {
		std::set<std::vector<std::pair<int, int>>> seen;
		std::vector<int> fx(z, 0), fy(z, 0);
		auto surjective = [](const std::vector<int>& f, int n) {
			std::vector<char> hit(n, 0);
			for (int v : f) hit[v] = 1;
			for (int i = 0; i < n; ++i)
				if (!hit[i]) return false;
			return true;
		};
		auto next = [](std::vector<int>& f, int base) {
			for (size_t i = 0; i < f.size(); ++i) {
				if (++f[i] < base) return true;
				f[i] = 0;
			}
			return false;
		};
		do {
			if (!surjective(fx, nx)) continue;
			std::fill(fy.begin(), fy.end(), 0);
			do {
				if (!surjective(fy, ny)) continue;
				std::vector<std::pair<int, int>> key(z);
				for (int t = 0; t < z; ++t) key[t] = {fx[t], fy[t]};
				std::sort(key.begin(), key.end());
				seen.insert(key);
			} while (next(fy, ny));
		} while (next(fx, nx));
		total += seen.size();
	}
	return total;
}

}  // namespace vphtest
