#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "vph/metric_space.hpp"

namespace vph {

struct gh_budget {
	uint64_t max_nodes = 100'000'000;  // search nodes before BudgetExceeded
};

template <typename T> struct gh_result {
	T dis{};       // minimal correspondence distortion = 2 * d_GH
	T value{};     // d_GH itself
	std::vector<std::pair<int, int>> correspondence;
	uint64_t nodes = 0;
};

namespace detail {

// Branch-and-bound over minimal correspondences, factored as a pair of maps
// f: X -> Y and g: Y -> X; the correspondence graph(f) + transpose(graph(g))
// is surjective both ways and every correspondence contains one of this
// shape with no larger distortion, so the minimum is exact. Assignments are
// pruned against the best distortion found so far.
template <typename T> struct gh_search {
	const metric_space<T>& x;
	const metric_space<T>& y;
	uint64_t budget;
	uint64_t nodes = 0;
	std::vector<int> f, g, best_f, best_g;
	T best{};
	bool have_best = false;

	gh_search(const metric_space<T>& x_, const metric_space<T>& y_, uint64_t budget_)
	    : x(x_), y(y_), budget(budget_), f(x_.n, -1), g(y_.n, -1) {}

	void consider(const T& dis) {
		if (!have_best || dis < best) {
			best = dis;
			best_f = f;
			best_g = g;
			have_best = true;
		}
	}

	void assign_g(int j, const T& current) {
		if (have_best && !(current < best)) return;
		if (j == y.n) {
			consider(current);
			return;
		}
		if (++nodes > budget) throw budget_error("BudgetExceeded: correspondence search");
		for (int i = 0; i < x.n; ++i) {
			T m = current;
			bool prune = false;
			for (int j2 = 0; j2 < j && !prune; ++j2) {
				T d = num_traits<T>::abs(x(g[j2], i) - y(j2, j));
				if (m < d) m = d;
				if (have_best && !(m < best)) prune = true;
			}
			for (int i2 = 0; i2 < x.n && !prune; ++i2) {
				T d = num_traits<T>::abs(x(i2, i) - y(f[i2], j));
				if (m < d) m = d;
				if (have_best && !(m < best)) prune = true;
			}
			if (prune) continue;
			g[j] = i;
			assign_g(j + 1, m);
			g[j] = -1;
		}
	}

	void assign_f(int i, const T& current) {
		if (have_best && !(current < best)) return;
		if (i == x.n) {
			assign_g(0, current);
			return;
		}
		if (++nodes > budget) throw budget_error("BudgetExceeded: correspondence search");
		for (int j = 0; j < y.n; ++j) {
			T m = current;
			bool prune = false;
			for (int i2 = 0; i2 < i && !prune; ++i2) {
				T d = num_traits<T>::abs(x(i2, i) - y(f[i2], j));
				if (m < d) m = d;
				if (have_best && !(m < best)) prune = true;
			}
			if (prune) continue;
			f[i] = j;
			assign_f(i + 1, m);
			f[i] = -1;
		}
	}
};

}  // namespace detail

// Exact Gromov-Hausdorff distance between two small finite metric spaces:
// half the minimal distortion over correspondences (subsets of X x Y
// surjective on both factors). Intended for n up to about 6; throws
// BudgetExceeded beyond the node budget.
template <typename T>
gh_result<T> gromov_hausdorff_exact(const metric_space<T>& x, const metric_space<T>& y,
                                    gh_budget budget = {}) {
	detail::gh_search<T> search(x, y, budget.max_nodes);
	// Seed with the greedy diagonal-ish correspondence so pruning bites early.
	for (int i = 0; i < x.n; ++i) search.f[i] = std::min(i, y.n - 1);
	for (int j = 0; j < y.n; ++j) search.g[j] = std::min(j, x.n - 1);
	{
		T m{};
		for (int i = 0; i < x.n; ++i)
			for (int i2 = 0; i2 < i; ++i2)
				m = std::max(m, num_traits<T>::abs(x(i2, i) - y(search.f[i2], search.f[i])));
		for (int j = 0; j < y.n; ++j)
			for (int j2 = 0; j2 < j; ++j2)
				m = std::max(m, num_traits<T>::abs(x(search.g[j2], search.g[j]) - y(j2, j)));
		for (int i = 0; i < x.n; ++i)
			for (int j = 0; j < y.n; ++j)
				m = std::max(m, num_traits<T>::abs(x(i, search.g[j]) - y(search.f[i], j)));
		search.consider(m);
	}
	std::fill(search.f.begin(), search.f.end(), -1);
	std::fill(search.g.begin(), search.g.end(), -1);
	search.assign_f(0, T{});

	gh_result<T> out;
	out.dis = search.best;
	out.value = num_traits<T>::half(search.best);
	out.nodes = search.nodes;
	std::set<std::pair<int, int>> pairs;
	for (int i = 0; i < x.n; ++i) pairs.insert({i, search.best_f[i]});
	for (int j = 0; j < y.n; ++j) pairs.insert({search.best_g[j], j});
	out.correspondence.assign(pairs.begin(), pairs.end());
	return out;
}

// Exhaustive isometry test by bijection search (distance-preserving).
template <typename T>
bool is_isometric(const metric_space<T>& x, const metric_space<T>& y) {
	if (x.n != y.n) return false;
	if (x.n > 8) throw budget_error("BudgetExceeded: isometry search beyond 8 points");
	std::vector<int> perm(x.n);
	for (int i = 0; i < x.n; ++i) perm[i] = i;
	do {
		bool ok = true;
		for (int i = 0; i < x.n && ok; ++i)
			for (int j = i + 1; j < x.n && ok; ++j)
				if (!(x(i, j) == y(perm[i], perm[j]))) ok = false;
		if (ok) return true;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return false;
}

}  // namespace vph
