#pragma once

#include <algorithm>
#include <vector>

#include "vph/barcode.hpp"

namespace vph {

// Extended-plane l-infinity metric between barcode points: max coordinate
// displacement when both deaths are finite, birth displacement when both
// are infinite, infinity otherwise.
template <typename T>
extended<T> dinf(const bar<T>& a, const bar<T>& b) {
	if (a.death.finite != b.death.finite) return extended<T>::infinity();
	T db = num_traits<T>::abs(a.birth - b.birth);
	if (!a.death.finite) return db;
	T dd = num_traits<T>::abs(a.death.value - b.death.value);
	return db < dd ? dd : db;
}

// Half-persistence: distance from a finite point to the diagonal.
template <typename T>
T diagonal_gap(const bar<T>& a) {
	return num_traits<T>::half(a.death.value - a.birth);
}

template <typename T> struct matching_result {
	extended<T> cost{};
	// Index pairs (i in A, j in B); -1 marks a diagonal match. Empty when
	// cost is infinite.
	std::vector<std::pair<int, int>> assignment;
	// Thresholds probed by the binary search, with feasibility outcomes.
	std::vector<std::pair<extended<T>, bool>> threshold_trace;
};

namespace detail {

// Maximum bipartite matching by augmenting paths with index-order
// tie-breaking; adj[l] lists right neighbours of left node l.
class bipartite_matcher {
public:
	explicit bipartite_matcher(int nright) : match_right_(nright, -1) {}

	int run(const std::vector<std::vector<int>>& adj) {
		int size = 0;
		std::fill(match_right_.begin(), match_right_.end(), -1);
		match_left_.assign(adj.size(), -1);
		for (int l = 0; l < (int)adj.size(); ++l) {
			seen_.assign(match_right_.size(), 0);
			if (augment(adj, l)) ++size;
		}
		return size;
	}

	const std::vector<int>& match_left() const { return match_left_; }

private:
	std::vector<int> match_right_;
	std::vector<int> match_left_;
	std::vector<char> seen_;

	bool augment(const std::vector<std::vector<int>>& adj, int l) {
		for (int r : adj[l]) {
			if (seen_[r]) continue;
			seen_[r] = 1;
			if (match_right_[r] == -1 || augment(adj, match_right_[r])) {
				match_right_[r] = l;
				match_left_[l] = r;
				return true;
			}
		}
		return false;
	}
};

// Min-max bijection between the infinite-death bars of both sides (they can
// only be matched to each other, and sorted births are optimal). Returns
// false when the counts differ.
template <typename T>
bool match_infinite_part(const barcode<T>& a, const barcode<T>& b,
                         std::vector<std::pair<int, int>>& assignment, extended<T>& cost) {
	std::vector<int> ia, ib;
	for (int i = 0; i < (int)a.size(); ++i)
		if (!a[i].death.finite) ia.push_back(i);
	for (int j = 0; j < (int)b.size(); ++j)
		if (!b[j].death.finite) ib.push_back(j);
	if (ia.size() != ib.size()) return false;
	auto by_birth_desc = [&](const barcode<T>& bc) {
		return [&bc](int u, int v) {
			if (!(bc[u].birth == bc[v].birth)) return bc[v].birth < bc[u].birth;
			return u < v;
		};
	};
	std::sort(ia.begin(), ia.end(), by_birth_desc(a));
	std::sort(ib.begin(), ib.end(), by_birth_desc(b));
	for (size_t t = 0; t < ia.size(); ++t) {
		T d = num_traits<T>::abs(a[ia[t]].birth - b[ib[t]].birth);
		if (cost < extended<T>(d)) cost = extended<T>(d);
		assignment.emplace_back(ia[t], ib[t]);
	}
	return true;
}

}  // namespace detail

// Min over bijections of the max displacement; infinite when the
// cardinalities (total, or per death class) differ. Infinity is a value,
// not an error.
template <typename T>
matching_result<T> matching_distance(const barcode<T>& a, const barcode<T>& b) {
	matching_result<T> out;
	if (a.size() != b.size()) {
		out.cost = extended<T>::infinity();
		return out;
	}
	extended<T> cost{T{}};
	if (!detail::match_infinite_part(a, b, out.assignment, cost)) {
		out.cost = extended<T>::infinity();
		out.assignment.clear();
		return out;
	}

	std::vector<int> fa, fb;
	for (int i = 0; i < (int)a.size(); ++i)
		if (a[i].death.finite) fa.push_back(i);
	for (int j = 0; j < (int)b.size(); ++j)
		if (b[j].death.finite) fb.push_back(j);
	int m = (int)fa.size();
	if (m > 0) {
		std::vector<std::vector<T>> d(m, std::vector<T>(m));
		std::vector<T> candidates;
		for (int i = 0; i < m; ++i)
			for (int j = 0; j < m; ++j) {
				d[i][j] = dinf(a[fa[i]], b[fb[j]]).value;
				candidates.push_back(d[i][j]);
			}
		std::sort(candidates.begin(), candidates.end());
		candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

		detail::bipartite_matcher matcher(m);
		std::vector<std::vector<int>> adj(m);
		auto feasible = [&](const T& t) {
			for (int i = 0; i < m; ++i) {
				adj[i].clear();
				for (int j = 0; j < m; ++j)
					if (num_traits<T>::feas_le(d[i][j], t)) adj[i].push_back(j);
			}
			return matcher.run(adj) == m;
		};
		int lo = 0, hi = (int)candidates.size() - 1;
		while (lo < hi) {
			int mid = (lo + hi) / 2;
			bool ok = feasible(candidates[mid]);
			out.threshold_trace.emplace_back(extended<T>(candidates[mid]), ok);
			if (ok)
				hi = mid;
			else
				lo = mid + 1;
		}
		feasible(candidates[lo]);
		out.threshold_trace.emplace_back(extended<T>(candidates[lo]), true);
		if (cost < extended<T>(candidates[lo])) cost = extended<T>(candidates[lo]);
		for (int i = 0; i < m; ++i) out.assignment.emplace_back(fa[i], fb[matcher.match_left()[i]]);
	}
	out.cost = cost;
	std::sort(out.assignment.begin(), out.assignment.end());
	return out;
}

// Min-max matching between two descending lists of reals; optimal pairing
// is index-wise.
template <typename T>
T sorted_matching(const std::vector<T>& a_desc, const std::vector<T>& b_desc) {
	if (a_desc.size() != b_desc.size())
		throw length_mismatch_error("LengthMismatch: lists of sizes " +
		                            std::to_string(a_desc.size()) + " and " +
		                            std::to_string(b_desc.size()));
	for (size_t i = 1; i < a_desc.size(); ++i)
		if (a_desc[i - 1] < a_desc[i] || b_desc[i - 1] < b_desc[i])
			throw input_error("sorted_matching: inputs must be sorted descending");
	T best{};
	for (size_t i = 0; i < a_desc.size(); ++i) {
		T d = num_traits<T>::abs(a_desc[i] - b_desc[i]);
		if (best < d) best = d;
	}
	return best;
}

namespace detail {

// Shared solver for the diagonal-augmented matchings. Each finite point may
// match a finite point of the other side at dinf cost, or "its" diagonal at
// the given per-point cost (infinite cost forbids the diagonal). Infinite
// bars are segregated as in matching_distance.
template <typename T>
matching_result<T> diagonal_matching(const barcode<T>& a, const barcode<T>& b,
                                     const std::vector<extended<T>>& diag_a,
                                     const std::vector<extended<T>>& diag_b) {
	matching_result<T> out;
	extended<T> cost{T{}};
	if (!match_infinite_part(a, b, out.assignment, cost)) {
		out.cost = extended<T>::infinity();
		out.assignment.clear();
		return out;
	}

	std::vector<int> fa, fb;
	for (int i = 0; i < (int)a.size(); ++i)
		if (a[i].death.finite) fa.push_back(i);
	for (int j = 0; j < (int)b.size(); ++j)
		if (b[j].death.finite) fb.push_back(j);
	int na = (int)fa.size(), nb = (int)fb.size();
	if (na + nb > 0) {
		std::vector<std::vector<T>> d(na, std::vector<T>(nb));
		std::vector<T> candidates;
		for (int i = 0; i < na; ++i)
			for (int j = 0; j < nb; ++j) {
				d[i][j] = dinf(a[fa[i]], b[fb[j]]).value;
				candidates.push_back(d[i][j]);
			}
		for (int i = 0; i < na; ++i)
			if (diag_a[fa[i]].finite) candidates.push_back(diag_a[fa[i]].value);
		for (int j = 0; j < nb; ++j)
			if (diag_b[fb[j]].finite) candidates.push_back(diag_b[fb[j]].value);
		std::sort(candidates.begin(), candidates.end());
		candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
		if (candidates.empty()) {
			out.cost = extended<T>::infinity();
			out.assignment.clear();
			return out;
		}

		// Left: points of A, then diagonal slots of B's points. Right:
		// points of B, then diagonal slots of A's points. A diagonal slot of
		// one side matches the corresponding point, or any slot of the other
		// side (diagonal-to-diagonal, always free).
		int nl = na + nb, nr = nb + na;
		detail::bipartite_matcher matcher(nr);
		std::vector<std::vector<int>> adj(nl);
		auto feasible = [&](const T& t) {
			for (int i = 0; i < na; ++i) {
				adj[i].clear();
				for (int j = 0; j < nb; ++j)
					if (num_traits<T>::feas_le(d[i][j], t)) adj[i].push_back(j);
				if (diag_a[fa[i]].finite && num_traits<T>::feas_le(diag_a[fa[i]].value, t))
					adj[i].push_back(nb + i);
			}
			for (int j = 0; j < nb; ++j) {
				auto& row = adj[na + j];
				row.clear();
				if (diag_b[fb[j]].finite && num_traits<T>::feas_le(diag_b[fb[j]].value, t))
					row.push_back(j);
				for (int i = 0; i < na; ++i) row.push_back(nb + i);
			}
			return matcher.run(adj) == nl;
		};
		int lo = 0, hi = (int)candidates.size() - 1;
		bool any = feasible(candidates[hi]);
		out.threshold_trace.emplace_back(extended<T>(candidates[hi]), any);
		if (!any) {
			out.cost = extended<T>::infinity();
			out.assignment.clear();
			return out;
		}
		while (lo < hi) {
			int mid = (lo + hi) / 2;
			bool ok = feasible(candidates[mid]);
			out.threshold_trace.emplace_back(extended<T>(candidates[mid]), ok);
			if (ok)
				hi = mid;
			else
				lo = mid + 1;
		}
		feasible(candidates[lo]);
		out.threshold_trace.emplace_back(extended<T>(candidates[lo]), true);
		if (cost < extended<T>(candidates[lo])) cost = extended<T>(candidates[lo]);
		for (int i = 0; i < na; ++i) {
			int r = matcher.match_left()[i];
			out.assignment.emplace_back(fa[i], r < nb ? fb[r] : -1);
		}
		for (int j = 0; j < nb; ++j)
			if (matcher.match_left()[na + j] == j) out.assignment.emplace_back(-1, fb[j]);
	}
	out.cost = cost;
	std::sort(out.assignment.begin(), out.assignment.end());
	return out;
}

}  // namespace detail

// Bottleneck distance: the matching distance after augmenting both sides
// with the diagonal. Finite points may be matched to their diagonal
// projection at half-persistence cost; infinite bars must match each other.
template <typename T>
matching_result<T> bottleneck_distance(const barcode<T>& a, const barcode<T>& b) {
	std::vector<extended<T>> da, db;
	for (const auto& p : a)
		da.push_back(p.death.finite ? extended<T>(diagonal_gap(p)) : extended<T>::infinity());
	for (const auto& p : b)
		db.push_back(p.death.finite ? extended<T>(diagonal_gap(p)) : extended<T>::infinity());
	return detail::diagonal_matching(a, b, da, db);
}

// Asserts d_B(A,B) <= d_M(A + A1, B + B1) for diagonal paddings A1, B1 that
// equalize the cardinalities; property-test entry point.
template <typename T>
bool db_le_dm_check(const barcode<T>& a, const barcode<T>& b, const barcode<T>& a1,
                    const barcode<T>& b1) {
	if (a.size() + a1.size() != b.size() + b1.size())
		throw cardinality_mismatch_error("CardinalityMismatch: padded multisets differ in size");
	barcode<T> ap = a, bp = b;
	ap.insert(ap.end(), a1.begin(), a1.end());
	bp.insert(bp.end(), b1.begin(), b1.end());
	auto lhs = bottleneck_distance(a, b);
	auto rhs = matching_distance(ap, bp);
	return lhs.cost <= rhs.cost;
}

}  // namespace vph
