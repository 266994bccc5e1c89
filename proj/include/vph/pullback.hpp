#pragma once

#include <map>
#include <vector>

#include "vph/barcode.hpp"
#include "vph/gromov_hausdorff.hpp"
#include "vph/interleaving.hpp"
#include "vph/matching.hpp"
#include "vph/tripods.hpp"

namespace vph {

// A pullback space written as the base space plus a sorted list of
// base-point indices to duplicate.
template <typename T> struct pullback_spec {
	metric_space<T> base;
	std::vector<int> repeats;  // ascending indices into the base

	pullback_spec(metric_space<T> b, std::vector<int> r) : base(std::move(b)), repeats(std::move(r)) {
		for (int j : repeats)
			if (j < 0 || j >= base.n) throw input_error("pullback spec: repeat index out of range");
		std::sort(repeats.begin(), repeats.end());
	}

	std::vector<int> multiplicities() const {
		std::vector<int> m(base.n, 0);
		for (int j : repeats) ++m[j];
		return m;
	}
};

template <typename T>
surjection pullback_surjection(const pullback_spec<T>& spec) {
	surjection phi;
	phi.image_size = spec.base.n;
	phi.domain_size = spec.base.n + (int)spec.repeats.size();
	phi.map.resize(phi.domain_size);
	for (int i = 0; i < spec.base.n; ++i) phi.map[i] = i;
	for (size_t t = 0; t < spec.repeats.size(); ++t) phi.map[spec.base.n + t] = spec.repeats[t];
	return phi;
}

template <typename T>
metric_space<T> make_pullback_space(const pullback_spec<T>& spec) {
	return pullback_metric(spec.base, pullback_surjection(spec));
}

namespace detail {

// Appends, for every k-element sub-multiset beta of the multiset given by
// `avail` (copies per base point), one diagonal point at diam([anchor, beta]).
template <typename T>
void append_submultiset_diagonals(const metric_space<T>& base, int anchor,
                                  const std::vector<int>& avail, int k, barcode<T>& out) {
	std::vector<int> chosen;  // distinct support of beta so far
	auto rec = [&](auto&& self, int v, int remaining, T diam) -> void {
		if (remaining == 0) {
			out.push_back({diam, extended<T>(diam)});
			return;
		}
		if (v == base.n) return;
		// take t copies of base point v, t = 0..min(avail, remaining)
		self(self, v + 1, remaining, diam);
		int cap = std::min(avail[v], remaining);
		if (cap == 0) return;
		T d2 = diam;
		if (d2 < base(anchor, v)) d2 = base(anchor, v);
		for (int u : chosen)
			if (d2 < base(u, v)) d2 = base(u, v);
		chosen.push_back(v);
		for (int t = 1; t <= cap; ++t) self(self, v + 1, remaining - t, d2);
		chosen.pop_back();
	};
	rec(rec, 0, k, T{});
}

}  // namespace detail

// Closed-form degree-k verbose barcode of the pullback space: the base
// barcode plus, for the i-th repeat x_j, one diagonal point
// diam([x_j, beta]) per k-element sub-multiset beta of the points available
// before it (everything except its parent, plus the earlier repeats).
template <typename T>
barcode<T> pullback_barcode_closed_form(const pullback_spec<T>& spec,
                                        const barcode_family<T>& base_family, int k) {
	if (k < 0) throw degree_out_of_range_error("DegreeOutOfRange: negative degree");
	barcode<T> out = k < (int)base_family.size() ? base_family[k] : barcode<T>{};
	int n = spec.base.n;
	std::vector<int> avail(n, 1);
	for (size_t i = 0; i < spec.repeats.size(); ++i) {
		int j = spec.repeats[i];
		--avail[j];  // the parent of the current repeat is excluded
		detail::append_submultiset_diagonals(spec.base, j, avail, k, out);
		avail[j] += 2;  // re-admit the parent and add the new copy
	}
	canonicalize(out);
	return out;
}

// Oracle route: materialize the pseudo-metric pullback space and reduce it.
template <typename T>
barcode<T> pullback_barcode_direct(const pullback_spec<T>& spec, int k, int field_char = 2,
                                   size_t size_cap = default_size_cap) {
	auto space = make_pullback_space(spec);
	if (k > space.n - 2) return {};
	auto fc = build_vr_fcc(space, k, size_cap);
	auto red = reduce(fc, field_char);
	auto pairing = group_pairing(fc, red);
	return verbose_barcode(fc, pairing, k);
}

// Degree-1 closed form by multiplicities: each base distance d(x_p, x_q)
// contributes m_p m_q + m_p + m_q diagonal points, plus C(m_p, 2) copies of
// (0,0) per base point.
template <typename T>
barcode<T> pullback_barcode_deg1(const metric_space<T>& base, const std::vector<int>& mult,
                                 const barcode_family<T>& base_family) {
	if ((int)mult.size() != base.n)
		throw dimension_mismatch_error("pullback deg1: multiplicity vector size mismatch");
	barcode<T> out = base_family.size() > 1 ? base_family[1] : barcode<T>{};
	for (int p = 0; p < base.n; ++p)
		for (int q = p + 1; q < base.n; ++q) {
			long long copies = (long long)mult[p] * mult[q] + mult[p] + mult[q];
			for (long long t = 0; t < copies; ++t)
				out.push_back({base(p, q), extended<T>(base(p, q))});
		}
	for (int p = 0; p < base.n; ++p) {
		long long zeros = (long long)mult[p] * (mult[p] - 1) / 2;
		for (long long t = 0; t < zeros; ++t) out.push_back({T{}, extended<T>(T{})});
	}
	canonicalize(out);
	return out;
}

// Finite degree-0 death times, descending, infinity removed.
template <typename T>
std::vector<T> finite_deaths_descending(const barcode<T>& b) {
	std::vector<T> out;
	for (const auto& p : b)
		if (p.death.finite) out.push_back(p.death.value);
	std::sort(out.begin(), out.end(), [](const T& a, const T& c) { return c < a; });
	return out;
}

// Exact pullback bottleneck distance in degree 0, from the sorted finite
// death times of both spaces: max over the paired prefix of |a_i - b_i|,
// then the unmatched tail of the longer list (those bars pair with added
// zero-length bars). Empty lists are allowed; one-point spaces contribute
// an empty list and the result degenerates to the other side's largest
// death.
template <typename T>
T hatdb_degree0(std::vector<T> a_desc, std::vector<T> b_desc) {
	for (size_t i = 1; i < a_desc.size(); ++i)
		if (a_desc[i - 1] < a_desc[i]) throw input_error("hatdb_degree0: list not descending");
	for (size_t i = 1; i < b_desc.size(); ++i)
		if (b_desc[i - 1] < b_desc[i]) throw input_error("hatdb_degree0: list not descending");
	if (a_desc.size() > b_desc.size()) std::swap(a_desc, b_desc);
	T best{};
	for (size_t i = 0; i < a_desc.size(); ++i) {
		T d = num_traits<T>::abs(a_desc[i] - b_desc[i]);
		if (best < d) best = d;
	}
	for (size_t i = a_desc.size(); i < b_desc.size(); ++i)
		if (best < b_desc[i]) best = b_desc[i];
	return best;
}

// All diameters realized by subsets of at most k+1 points; these are the
// only coordinates an added diagonal point of a degree-k pullback barcode
// can take.
template <typename T>
std::vector<T> diagonal_coordinate_set(const metric_space<T>& space, int k) {
	std::vector<T> vals{T{}};
	int cap = std::min(k + 1, space.n);
	std::vector<int> chosen;
	auto rec = [&](auto&& self, int v, T diam) -> void {
		if (!chosen.empty()) vals.push_back(diam);
		if ((int)chosen.size() == cap) return;
		for (int u = v; u < space.n; ++u) {
			T d2 = diam;
			for (int w : chosen)
				if (d2 < space(w, u)) d2 = space(w, u);
			chosen.push_back(u);
			self(self, u + 1, d2);
			chosen.pop_back();
		}
	};
	rec(rec, 0, T{});
	std::sort(vals.begin(), vals.end());
	vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
	return vals;
}

// Lower bound for the degree-k pullback bottleneck distance: a bottleneck
// matching between the two original verbose barcodes where a point may only
// retire to a diagonal coordinate the *other* space can realize in some
// pullback. Every tripod's matching restricts to such a matching, so this
// never exceeds the infimum.
template <typename T>
extended<T> hatdb_restricted_lower_bound(const metric_space<T>& x, const metric_space<T>& y,
                                         const barcode_family<T>& fam_x,
                                         const barcode_family<T>& fam_y, int k) {
	barcode<T> a = k < (int)fam_x.size() ? fam_x[k] : barcode<T>{};
	barcode<T> b = k < (int)fam_y.size() ? fam_y[k] : barcode<T>{};
	auto dx = diagonal_coordinate_set(x, k);
	auto dy = diagonal_coordinate_set(y, k);
	auto retire_cost = [](const bar<T>& p, const std::vector<T>& coords) -> extended<T> {
		if (!p.death.finite) return extended<T>::infinity();
		bool first = true;
		T best{};
		for (const T& c : coords) {
			T cost = std::max(num_traits<T>::abs(p.birth - c), num_traits<T>::abs(p.death.value - c));
			if (first || cost < best) best = cost;
			first = false;
		}
		return first ? extended<T>::infinity() : extended<T>(best);
	};
	std::vector<extended<T>> da, db;
	for (const auto& p : a) da.push_back(retire_cost(p, dy));
	for (const auto& p : b) db.push_back(retire_cost(p, dx));
	return detail::diagonal_matching(a, b, da, db).cost;
}

struct hatdb_options {
	int field_char = 2;
	size_t size_cap = default_size_cap;
	int degree_cap = 3;  // largest degree the tripod search accepts
	int z_cap = 8;       // largest pullback size the tripod search accepts
	bool force_search = false;  // search even in degree 0 (testing hook)
};

template <typename T> struct hatdb_result {
	int degree = 0;
	int max_extra = 0;
	int z_max = 0;                 // largest pullback size enumerated
	extended<T> bound{};           // upper bound on the infimum
	extended<T> lower{};           // best certified lower bound
	bool certified = false;        // bound == lower
	bool via_formula = false;      // degree 0 exact route
	tripod witness;                // tripod attaining the bound
	bool has_witness = false;
	bool has_min_dis = false;
	extended<T> min_dis{};         // smallest distortion among enumerated tripods
	uint64_t tripods_enumerated = 0;
};

namespace detail {

// Degree-k verbose barcode of the pullback of `base` with the given repeat
// multiplicities; degree 0 and 1 use the closed forms, higher degrees
// reduce the materialized space.
template <typename T>
barcode<T> pullback_degree_barcode(const metric_space<T>& base, const barcode_family<T>& fam,
                                   const std::vector<int>& mult, int k, const hatdb_options& opts) {
	std::vector<int> repeats;
	for (int i = 0; i < (int)mult.size(); ++i)
		for (int t = 0; t < mult[i]; ++t) repeats.push_back(i);
	if (k == 0) {
		barcode<T> out = fam.empty() ? barcode<T>{} : fam[0];
		for (size_t t = 0; t < repeats.size(); ++t) out.push_back({T{}, extended<T>(T{})});
		canonicalize(out);
		return out;
	}
	if (k == 1) return pullback_barcode_deg1(base, mult, fam);
	pullback_spec<T> spec(base, repeats);
	int z = base.n + (int)repeats.size();
	if (k > z - 2) return {};
	return pullback_barcode_direct(spec, k, opts.field_char, opts.size_cap);
}

}  // namespace detail

// Upper bound for the degree-k pullback bottleneck distance by minimizing
// the matching distance over all tripods with z_size <= max(|X|,|Y|) +
// max_extra. Degree 0 routes through the exact formula unless forced to
// search. The result carries the enumeration bound, the witness tripod and
// a certification flag: the bound is exact whenever it meets the reported
// lower bound.
template <typename T>
hatdb_result<T> hatdb_upper_bound(const metric_space<T>& x, const metric_space<T>& y,
                                  const barcode_family<T>& fam_x, const barcode_family<T>& fam_y,
                                  int k, int max_extra, const hatdb_options& opts = {}) {
	if (k < 0) throw degree_out_of_range_error("DegreeOutOfRange: negative degree");
	if (k > opts.degree_cap)
		throw budget_error("BudgetExceeded: degree " + std::to_string(k) + " beyond search cap " +
		                   std::to_string(opts.degree_cap));
	if (max_extra < 0) throw input_error("hatdb: max_extra must be >= 0");
	int zmin = std::max(x.n, y.n);
	if (zmin > opts.z_cap) throw budget_error("BudgetExceeded: spaces too large for tripod search");

	hatdb_result<T> out;
	out.degree = k;
	out.max_extra = max_extra;
	out.z_max = std::min(zmin + max_extra, opts.z_cap);

	extended<T> db_lower;
	{
		barcode<T> ca = concise_barcode(k < (int)fam_x.size() ? fam_x[k] : barcode<T>{});
		barcode<T> cb = concise_barcode(k < (int)fam_y.size() ? fam_y[k] : barcode<T>{});
		db_lower = bottleneck_distance(ca, cb).cost;
	}
	out.lower = max_ext(db_lower, hatdb_restricted_lower_bound(x, y, fam_x, fam_y, k));

	if (k == 0 && !opts.force_search) {
		out.via_formula = true;
		out.bound = extended<T>(
		    hatdb_degree0(finite_deaths_descending(fam_x.empty() ? barcode<T>{} : fam_x[0]),
		                  finite_deaths_descending(fam_y.empty() ? barcode<T>{} : fam_y[0])));
		out.lower = out.bound;  // the formula is exact
		out.certified = true;
		int z = zmin;
		out.witness.phi_x.domain_size = out.witness.phi_y.domain_size = z;
		out.witness.phi_x.image_size = x.n;
		out.witness.phi_y.image_size = y.n;
		for (int t = 0; t < z; ++t) {
			out.witness.phi_x.map.push_back(std::min(t, x.n - 1));
			out.witness.phi_y.map.push_back(std::min(t, y.n - 1));
		}
		return out;
	}

	std::map<std::vector<int>, barcode<T>> cache_x, cache_y;
	std::map<std::pair<std::vector<int>, std::vector<int>>, extended<T>> cost_cache;
	auto side_barcode = [&](std::map<std::vector<int>, barcode<T>>& cache,
	                        const metric_space<T>& base, const barcode_family<T>& fam,
	                        const std::vector<int>& mult) -> const barcode<T>& {
		auto it = cache.find(mult);
		if (it == cache.end())
			it = cache.emplace(mult, detail::pullback_degree_barcode(base, fam, mult, k, opts)).first;
		return it->second;
	};

	bool first = true;
	enumerate_tripods(x.n, y.n, out.z_max - zmin, [&](const tripod& r) {
		++out.tripods_enumerated;
		std::vector<int> mx(x.n, -1), my(y.n, -1);
		for (int v : r.phi_x.map) ++mx[v];
		for (int v : r.phi_y.map) ++my[v];
		extended<T> cost;
		auto key = std::make_pair(mx, my);
		auto it = cost_cache.find(key);
		if (it != cost_cache.end()) {
			cost = it->second;
		} else {
			cost = matching_distance(side_barcode(cache_x, x, fam_x, mx),
			                         side_barcode(cache_y, y, fam_y, my))
			           .cost;
			cost_cache.emplace(std::move(key), cost);
		}
		T dis = distortion(r, x, y);
		if (!out.has_min_dis || extended<T>(dis) < out.min_dis) out.min_dis = extended<T>(dis);
		out.has_min_dis = true;
		if (first || cost < out.bound) {
			out.bound = cost;
			out.witness = r;
			out.has_witness = true;
			first = false;
		}
	});
	out.certified = !first && close_ext(out.bound, out.lower);
	return out;
}

template <typename T>
hatdb_result<T> hatdb_upper_bound(const metric_space<T>& x, const metric_space<T>& y, int k,
                                  int max_extra, const hatdb_options& opts = {}) {
	auto fam_x = vr_verbose_barcodes(x, opts.field_char, opts.size_cap);
	auto fam_y = vr_verbose_barcodes(y, opts.field_char, opts.size_cap);
	return hatdb_upper_bound(x, y, fam_x, fam_y, k, max_extra, opts);
}

// Pullback interleaving distance bound: the sup over degrees (up to the
// search cap) of the per-degree pullback bottleneck bounds.
template <typename T> struct hatdi_result {
	extended<T> value{};
	bool certified = false;
	std::vector<hatdb_result<T>> per_degree;
};

template <typename T>
hatdi_result<T> hatdi(const metric_space<T>& x, const metric_space<T>& y, int max_extra,
                      const hatdb_options& opts = {}) {
	auto fam_x = vr_verbose_barcodes(x, opts.field_char, opts.size_cap);
	auto fam_y = vr_verbose_barcodes(y, opts.field_char, opts.size_cap);
	hatdi_result<T> out;
	out.value = extended<T>(T{});
	extended<T> lower_sup{T{}};
	int zmax = std::min(std::max(x.n, y.n) + max_extra, opts.z_cap);
	int top_degree = std::min(opts.degree_cap, zmax - 2);
	for (int kk = 0; kk <= top_degree; ++kk) {
		out.per_degree.push_back(hatdb_upper_bound(x, y, fam_x, fam_y, kk, max_extra, opts));
		out.value = max_ext(out.value, out.per_degree.back().bound);
		lower_sup = max_ext(lower_sup, out.per_degree.back().lower);
	}
	out.certified = close_ext(out.value, lower_sup);
	return out;
}

// The stability chain d_B(concise) <= pullback bound <= 2 d_GH for one
// degree. The right inequality is asserted against 2 d_GH only when the
// bound is certified exact; otherwise the weaker per-tripod comparison
// bound <= min enumerated distortion applies.
template <typename T> struct stability_report {
	int degree = 0;
	extended<T> db_concise{};
	hatdb_result<T> hat;
	T two_dgh{};
	bool left_ok = false;
	bool right_checked = false;
	bool right_ok = true;
	bool weak_ok = true;
	bool ok = false;
};

template <typename T>
stability_report<T> stability_chain_check(const metric_space<T>& x, const metric_space<T>& y,
                                          int k, int max_extra, const hatdb_options& opts = {},
                                          gh_budget budget = {}) {
	auto fam_x = vr_verbose_barcodes(x, opts.field_char, opts.size_cap);
	auto fam_y = vr_verbose_barcodes(y, opts.field_char, opts.size_cap);
	stability_report<T> rep;
	rep.degree = k;
	{
		barcode<T> ca = concise_barcode(k < (int)fam_x.size() ? fam_x[k] : barcode<T>{});
		barcode<T> cb = concise_barcode(k < (int)fam_y.size() ? fam_y[k] : barcode<T>{});
		rep.db_concise = bottleneck_distance(ca, cb).cost;
	}
	rep.hat = hatdb_upper_bound(x, y, fam_x, fam_y, k, max_extra, opts);
	rep.two_dgh = gromov_hausdorff_exact(x, y, budget).dis;
	auto le = [](const extended<T>& a, const extended<T>& b) { return a <= b || close_ext(a, b); };
	rep.left_ok = le(rep.db_concise, rep.hat.bound);
	if (rep.hat.certified) {
		rep.right_checked = true;
		rep.right_ok = le(rep.hat.bound, extended<T>(rep.two_dgh));
	}
	if (rep.hat.has_min_dis) rep.weak_ok = le(rep.hat.bound, rep.hat.min_dis);
	rep.ok = rep.left_ok && rep.weak_ok && (!rep.right_checked || rep.right_ok);
	return rep;
}

}  // namespace vph
