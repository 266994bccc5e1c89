#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vph/barcode.hpp"

namespace vph {

// The independent anti-bug oracle for reduce: verifies, degree by degree,
// that the reduction's bases realize a singular value decomposition of the
// boundary map C_{k+1} -> Ker d_k, and that the claimed pairing matches the
// filtration levels of those bases. Orthogonality is checked by exhaustive
// evaluation of the filtration function on all nonzero field-coefficient
// combinations, so it stays honest on small instances only.

struct svd_options {
	size_t max_basis = 14;            // vectors per orthogonality check
	size_t max_combinations = 1u << 21;
};

struct svd_violation {
	int degree = 0;
	std::string check;
	std::string detail;
};

struct svd_report {
	bool pass = true;
	std::vector<svd_violation> violations;

	void fail(int degree, std::string check, std::string detail) {
		pass = false;
		violations.push_back({degree, std::move(check), std::move(detail)});
	}
};

namespace detail {

// Filtration level of a chain: max simplex diameter over its support;
// nullopt for the zero chain.
template <typename T>
std::optional<T> chain_level(const filtered_complex<T>& fc, const sparse_vec& v) {
	std::optional<T> level;
	for (auto [id, c] : v.e) {
		(void)c;
		if (!level || *level < fc[id].diameter) level = fc[id].diameter;
	}
	return level;
}

template <typename T>
sparse_vec chain_boundary(const filtered_complex<T>& fc, const sparse_vec& v,
                          const prime_field& f) {
	sparse_vec out;
	for (auto [id, c] : v.e) {
		sparse_vec b = boundary_column(fc, id, f);
		add_scaled(out, b, c, f);
	}
	return out;
}

// Rank of the dim-d boundary matrix, by plain Gaussian elimination on the
// raw columns (no reuse of the reduction under test).
template <typename T>
int boundary_rank(const filtered_complex<T>& fc, int d, const prime_field& f) {
	if (d <= 0 || d >= (int)fc.by_dim.size()) return 0;
	std::vector<sparse_vec> cols;
	for (int id : fc.by_dim[d]) cols.push_back(boundary_column(fc, id, f));
	int rank = 0;
	std::vector<std::pair<int, sparse_vec>> pivots;  // (pivot row, column)
	for (auto& col : cols) {
		bool again = true;
		while (again && !col.empty()) {
			again = false;
			for (auto& [prow, pcol] : pivots)
				if (!col.empty() && col.pivot() == prow) {
					int c = f.neg(f.mul(col.pivot_coeff(), f.inv(pcol.pivot_coeff())));
					add_scaled(col, pcol, c, f);
					again = true;
				}
		}
		if (!col.empty()) {
			pivots.emplace_back(col.pivot(), col);
			++rank;
		}
	}
	return rank;
}

// Exhaustively verifies that ell(sum c_i w_i) == max over nonzero c_i of
// ell(w_i) for every nonzero coefficient tuple. Returns an explanation of
// the first failure, if any.
template <typename T>
std::optional<std::string> orthogonality_violation(const filtered_complex<T>& fc,
                                                   const std::vector<const sparse_vec*>& w,
                                                   const prime_field& f,
                                                   const svd_options& opts) {
	size_t m = w.size();
	if (m == 0) return std::nullopt;
	if (m > opts.max_basis)
		throw oracle_cap_error("OracleCapExceeded: " + std::to_string(m) + " basis vectors");
	double combos = 1;
	for (size_t i = 0; i < m; ++i) combos *= f.p;
	if (combos > (double)opts.max_combinations)
		throw oracle_cap_error("OracleCapExceeded: too many coefficient combinations");

	std::vector<T> levels(m);
	std::vector<int> support;  // union of supports
	{
		std::vector<char> seen(fc.simplices.size(), 0);
		for (size_t i = 0; i < m; ++i) {
			auto lv = chain_level(fc, *w[i]);
			if (!lv) return "zero vector in collection";
			levels[i] = *lv;
			for (auto [id, c] : w[i]->e) {
				(void)c;
				if (!seen[id]) {
					seen[id] = 1;
					support.push_back(id);
				}
			}
		}
	}
	std::vector<int> dense(fc.simplices.size(), 0);
	std::vector<int> coeff(m, 0);
	auto add_vector = [&](size_t i) {
		for (auto [id, c] : w[i]->e) dense[id] = f.norm(dense[id] + c);
	};
	// Odometer over coefficient tuples; each digit bump adds its vector once.
	while (true) {
		size_t pos = 0;
		while (pos < m) {
			add_vector(pos);
			coeff[pos] = (coeff[pos] + 1) % f.p;
			if (coeff[pos] != 0) break;
			++pos;
		}
		if (pos == m) break;  // wrapped around: all tuples visited

		std::optional<T> expect;
		for (size_t i = 0; i < m; ++i)
			if (coeff[i] != 0 && (!expect || *expect < levels[i])) expect = levels[i];
		std::optional<T> got;
		for (int id : support)
			if (dense[id] != 0 && (!got || *got < fc[id].diameter)) got = fc[id].diameter;
		if (!got || !(*got == *expect)) {
			std::string msg = "combination has level ";
			msg += got ? num_traits<T>::str(*got) : std::string("-inf");
			msg += ", expected " + num_traits<T>::str(*expect);
			return msg;
		}
	}
	return std::nullopt;
}

}  // namespace detail

template <typename T>
svd_report check_svd(const filtered_complex<T>& fc, const reduction_result& red,
                     const persistence_pairing& claim, svd_options opts = {}) {
	prime_field f(red.field_char);
	svd_report report;

	auto level_str = [&](const std::optional<T>& l) {
		return l ? num_traits<T>::str(*l) : std::string("-inf");
	};

	for (int k = 0; k <= fc.max_dim; ++k) {
		const auto& pairs = claim.pairs[k];
		const auto& unpaired = claim.unpaired[k];
		int r = (int)pairs.size();
		int dim_source = fc.count(k + 1);
		int rank = detail::boundary_rank(fc, k + 1, f);
		int dim_kernel_target = fc.count(k) - detail::boundary_rank(fc, k, f);

		std::vector<char> used(fc.simplices.size(), 0);
		bool shape_ok = true;
		for (auto [creator, destroyer] : pairs) {
			if (fc[creator].dim() != k || fc[destroyer].dim() != k + 1 || used[creator] ||
			    used[destroyer]) {
				report.fail(k, "pairing-well-formed", "bad or repeated pair members");
				shape_ok = false;
				break;
			}
			used[creator] = used[destroyer] = 1;
		}
		for (int u : unpaired) {
			if (!shape_ok) break;
			if (fc[u].dim() != k || used[u]) {
				report.fail(k, "pairing-well-formed", "bad or repeated unpaired creator");
				shape_ok = false;
				break;
			}
			used[u] = 1;
		}
		if (!shape_ok) continue;

		// Ordered source basis: paired columns first, then the kernel columns.
		std::vector<const sparse_vec*> y;
		std::vector<const sparse_vec*> x;
		for (auto [creator, destroyer] : pairs) {
			(void)creator;
			y.push_back(&red.V[destroyer]);
			x.push_back(&red.R[destroyer]);
		}
		if (k + 1 < (int)fc.by_dim.size())
			for (int id : fc.by_dim[k + 1])
				if (!used[id]) y.push_back(&red.V[id]);
		for (int u : unpaired) x.push_back(&red.V[u]);

		if ((int)y.size() != dim_source)
			report.fail(k, "source-basis", "size " + std::to_string(y.size()) + " != dim " +
			                                   std::to_string(dim_source));
		if (r != rank)
			report.fail(k, "image-basis", "claimed rank " + std::to_string(r) +
			                                  " != boundary rank " + std::to_string(rank));
		if ((int)x.size() != dim_kernel_target)
			report.fail(k, "target-basis", "size " + std::to_string(x.size()) + " != dim Ker " +
			                                   std::to_string(dim_kernel_target));

		// Boundary relations, recomputed from scratch.
		for (int i = 0; i < r; ++i) {
			sparse_vec dy = detail::chain_boundary(fc, *y[i], f);
			if (!(dy.e == x[i]->e)) {
				report.fail(k, "svd-map", "boundary of y_" + std::to_string(i + 1) + " != x_" +
				                              std::to_string(i + 1));
				break;
			}
		}
		for (size_t i = r; i < y.size(); ++i)
			if (!detail::chain_boundary(fc, *y[i], f).empty()) {
				report.fail(k, "kernel-basis", "claimed kernel vector has nonzero boundary");
				break;
			}
		for (size_t i = 0; i < x.size(); ++i)
			if (!detail::chain_boundary(fc, *x[i], f).empty()) {
				report.fail(k, "target-basis", "x vector is not a cycle");
				break;
			}

		// Filtration levels of the bases must reproduce the claimed pairing.
		for (int i = 0; i < r; ++i) {
			auto lx = detail::chain_level(fc, *x[i]);
			auto ly = detail::chain_level(fc, *y[i]);
			T birth = fc[pairs[i].first].diameter;
			T death = fc[pairs[i].second].diameter;
			if (!lx || !(*lx == birth) || !ly || !(*ly == death)) {
				report.fail(k, "pair-levels",
				            "pair " + std::to_string(i + 1) + " has basis levels (" +
				                level_str(lx) + "," + level_str(ly) + ") but claims (" +
				                num_traits<T>::str(birth) + "," + num_traits<T>::str(death) + ")");
			}
		}
		for (size_t i = r; i < x.size(); ++i) {
			auto lx = detail::chain_level(fc, *x[i]);
			T birth = fc[unpaired[i - r]].diameter;
			if (!lx || !(*lx == birth))
				report.fail(k, "pair-levels", "unpaired creator level mismatch");
		}

		// Exhaustive orthogonality of all three collections.
		if (auto v = detail::orthogonality_violation(fc, y, f, opts))
			report.fail(k, "source-basis-orthogonal", *v);
		if (r > 0) {
			std::vector<const sparse_vec*> ximg(x.begin(), x.begin() + r);
			if (auto v = detail::orthogonality_violation(fc, ximg, f, opts))
				report.fail(k, "image-basis-orthogonal", *v);
		}
		if (auto v = detail::orthogonality_violation(fc, x, f, opts))
			report.fail(k, "target-basis-orthogonal", *v);
	}
	return report;
}

}  // namespace vph
