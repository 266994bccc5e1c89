#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "vph/errors.hpp"
#include "vph/value.hpp"

namespace vph {

// A finite (pseudo-)metric space given by its full distance matrix.
// is_pseudo is true iff some off-diagonal entry is zero.
template <typename T> struct metric_space {
	int n = 0;
	std::vector<T> d;  // n*n, row-major
	std::vector<std::string> labels;
	bool is_pseudo = false;

	const T& operator()(int i, int j) const { return d[size_t(i) * n + j]; }
	T& at(int i, int j) { return d[size_t(i) * n + j]; }

	T diameter() const {
		T m{};
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				if (m < (*this)(i, j)) m = (*this)(i, j);
		return m;
	}
};

template <typename T>
void refresh_pseudo_flag(metric_space<T>& s) {
	s.is_pseudo = false;
	for (int i = 0; i < s.n && !s.is_pseudo; ++i)
		for (int j = i + 1; j < s.n; ++j)
			if (s(i, j) == T{}) {
				s.is_pseudo = true;
				break;
			}
}

// Checks all pseudo-metric axioms and returns the space. Throws
// metric_error naming the first failed axiom and its indices.
template <typename T>
metric_space<T> validate_metric(const std::vector<std::vector<T>>& rows,
                                std::vector<std::string> labels = {}) {
	int n = (int)rows.size();
	if (n == 0) throw metric_error(metric_axiom::square, -1, -1);
	for (int i = 0; i < n; ++i)
		if ((int)rows[i].size() != n) throw metric_error(metric_axiom::square, i, (int)rows[i].size());
	for (int i = 0; i < n; ++i) {
		if (!(rows[i][i] == T{})) throw metric_error(metric_axiom::zero_diagonal, i, i);
		for (int j = 0; j < n; ++j) {
			if (rows[i][j] < T{}) throw metric_error(metric_axiom::nonnegative, i, j);
			if (j > i && !(rows[i][j] == rows[j][i])) throw metric_error(metric_axiom::symmetry, i, j);
		}
	}
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			for (int k = 0; k < n; ++k) {
				if (k == i || k == j) continue;
				if (rows[i][k] + rows[k][j] < rows[i][j])
					throw metric_error(metric_axiom::triangle, i, j, k);
			}
	metric_space<T> s;
	s.n = n;
	s.d.resize(size_t(n) * n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) s.at(i, j) = rows[i][j];
	if ((int)labels.size() == n) s.labels = std::move(labels);
	refresh_pseudo_flag(s);
	return s;
}

// A surjective index map from [0, domain_size) onto [0, image_size).
struct surjection {
	int domain_size = 0;
	int image_size = 0;
	std::vector<int> map;  // map[z] in [0, image_size)

	void validate() const {
		if ((int)map.size() != domain_size)
			throw dimension_mismatch_error("surjection: map length != domain size");
		std::vector<char> hit(image_size, 0);
		for (int v : map) {
			if (v < 0 || v >= image_size) throw input_error("surjection: index out of range");
			hit[v] = 1;
		}
		for (int i = 0; i < image_size; ++i)
			if (!hit[i]) throw input_error("surjection: not surjective (misses " + std::to_string(i) + ")");
	}
};

// A common index set Z with surjections onto two spaces.
struct tripod {
	surjection phi_x;
	surjection phi_y;

	int z_size() const { return phi_x.domain_size; }

	void validate() const {
		if (phi_x.domain_size != phi_y.domain_size)
			throw dimension_mismatch_error("tripod: surjection domains differ");
		phi_x.validate();
		phi_y.validate();
	}
};

// Pseudo-metric on the domain of phi induced by composing with the base
// metric: d_Z(a,b) = d(phi(a), phi(b)).
template <typename T>
metric_space<T> pullback_metric(const metric_space<T>& space, const surjection& phi) {
	if (phi.image_size != space.n)
		throw dimension_mismatch_error("pullback: surjection image size != space size");
	phi.validate();
	metric_space<T> z;
	z.n = phi.domain_size;
	z.d.resize(size_t(z.n) * z.n);
	for (int a = 0; a < z.n; ++a)
		for (int b = 0; b < z.n; ++b) z.at(a, b) = space(phi.map[a], phi.map[b]);
	if (!space.labels.empty()) {
		z.labels.resize(z.n);
		for (int a = 0; a < z.n; ++a) z.labels[a] = space.labels[phi.map[a]];
	}
	refresh_pseudo_flag(z);
	return z;
}

// Largest disagreement between the two pullback metrics on Z.
template <typename T>
T distortion(const tripod& r, const metric_space<T>& x, const metric_space<T>& y) {
	if (r.phi_x.image_size != x.n || r.phi_y.image_size != y.n)
		throw dimension_mismatch_error("distortion: tripod does not match the spaces");
	r.validate();
	T best{};
	int z = r.z_size();
	for (int a = 0; a < z; ++a)
		for (int b = a + 1; b < z; ++b) {
			T diff = num_traits<T>::abs(x(r.phi_x.map[a], r.phi_x.map[b]) -
			                            y(r.phi_y.map[a], r.phi_y.map[b]));
			if (best < diff) best = diff;
		}
	return best;
}

template <typename T>
T max_entrywise_difference(const metric_space<T>& a, const metric_space<T>& b) {
	if (a.n != b.n) throw dimension_mismatch_error("spaces have different sizes");
	T best{};
	for (int i = 0; i < a.n; ++i)
		for (int j = i + 1; j < a.n; ++j) {
			T diff = num_traits<T>::abs(a(i, j) - b(i, j));
			if (best < diff) best = diff;
		}
	return best;
}

namespace detail {
inline bool next_data_token(std::istream& in, std::string& tok) {
	while (in >> tok) {
		if (tok[0] == '#') {
			std::string rest;
			std::getline(in, rest);
			continue;
		}
		return true;
	}
	return false;
}
}  // namespace detail

// Plain-text distance matrix: first line n, then n whitespace-separated
// rows; entries are decimal or rational p/q. Lines starting with '#' are
// comments. The matrix is validated before being returned.
template <typename T>
metric_space<T> parse_distance_matrix(std::istream& in) {
	std::string tok;
	if (!detail::next_data_token(in, tok)) throw input_error("matrix: empty input");
	int n = 0;
	try {
		size_t used = 0;
		n = std::stoi(tok, &used);
		if (used != tok.size()) throw std::invalid_argument("");
	} catch (const std::exception&) {
		throw input_error("matrix: bad point count '" + tok + "'");
	}
	if (n <= 0) throw input_error("matrix: point count must be positive");
	std::vector<std::vector<T>> rows(n, std::vector<T>(n));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			if (!detail::next_data_token(in, tok))
				throw input_error("matrix: expected " + std::to_string(n * n) + " entries");
			try {
				rows[i][j] = num_traits<T>::parse(tok);
			} catch (const std::exception&) {
				throw input_error("matrix: bad entry '" + tok + "'");
			}
		}
	return validate_metric(rows);
}

// Tripod file: line 1 z_size, line 2 the phi_x index list, line 3 the
// phi_y index list (0-based).
inline tripod parse_tripod(std::istream& in, int nx, int ny) {
	std::string tok;
	auto read_int = [&](const char* what) {
		if (!detail::next_data_token(in, tok)) throw input_error(std::string("tripod: missing ") + what);
		try {
			return std::stoi(tok);
		} catch (const std::exception&) {
			throw input_error(std::string("tripod: bad ") + what + " '" + tok + "'");
		}
	};
	tripod r;
	int z = read_int("z_size");
	if (z <= 0) throw input_error("tripod: z_size must be positive");
	r.phi_x.domain_size = r.phi_y.domain_size = z;
	r.phi_x.image_size = nx;
	r.phi_y.image_size = ny;
	for (int i = 0; i < z; ++i) r.phi_x.map.push_back(read_int("phi_x entry"));
	for (int i = 0; i < z; ++i) r.phi_y.map.push_back(read_int("phi_y entry"));
	r.validate();
	return r;
}

}  // namespace vph
