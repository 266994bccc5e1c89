#pragma once

// The end-to-end golden-value suite behind `vph verify-paper`: reproduces
// the worked examples and tables for the bundled spaces, the one-point vs
// simplex family, the two-point family, and the bound checks. Exact mode
// compares bit-exactly; float mode within 1e-9.

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vph/gromov_hausdorff.hpp"
#include "vph/interleaving.hpp"
#include "vph/json_io.hpp"
#include "vph/pullback.hpp"

namespace vph {

struct paper_check {
	std::string name;
	bool pass = false;
	std::string detail;
};

template <typename T> class paper_suite {
public:
	explicit paper_suite(std::string data_dir) : data_dir_(std::move(data_dir)) {}

	std::vector<paper_check> run() {
		checks_.clear();
		check("4-point spaces: verbose barcodes", [&] { four_point_barcodes(); });
		check("4-point spaces: fci/fhe verdict", [&] { four_point_fci_fhe(); });
		check("5-point spaces: equal verbose barcodes", [&] { five_point_barcodes(); });
		check("5-point spaces: not isometric", [&] { five_point_non_isometric(); });
		check("3-point family: verbose barcodes", [&] { three_point_barcodes(); });
		check("3-point family: distance table", [&] { three_point_table(); });
		check("4-point table: d_B degree 0", [&] { table_db(0, {"0", "1", "1", "1", "1", "0"}); });
		check("4-point table: d_B degree 1",
		      [&] { table_db(1, {"0", "0", "1/2", "0", "1/2", "1/2"}); });
		check("4-point table: pullback d_B degree 0",
		      [&] { table_hatdb0({"0", "1", "1", "1", "1", "0"}); });
		check("4-point table: pullback d_B degree 1",
		      [&] { table_hatdb1({"0", "1", "1", "1", "1", "1"}); });
		check("4-point table: 2 d_GH", [&] { table_gh({"1", "1", "1", "1", "1", "1"}); });
		check("one-point vs simplex family", [&] { one_point_family(); });
		check("two-point family", [&] { two_point_family(); });
		check("explicit 5-element tripod equalizes the 4-point pair", [&] { five_element_tripod(); });
		check("elementary interleaving distances", [&] { elementary_distances(); });
		check("same-vertex-set interleaving bounds", [&] { same_set_bounds(); });
		check("verbose cardinality spot checks", [&] { cardinalities(); });
		return checks_;
	}

	static int report(const std::vector<paper_check>& checks, std::ostream& os) {
		int failures = 0;
		for (const auto& c : checks) {
			os << (c.pass ? "ok   " : "FAIL ") << c.name;
			if (!c.pass && !c.detail.empty()) os << " -- " << c.detail;
			os << "\n";
			if (!c.pass) ++failures;
		}
		os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
		   << " (" << checks.size() << " total, " << (num_traits<T>::exact ? "exact" : "float")
		   << " mode)\n";
		return failures;
	}

private:
	std::string data_dir_;
	std::vector<paper_check> checks_;

	void check(const std::string& name, const std::function<void()>& body) {
		paper_check c;
		c.name = name;
		try {
			body();
			c.pass = true;
		} catch (const std::exception& e) {
			c.pass = false;
			c.detail = e.what();
		}
		checks_.push_back(c);
	}

	[[noreturn]] static void mismatch(const std::string& what) { throw std::runtime_error(what); }

	static T val(const char* s) { return num_traits<T>::parse(s); }

	static bar<T> pt(const char* b, const char* d) {
		if (std::string(d) == "inf") return {val(b), extended<T>::infinity()};
		return {val(b), extended<T>(val(d))};
	}

	static void expect_value(const T& got, const char* want, const std::string& what) {
		expect_value(got, val(want), what);
	}

	static void expect_value(const T& got, const T& want, const std::string& what) {
		if (!num_traits<T>::close(got, want))
			mismatch(what + ": got " + num_traits<T>::str(got) + ", want " + num_traits<T>::str(want));
	}

	static void expect_ext(const extended<T>& got, const extended<T>& want,
	                       const std::string& what) {
		if (!close_ext(got, want)) mismatch(what + ": got " + got.str() + ", want " + want.str());
	}

	static void expect_barcode(const barcode<T>& got, barcode<T> want, const std::string& what) {
		barcode<T> g = got;
		canonicalize(g);
		canonicalize(want);
		bool ok = g.size() == want.size();
		for (size_t i = 0; ok && i < g.size(); ++i)
			ok = num_traits<T>::close(g[i].birth, want[i].birth) && close_ext(g[i].death, want[i].death);
		if (!ok) mismatch(what + ": got " + barcode_table(g) + ", want " + barcode_table(want));
	}

	metric_space<T> load(const std::string& file) {
		std::ifstream in(data_dir_ + "/" + file);
		if (!in) throw input_error("cannot open " + data_dir_ + "/" + file);
		return parse_distance_matrix<T>(in);
	}

	barcode_family<T> family_of(const metric_space<T>& s) { return vr_verbose_barcodes(s); }

	// --- named spaces -----------------------------------------------------

	metric_space<T> space_x() { return load("four_point_x.dist"); }
	metric_space<T> space_y() { return load("four_point_y.dist"); }
	metric_space<T> space_z() { return load("four_point_z.dist"); }
	metric_space<T> space_w() { return load("four_point_w.dist"); }

	metric_space<T> simplex_space(int n, const char* eps) {
		std::vector<std::vector<T>> rows(n, std::vector<T>(n, val(eps)));
		for (int i = 0; i < n; ++i) rows[i][i] = T{};
		return validate_metric(rows);
	}

	metric_space<T> two_point_space(const char* d) {
		return validate_metric<T>({{T{}, val(d)}, {val(d), T{}}});
	}

	metric_space<T> triangle_space(const T& d01, const T& d12, const T& d02) {
		return validate_metric<T>({{T{}, d01, d02}, {d01, T{}, d12}, {d02, d12, T{}}});
	}

	// --- checks -----------------------------------------------------------

	void four_point_barcodes() {
		auto fx = family_of(space_x());
		auto fy = family_of(space_y());
		expect_barcode(fx[0], {pt("0", "1"), pt("0", "1"), pt("0", "2"), pt("0", "inf")},
		               "X degree 0");
		expect_barcode(fx[1], {pt("1", "1"), pt("2", "2"), pt("2", "2")}, "X degree 1");
		expect_barcode(fx[2], {pt("2", "2")}, "X degree 2");
		expect_barcode(fy[0], {pt("0", "1"), pt("0", "1"), pt("0", "2"), pt("0", "inf")},
		               "Y degree 0");
		expect_barcode(fy[1], {pt("2", "2"), pt("2", "2"), pt("2", "2")}, "Y degree 1");
		expect_barcode(fy[2], {pt("2", "2")}, "Y degree 2");
		expect_barcode(concise_barcode(fx[1]), {}, "X concise degree 1");
		expect_barcode(concise_barcode(fy[2]), {}, "Y concise degree 2");
	}

	void four_point_fci_fhe() {
		auto fx = family_of(space_x());
		auto fy = family_of(space_y());
		if (fci_equal(fx, fy)) mismatch("fci_equal should be false");
		if (!fhe_equal(fx, fy)) mismatch("fhe_equal should be true");
		expect_ext(interleaving_distance(fx, fy).value, extended<T>(val("1")),
		           "matching distance of the verbose families");
	}

	void five_point_barcodes() {
		auto fx = family_of(load("five_point_x.dist"));
		auto fy = family_of(load("five_point_y.dist"));
		barcode<T> k0 = {pt("0", "1/2"), pt("0", "1"), pt("0", "1"), pt("0", "2"), pt("0", "inf")};
		barcode<T> k1 = {pt("1", "1"), pt("2", "2"), pt("2", "2"), pt("2", "2"), pt("2", "2"),
		                 pt("2", "2")};
		barcode<T> k2 = {pt("2", "2"), pt("2", "2"), pt("2", "2"), pt("2", "2")};
		barcode<T> k3 = {pt("2", "2")};
		for (auto* fam : {&fx, &fy}) {
			expect_barcode((*fam)[0], k0, "5-point degree 0");
			expect_barcode((*fam)[1], k1, "5-point degree 1");
			expect_barcode((*fam)[2], k2, "5-point degree 2");
			expect_barcode((*fam)[3], k3, "5-point degree 3");
		}
		if (!fci_equal(fx, fy)) mismatch("5-point families must be filtered chain isomorphic");
	}

	void five_point_non_isometric() {
		if (is_isometric(load("five_point_x.dist"), load("five_point_y.dist")))
			mismatch("5-point spaces must not be isometric");
	}

	struct triple {
		const char *a, *b, *c1, *c2;
	};
	std::vector<triple> triples() const {
		return {{"1", "2", "2", "3"}, {"2", "3", "4", "5"}, {"1", "2", "5/2", "3"}};
	}

	void three_point_barcodes() {
		for (const auto& t : triples()) {
			auto x1 = triangle_space(val(t.a), val(t.b), val(t.c1));
			auto f1 = family_of(x1);
			expect_barcode(f1[0], {pt("0", t.a), pt("0", t.b), pt("0", "inf")}, "3-point degree 0");
			expect_barcode(f1[1], {pt(t.c1, t.c1)}, "3-point degree 1");
		}
	}

	void three_point_table() {
		for (const auto& t : triples()) {
			auto x1 = triangle_space(val(t.a), val(t.b), val(t.c1));
			auto x2 = triangle_space(val(t.a), val(t.b), val(t.c2));
			T gap = num_traits<T>::abs(val(t.c1) - val(t.c2));
			auto f1 = family_of(x1);
			auto f2 = family_of(x2);
			extended<T> db{T{}};
			for (size_t k = 0; k < std::max(f1.size(), f2.size()); ++k)
				db = max_ext(db, bottleneck_distance(concise_barcode(k < f1.size() ? f1[k] : barcode<T>{}),
				                                     concise_barcode(k < f2.size() ? f2[k] : barcode<T>{}))
				                     .cost);
			expect_ext(db, extended<T>(T{}), "3-point d_B");
			auto hd = hatdi(x1, x2, 1);
			if (!hd.certified) mismatch("3-point pullback bound not certified");
			expect_ext(hd.value, extended<T>(gap), "3-point pullback bound");
			expect_value(gromov_hausdorff_exact(x1, x2).dis, gap, "3-point 2 d_GH");
		}
	}

	std::vector<std::pair<int, int>> table_pairs() const {
		return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
	}

	std::vector<metric_space<T>> four_spaces() {
		return {space_x(), space_y(), space_z(), space_w()};
	}

	void table_db(int degree, const std::vector<const char*>& want) {
		auto spaces = four_spaces();
		std::vector<barcode_family<T>> fams;
		for (const auto& s : spaces) fams.push_back(family_of(s));
		auto pairs = table_pairs();
		for (size_t t = 0; t < pairs.size(); ++t) {
			auto [i, j] = pairs[t];
			auto cost = bottleneck_distance(concise_barcode(fams[i][degree]),
			                                concise_barcode(fams[j][degree]))
			                .cost;
			expect_ext(cost, extended<T>(val(want[t])),
			           "d_B degree " + std::to_string(degree) + " entry " + std::to_string(t));
		}
	}

	void table_hatdb0(const std::vector<const char*>& want) {
		auto spaces = four_spaces();
		std::vector<barcode_family<T>> fams;
		for (const auto& s : spaces) fams.push_back(family_of(s));
		auto pairs = table_pairs();
		for (size_t t = 0; t < pairs.size(); ++t) {
			auto [i, j] = pairs[t];
			T got = hatdb_degree0(finite_deaths_descending(fams[i][0]),
			                      finite_deaths_descending(fams[j][0]));
			expect_value(got, want[t], "pullback d_B degree 0 entry " + std::to_string(t));
		}
	}

	void table_hatdb1(const std::vector<const char*>& want) {
		auto spaces = four_spaces();
		std::vector<barcode_family<T>> fams;
		for (const auto& s : spaces) fams.push_back(family_of(s));
		auto pairs = table_pairs();
		for (size_t t = 0; t < pairs.size(); ++t) {
			auto [i, j] = pairs[t];
			auto hb = hatdb_upper_bound(spaces[i], spaces[j], fams[i], fams[j], 1, 1);
			if (!hb.certified)
				mismatch("pullback d_B degree 1 entry " + std::to_string(t) + " not certified");
			expect_ext(hb.bound, extended<T>(val(want[t])),
			           "pullback d_B degree 1 entry " + std::to_string(t));
		}
	}

	void table_gh(const std::vector<const char*>& want) {
		auto spaces = four_spaces();
		auto pairs = table_pairs();
		for (size_t t = 0; t < pairs.size(); ++t) {
			auto [i, j] = pairs[t];
			expect_value(gromov_hausdorff_exact(spaces[i], spaces[j]).dis, want[t],
			             "2 d_GH entry " + std::to_string(t));
		}
	}

	void one_point_family() {
		auto one = validate_metric<T>({{T{}}});
		auto fam1 = family_of(one);
		for (int n : {2, 3, 5}) {
			auto y = simplex_space(n, "3/4");
			auto famy = family_of(y);
			T hat0 = hatdb_degree0(finite_deaths_descending(fam1[0]),
			                       finite_deaths_descending(famy[0]));
			expect_value(hat0, "3/4", "one-point vs simplex pullback degree 0");
			extended<T> db{T{}};
			for (size_t k = 0; k < famy.size(); ++k)
				db = max_ext(db, bottleneck_distance(concise_barcode(k < fam1.size() ? fam1[k] : barcode<T>{}),
				                                     concise_barcode(famy[k]))
				                     .cost);
			expect_ext(db, extended<T>(val("3/8")), "one-point vs simplex d_B");
			expect_value(gromov_hausdorff_exact(one, y).dis, "3/4", "one-point vs simplex 2 d_GH");
			if (n <= 3) {
				auto hd = hatdi(one, y, 1);
				if (!hd.certified) mismatch("one-point vs simplex bound not certified");
				expect_ext(hd.value, extended<T>(val("3/4")), "one-point vs simplex pullback bound");
			}
		}
	}

	void two_point_family() {
		auto x0 = two_point_space("1");
		auto f0 = family_of(x0);
		const char* epses[] = {"0", "1/2", "2"};
		const char* dists[] = {"1", "3/2", "3"};
		const char* dbs[] = {"0", "1/2", "3/2"};  // min(eps, (1+eps)/2)
		for (int t = 0; t < 3; ++t) {
			auto xe = two_point_space(dists[t]);
			auto fe = family_of(xe);
			T hat0 = hatdb_degree0(finite_deaths_descending(fe[0]), finite_deaths_descending(f0[0]));
			expect_value(hat0, epses[t], "two-point pullback degree 0");
			auto db = bottleneck_distance(concise_barcode(fe[0]), concise_barcode(f0[0])).cost;
			expect_ext(db, extended<T>(val(dbs[t])), "two-point d_B");
			expect_value(gromov_hausdorff_exact(xe, x0).dis, epses[t], "two-point 2 d_GH");
		}
	}

	void five_element_tripod() {
		auto x = space_x();
		auto y = space_y();
		tripod r;
		r.phi_x.domain_size = r.phi_y.domain_size = 5;
		r.phi_x.image_size = r.phi_y.image_size = 4;
		r.phi_x.map = {0, 1, 2, 3, 3};
		r.phi_y.map = {0, 1, 2, 3, 3};
		auto zx = pullback_metric(x, r.phi_x);
		auto zy = pullback_metric(y, r.phi_y);
		if (!zx.is_pseudo || !zy.is_pseudo) mismatch("pullbacks must be pseudo-metric");
		auto fzx = family_of(zx);
		auto fzy = family_of(zy);
		barcode<T> k0 = {pt("0", "0"), pt("0", "1"), pt("0", "1"), pt("0", "2"), pt("0", "inf")};
		barcode<T> k1 = {pt("1", "1"), pt("2", "2"), pt("2", "2"), pt("2", "2"), pt("2", "2"),
		                 pt("2", "2")};
		barcode<T> k2 = {pt("2", "2"), pt("2", "2"), pt("2", "2"), pt("2", "2")};
		barcode<T> k3 = {pt("2", "2")};
		expect_barcode(fzx[0], k0, "pullback of X degree 0");
		expect_barcode(fzx[1], k1, "pullback of X degree 1");
		expect_barcode(fzx[2], k2, "pullback of X degree 2");
		expect_barcode(fzx[3], k3, "pullback of X degree 3");
		if (!fci_equal(fzx, fzy)) mismatch("pullback families must coincide");
		expect_ext(interleaving_distance(fzx, fzy).value, extended<T>(T{}),
		           "matching distance of the pullback families");
		// closed form agrees with the direct reduction on this tripod
		pullback_spec<T> spec(x, {3});
		auto famx = family_of(x);
		for (int k = 0; k <= 3; ++k)
			expect_barcode(pullback_barcode_closed_form(spec, famx, k), fzx[k],
			               "closed form degree " + std::to_string(k));
	}

	void elementary_distances() {
		auto ea = elementary_family<T>(val("1"), extended<T>(val("1")), 2);
		auto eb = elementary_family<T>(val("3"), extended<T>(val("3")), 2);
		expect_ext(interleaving_distance(ea, eb).value, extended<T>(val("2")),
		           "same-degree elementary pair");
		auto ec = elementary_family<T>(val("3"), extended<T>(val("3")), 1);
		expect_ext(interleaving_distance(ea, ec).value, extended<T>::infinity(),
		           "cross-degree elementary pair");
	}

	void same_set_bounds() {
		auto d0 = validate_metric<T>({{T{}, T{}, val("1")}, {T{}, T{}, val("1")},
		                              {val("1"), val("1"), T{}}});
		auto d1 = validate_metric<T>({{T{}, val("2"), val("2")}, {val("2"), T{}, val("1")},
		                              {val("2"), val("1"), T{}}});
		auto d2 = validate_metric<T>({{T{}, val("2"), val("2")}, {val("2"), T{}, T{}},
		                              {val("2"), T{}, T{}}});
		auto r01 = di_bounds_check(d0, d1);
		if (!r01.ok) mismatch("bounds violated for the first pair");
		expect_value(r01.lower, "1", "first pair diameter gap");
		expect_ext(r01.di, extended<T>(val("1")), "first pair interleaving distance");
		expect_value(r01.upper, "2", "first pair entrywise gap");
		expect_value(r01.min_bijection_dis, "1", "first pair bijection distortion");
		auto r12 = di_bounds_check(d1, d2);
		if (!r12.ok) mismatch("bounds violated for the second pair");
		expect_value(r12.lower, "0", "second pair diameter gap");
		expect_ext(r12.di, extended<T>(val("1")), "second pair interleaving distance");
		expect_value(r12.upper, "1", "second pair entrywise gap");
		expect_value(r12.min_bijection_dis, "1", "second pair bijection distortion");
	}

	void cardinalities() {
		if (expected_verbose_count(4, 1) != 3) mismatch("count(4,1)");
		if (expected_verbose_count(5, 2) != 4) mismatch("count(5,2)");
		if (expected_verbose_count(5, 3) != 1) mismatch("count(5,3)");
		if (expected_verbose_count(5, 4) != 0) mismatch("count(5,4)");
		auto fx = family_of(load("five_point_x.dist"));
		for (int k = 0; k < (int)fx.size(); ++k)
			if ((long long)fx[k].size() != expected_verbose_count(5, k))
				mismatch("5-point cardinality in degree " + std::to_string(k));
	}
};

}  // namespace vph
