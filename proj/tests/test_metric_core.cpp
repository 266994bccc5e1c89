#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "vph/gromov_hausdorff.hpp"
#include "vph/tripods.hpp"

using namespace vph;
using vphtest::rat;

namespace {

metric_space<rational> parse(const char* text) {
	std::istringstream in(text);
	return parse_distance_matrix<rational>(in);
}

}  // namespace

TEST_CASE("validate_metric accepts the two-point space") {
	auto s = validate_metric<rational>({{rational(0), rational(1)}, {rational(1), rational(0)}});
	CHECK(s.n == 2);
	CHECK_FALSE(s.is_pseudo);
}

TEST_CASE("validate_metric accepts a pseudo-metric with a repeated point") {
	auto s = validate_metric<rational>({{rational(0), rational(0), rational(1)},
	                                    {rational(0), rational(0), rational(1)},
	                                    {rational(1), rational(1), rational(0)}});
	CHECK(s.is_pseudo);
}

TEST_CASE("validate_metric names the triangle violation (0,2,1)") {
	try {
		validate_metric<rational>({{rational(0), rational(3), rational(1)},
		                           {rational(3), rational(0), rational(1)},
		                           {rational(1), rational(1), rational(0)}});
		FAIL("expected a triangle violation");
	} catch (const metric_error& e) {
		CHECK(e.axiom == metric_axiom::triangle);
		CHECK(e.i == 0);
		CHECK(e.k == 2);
		CHECK(e.j == 1);
		CHECK(std::string(e.what()) == "TriangleViolation(0,2,1)");
	}
}

TEST_CASE("validate_metric rejects each planted violation with the right axiom") {
	vphtest::rng_t rng(7);
	for (int trial = 0; trial < 200; ++trial) {
		int n = 3 + int(rng() % 4);
		auto s = vphtest::random_metric(rng, n);
		std::vector<std::vector<rational>> rows(n, std::vector<rational>(n));
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) rows[i][j] = s(i, j);
		int i = int(rng() % n), j = int(rng() % n);
		while (j == i) j = int(rng() % n);
		metric_axiom expect{};
		switch (rng() % 4) {
		case 0:
			rows[i][j] = rows[i][j] + rational(1);
			expect = metric_axiom::symmetry;
			break;
		case 1:
			rows[i][j] = -rows[i][j];
			rows[j][i] = rows[i][j];
			expect = metric_axiom::nonnegative;
			break;
		case 2:
			rows[i][i] = rational(1);
			expect = metric_axiom::zero_diagonal;
			break;
		default: {
			rational big = s.diameter() + s.diameter() + rational(1);
			rows[i][j] = rows[j][i] = big;
			expect = metric_axiom::triangle;
			break;
		}
		}
		try {
			validate_metric(rows);
			FAIL("expected a rejection");
		} catch (const metric_error& e) {
			CHECK(e.axiom == expect);
		}
	}
}

TEST_CASE("matrix parsing handles comments, fractions and errors") {
	auto s = parse("# comment\n3\n0 1/2 1\n1/2 0 1 # trailing\n1 1 0\n");
	CHECK(s.n == 3);
	CHECK(s(0, 1) == rat(1, 2));
	CHECK_THROWS_AS(parse("2\n0 1\n1\n"), input_error);
	CHECK_THROWS_AS(parse("2\n0 x\nx 0\n"), input_error);
	CHECK_THROWS_AS(parse(""), input_error);
}

TEST_CASE("pullback along the identity is the same space") {
	vphtest::rng_t rng(11);
	auto s = vphtest::random_metric(rng, 4);
	surjection id{4, 4, {0, 1, 2, 3}};
	auto z = pullback_metric(s, id);
	CHECK(z.d == s.d);
	CHECK_FALSE(z.is_pseudo);
}

TEST_CASE("pullback of a two-point space along a 3-to-2 map") {
	auto s = validate_metric<rational>({{rational(0), rational(1)}, {rational(1), rational(0)}});
	surjection phi{3, 2, {0, 0, 1}};
	auto z = pullback_metric(s, phi);
	CHECK(z.n == 3);
	CHECK(z(0, 1) == rational(0));
	CHECK(z(0, 2) == rational(1));
	CHECK(z.is_pseudo);
}

TEST_CASE("pullback rejects a mismatched surjection") {
	auto s = validate_metric<rational>({{rational(0), rational(1)}, {rational(1), rational(0)}});
	surjection phi{3, 3, {0, 1, 2}};
	CHECK_THROWS_AS(pullback_metric(s, phi), dimension_mismatch_error);
}

TEST_CASE("pullback preserves the diameter") {
	vphtest::rng_t rng(13);
	for (int trial = 0; trial < 50; ++trial) {
		int n = 2 + int(rng() % 4);
		auto s = vphtest::random_metric(rng, n);
		int m = n + int(rng() % 3);
		surjection phi;
		phi.image_size = n;
		phi.domain_size = m;
		for (int i = 0; i < n; ++i) phi.map.push_back(i);
		for (int i = n; i < m; ++i) phi.map.push_back(int(rng() % n));
		std::shuffle(phi.map.begin(), phi.map.end(), rng);
		auto z = pullback_metric(s, phi);
		CHECK(z.diameter() == s.diameter());
	}
}

TEST_CASE("distortion of an isometry graph is zero") {
	vphtest::rng_t rng(17);
	auto s = vphtest::random_metric(rng, 5);
	// permute the space
	std::vector<int> perm{3, 1, 4, 0, 2};
	std::vector<std::vector<rational>> rows(5, std::vector<rational>(5));
	for (int i = 0; i < 5; ++i)
		for (int j = 0; j < 5; ++j) rows[i][j] = s(perm[i], perm[j]);
	auto t = validate_metric(rows);
	tripod r;
	r.phi_x.domain_size = r.phi_y.domain_size = 5;
	r.phi_x.image_size = r.phi_y.image_size = 5;
	for (int i = 0; i < 5; ++i) {
		r.phi_x.map.push_back(perm[i]);
		r.phi_y.map.push_back(i);
	}
	CHECK(distortion(r, s, t) == rational(0));
	CHECK(gromov_hausdorff_exact(s, t).dis == rational(0));
}

TEST_CASE("every tripod between a point and a simplex has distortion >= eps") {
	auto one = validate_metric<rational>({{rational(0)}});
	std::vector<std::vector<rational>> rows(3, std::vector<rational>(3, rat(3, 4)));
	for (int i = 0; i < 3; ++i) rows[i][i] = rational(0);
	auto simplex = validate_metric(rows);
	bool achieved = false;
	enumerate_tripods(1, 3, 2, [&](const tripod& r) {
		auto d = distortion(r, one, simplex);
		CHECK(rat(3, 4) <= d);
		if (d == rat(3, 4)) achieved = true;
	});
	CHECK(achieved);
}

TEST_CASE("optimal tripod distortion between the 3-point spaces is |c1-c2|") {
	auto x1 = validate_metric<rational>({{rational(0), rational(1), rational(2)},
	                                     {rational(1), rational(0), rational(2)},
	                                     {rational(2), rational(2), rational(0)}});
	auto x2 = validate_metric<rational>({{rational(0), rational(1), rational(3)},
	                                     {rational(1), rational(0), rational(2)},
	                                     {rational(3), rational(2), rational(0)}});
	CHECK(gromov_hausdorff_exact(x1, x2).dis == rational(1));
	rational best = rational(100);
	enumerate_tripods(3, 3, 1, [&](const tripod& r) {
		auto d = distortion(r, x1, x2);
		if (d < best) best = d;
	});
	CHECK(best == rational(1));
}

TEST_CASE("exact GH equals full correspondence enumeration on tiny spaces") {
	vphtest::rng_t rng(23);
	for (int trial = 0; trial < 20; ++trial) {
		int nx = 2 + int(rng() % 2), ny = 2 + int(rng() % 2);
		auto x = vphtest::random_metric(rng, nx);
		auto y = vphtest::random_metric(rng, ny);
		// brute force over all subsets of X x Y surjective on both factors
		int cells = nx * ny;
		rational best = rational(1000);
		for (int mask = 1; mask < (1 << cells); ++mask) {
			std::vector<std::pair<int, int>> rel;
			std::vector<char> hx(nx, 0), hy(ny, 0);
			for (int c = 0; c < cells; ++c)
				if (mask & (1 << c)) {
					rel.push_back({c / ny, c % ny});
					hx[c / ny] = hy[c % ny] = 1;
				}
			bool surj = true;
			for (int i = 0; i < nx; ++i) surj &= hx[i] == 1;
			for (int j = 0; j < ny; ++j) surj &= hy[j] == 1;
			if (!surj) continue;
			rational dis(0);
			for (auto [i, j] : rel)
				for (auto [i2, j2] : rel) {
					rational d = (x(i, i2) - y(j, j2)).abs();
					if (dis < d) dis = d;
				}
			if (dis < best) best = dis;
		}
		auto got = gromov_hausdorff_exact(x, y);
		CHECK(got.dis == best);
		CHECK(got.value == best.half());
	}
}

TEST_CASE("GH is symmetric and satisfies the triangle inequality on a seed set") {
	vphtest::rng_t rng(29);
	std::vector<metric_space<rational>> spaces;
	for (int i = 0; i < 6; ++i) spaces.push_back(vphtest::random_metric(rng, 2 + int(rng() % 3)));
	for (size_t a = 0; a < spaces.size(); ++a)
		for (size_t b = a; b < spaces.size(); ++b) {
			auto dab = gromov_hausdorff_exact(spaces[a], spaces[b]).value;
			auto dba = gromov_hausdorff_exact(spaces[b], spaces[a]).value;
			CHECK(dab == dba);
			if (a == b) CHECK(dab == rational(0));
			for (size_t c = 0; c < spaces.size(); ++c) {
				auto dac = gromov_hausdorff_exact(spaces[a], spaces[c]).value;
				auto dcb = gromov_hausdorff_exact(spaces[c], spaces[b]).value;
				CHECK(dab <= dac + dcb);
			}
		}
}

TEST_CASE("GH search reports BudgetExceeded under a tiny budget") {
	vphtest::rng_t rng(31);
	auto x = vphtest::random_metric(rng, 5);
	auto y = vphtest::random_metric(rng, 5);
	gh_budget b;
	b.max_nodes = 3;
	CHECK_THROWS_AS(gromov_hausdorff_exact(x, y, b), budget_error);
}

TEST_CASE("tripod enumeration matches the brute count") {
	CHECK(count_tripods(1, 1, 0) == 1);
	CHECK(count_tripods(1, 2, 0) == vphtest::brute_tripod_count(1, 2, 0));
	CHECK(count_tripods(2, 2, 1) == vphtest::brute_tripod_count(2, 2, 1));
	CHECK(count_tripods(2, 3, 1) == vphtest::brute_tripod_count(2, 3, 1));
	CHECK(count_tripods(3, 2, 1) == vphtest::brute_tripod_count(3, 2, 1));
	CHECK(count_tripods(3, 3, 0) == vphtest::brute_tripod_count(3, 3, 0));
}

TEST_CASE("tripod enumeration yields valid, duplicate-free tripods in order") {
	std::vector<std::vector<std::pair<int, int>>> seen;
	enumerate_tripods(2, 3, 1, [&](const tripod& r) {
		r.validate();
		std::vector<std::pair<int, int>> key(r.z_size());
		for (int t = 0; t < r.z_size(); ++t) key[t] = {r.phi_x.map[t], r.phi_y.map[t]};
		CHECK(std::is_sorted(key.begin(), key.end()));
		seen.push_back(key);
	});
	std::vector<std::vector<std::pair<int, int>>> sorted = seen;
	std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
		if (a.size() != b.size()) return a.size() < b.size();
		return a < b;
	});
	CHECK(seen == sorted);
	CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("tripod file parsing") {
	std::istringstream in("5\n0 1 2 3 3\n0 1 2 3 3\n");
	auto r = parse_tripod(in, 4, 4);
	CHECK(r.z_size() == 5);
	CHECK(r.phi_x.map[4] == 3);
	std::istringstream bad("3\n0 1 1\n0 0 0\n");
	CHECK_THROWS_AS(parse_tripod(bad, 2, 2), input_error);  // phi_y misses 1
}

TEST_CASE("rational arithmetic parses and prints canonically") {
	CHECK(rational::parse("2.75") == rat(11, 4));
	CHECK(rational::parse("-0.5") == rat(-1, 2));
	CHECK(rational::parse("6/4") == rat(3, 2));
	CHECK(rational::parse("3").str() == "3");
	CHECK(rat(3, 2).str() == "3/2");
	CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
	CHECK(rat(1, 2).half() == rat(1, 4));
	CHECK_THROWS_AS(rational::parse("1/0"), std::invalid_argument);
	CHECK_THROWS_AS(rational::parse("abc"), std::invalid_argument);
}
