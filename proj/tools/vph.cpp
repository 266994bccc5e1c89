// Command-line front end: barcodes, distances, pullback reports and the
// bundled golden-value suite. Exit codes: 0 success (infinite results
// included), 1 verification failure, 2 input error, 3 resource cap.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paper_suite.hpp"
#include "vph/json_io.hpp"

namespace {

struct cli_options {
	bool float_mode = false;
	int field_char = 2;
	std::string format = "json";
	size_t size_cap = vph::default_size_cap;

	// barcode / pullback-barcode
	std::string input_file;
	int max_dim = -1;
	bool concise = false;
	std::vector<int> repeats;
	int degree = -1;
	bool direct = false;

	// distance / stability
	std::string kind = "dm";
	std::string file_a, file_b;
	int max_extra = 1;

	// verify-paper
	std::string data_dir = "data";
};

std::string slurp(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw vph::input_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

bool looks_like_json(const std::string& text) {
	for (char c : text) {
		if (std::isspace((unsigned char)c)) continue;
		return c == '{';
	}
	return false;
}

template <typename T>
vph::barcode_family<T> family_from_file(const std::string& path, const cli_options& opt) {
	std::string text = slurp(path);
	if (looks_like_json(text)) return vph::family_from_json<T>(vph::json::parse(text));
	std::istringstream in(text);
	auto space = vph::parse_distance_matrix<T>(in);
	return vph::vr_verbose_barcodes(space, opt.field_char, opt.size_cap);
}

template <typename T>
vph::metric_space<T> space_from_file(const std::string& path) {
	std::istringstream in(slurp(path));
	return vph::parse_distance_matrix<T>(in);
}

template <typename T> int run_barcode(const cli_options& opt) {
	auto space = space_from_file<T>(opt.input_file);
	auto fc = vph::build_vr_fcc(space, opt.max_dim, opt.size_cap);
	auto red = vph::reduce(fc, opt.field_char);
	auto fam = vph::all_verbose_barcodes(fc, vph::group_pairing(fc, red));
	if (opt.concise) fam = vph::concise_family(fam);
	if (opt.format == "table") {
		for (size_t k = 0; k < fam.size(); ++k)
			std::cout << "degree " << k << ": " << vph::barcode_table(fam[k]) << "\n";
	} else {
		std::cout << vph::family_json(fam).dump(2) << "\n";
	}
	return 0;
}

template <typename T> int run_distance(const cli_options& opt) {
	vph::json out;
	out["kind"] = opt.kind;
	out["mode"] = vph::num_traits<T>::exact ? "exact" : "float";

	auto emit = [&](void) {
		if (opt.format == "table") {
			std::cout << "kind:  " << opt.kind << "\n";
			std::cout << "value: " << out["value"].dump() << "\n";
		} else {
			std::cout << out.dump(2) << "\n";
		}
		return 0;
	};

	if (opt.kind == "dm" || opt.kind == "db" || opt.kind == "di") {
		auto fam_a = family_from_file<T>(opt.file_a, opt);
		auto fam_b = family_from_file<T>(opt.file_b, opt);
		if (opt.kind == "db") {
			fam_a = vph::concise_family(fam_a);
			fam_b = vph::concise_family(fam_b);
		}
		auto per_degree_cost = [&](int k) {
			vph::barcode<T> x = k < (int)fam_a.size() ? fam_a[k] : vph::barcode<T>{};
			vph::barcode<T> y = k < (int)fam_b.size() ? fam_b[k] : vph::barcode<T>{};
			return opt.kind == "db" ? vph::bottleneck_distance(x, y) : vph::matching_distance(x, y);
		};
		if (opt.degree >= 0) {
			auto m = per_degree_cost(opt.degree);
			out["degree"] = opt.degree;
			out["value"] = vph::value_json(m.cost);
			out.update(vph::matching_json(m));
		} else {
			int degrees = (int)std::max(fam_a.size(), fam_b.size());
			vph::extended<T> sup{T{}};
			vph::json per = vph::json::array();
			for (int k = 0; k < degrees; ++k) {
				auto m = per_degree_cost(k);
				per.push_back(vph::json{{"degree", k}, {"cost", vph::value_json(m.cost)}});
				sup = vph::max_ext(sup, m.cost);
			}
			out["value"] = vph::value_json(sup);
			out["per_degree"] = per;
		}
		return emit();
	}
	if (opt.kind == "hatdb0") {
		auto fam_a = family_from_file<T>(opt.file_a, opt);
		auto fam_b = family_from_file<T>(opt.file_b, opt);
		T v = vph::hatdb_degree0(
		    vph::finite_deaths_descending(fam_a.empty() ? vph::barcode<T>{} : fam_a[0]),
		    vph::finite_deaths_descending(fam_b.empty() ? vph::barcode<T>{} : fam_b[0]));
		out["value"] = vph::value_json<T>(v);
		out["certified"] = true;
		return emit();
	}
	if (opt.kind == "hatdb") {
		auto x = space_from_file<T>(opt.file_a);
		auto y = space_from_file<T>(opt.file_b);
		vph::hatdb_options hopts;
		hopts.field_char = opt.field_char;
		hopts.size_cap = opt.size_cap;
		auto h = vph::hatdb_upper_bound(x, y, std::max(opt.degree, 0), opt.max_extra, hopts);
		out["value"] = vph::value_json(h.bound);
		out.update(vph::hatdb_json(h));
		return emit();
	}
	if (opt.kind == "gh") {
		auto x = space_from_file<T>(opt.file_a);
		auto y = space_from_file<T>(opt.file_b);
		auto g = vph::gromov_hausdorff_exact(x, y);
		out["value"] = vph::value_json<T>(g.value);
		out["two_dgh"] = vph::value_json<T>(g.dis);
		vph::json corr = vph::json::array();
		for (auto [i, j] : g.correspondence) corr.push_back(vph::json::array({i, j}));
		out["correspondence"] = corr;
		out["nodes"] = g.nodes;
		return emit();
	}
	throw vph::input_error("unknown distance kind '" + opt.kind + "'");
}

template <typename T> int run_pullback_barcode(const cli_options& opt) {
	auto base = space_from_file<T>(opt.input_file);
	vph::pullback_spec<T> spec(base, opt.repeats);
	auto fam = vph::vr_verbose_barcodes(base, opt.field_char, opt.size_cap);
	int zn = base.n + (int)opt.repeats.size();
	int top = std::max(zn - 2, 0);
	int k_lo = opt.degree >= 0 ? opt.degree : 0;
	int k_hi = opt.degree >= 0 ? opt.degree : top;
	vph::barcode_family<T> result;
	for (int k = 0; k <= k_hi; ++k) {
		if (k < k_lo) {
			result.push_back({});
			continue;
		}
		result.push_back(opt.direct
		                     ? vph::pullback_barcode_direct(spec, k, opt.field_char, opt.size_cap)
		                     : vph::pullback_barcode_closed_form(spec, fam, k));
	}
	if (opt.format == "table") {
		for (int k = k_lo; k <= k_hi; ++k)
			std::cout << "degree " << k << ": " << vph::barcode_table(result[k]) << "\n";
	} else {
		vph::json out;
		out["route"] = opt.direct ? "direct" : "closed-form";
		vph::json doc = vph::json::object();
		for (int k = k_lo; k <= k_hi; ++k) doc[std::to_string(k)] = vph::barcode_json(result[k]);
		out["barcodes"] = doc;
		std::cout << out.dump(2) << "\n";
	}
	return 0;
}

template <typename T> int run_stability(const cli_options& opt) {
	auto x = space_from_file<T>(opt.file_a);
	auto y = space_from_file<T>(opt.file_b);
	vph::hatdb_options hopts;
	hopts.field_char = opt.field_char;
	hopts.size_cap = opt.size_cap;
	auto rep = vph::stability_chain_check(x, y, std::max(opt.degree, 0), opt.max_extra, hopts);
	if (opt.format == "table") {
		std::cout << "degree " << rep.degree << "\n";
		std::cout << "d_B(concise)   | pullback d_B bound | 2 d_GH\n";
		std::cout << rep.db_concise.str() << " | " << rep.hat.bound.str()
		          << (rep.hat.certified ? " (exact)" : " (upper bound)") << " | "
		          << vph::num_traits<T>::str(rep.two_dgh) << "\n";
		std::cout << (rep.ok ? "chain holds" : "CHAIN VIOLATED") << "\n";
	} else {
		std::cout << vph::stability_json(rep).dump(2) << "\n";
	}
	return rep.ok ? 0 : 1;
}

template <typename T> int run_verify(const cli_options& opt) {
	vph::paper_suite<T> suite(opt.data_dir);
	auto checks = suite.run();
	int failures = vph::paper_suite<T>::report(checks, std::cout);
	return failures == 0 ? 0 : 1;
}

template <typename T> int dispatch(const std::string& cmd, const cli_options& opt) {
	if (cmd == "barcode") return run_barcode<T>(opt);
	if (cmd == "distance") return run_distance<T>(opt);
	if (cmd == "pullback-barcode") return run_pullback_barcode<T>(opt);
	if (cmd == "stability") return run_stability<T>(opt);
	if (cmd == "verify-paper") return run_verify<T>(opt);
	throw vph::input_error("unknown subcommand");
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Verbose and concise Vietoris-Rips barcodes of finite metric spaces, "
	             "with matching, bottleneck, pullback and Gromov-Hausdorff distances"};
	app.require_subcommand(1);

	cli_options opt;
	if (const char* cap = std::getenv("VERBOSE_PH_SIZE_CAP")) {
		try {
			opt.size_cap = std::stoull(cap);
		} catch (const std::exception&) {
			std::cerr << "bad VERBOSE_PH_SIZE_CAP value\n";
			return 2;
		}
	}

	app.add_flag("--float", opt.float_mode, "compute with doubles instead of exact rationals");
	app.add_option("--char", opt.field_char, "prime field characteristic (default 2)");
	app.add_option("--format", opt.format, "output format: json or table")
	    ->check(CLI::IsMember({"json", "table"}));

	auto* bc = app.add_subcommand("barcode", "verbose (default) or concise barcodes of a space");
	bc->add_option("matrix", opt.input_file, "distance matrix file")->required();
	bc->add_option("--max-dim", opt.max_dim, "largest degree to compute (default: full complex)");
	bc->add_flag("--concise", opt.concise, "drop zero-persistence points");

	auto* dist = app.add_subcommand("distance", "distance between two inputs");
	dist->add_option("--kind", opt.kind, "dm|db|di|hatdb0|hatdb|gh")
	    ->check(CLI::IsMember({"dm", "db", "di", "hatdb0", "hatdb", "gh"}))
	    ->required();
	dist->add_option("a", opt.file_a, "first input (matrix or barcode json)")->required();
	dist->add_option("b", opt.file_b, "second input (matrix or barcode json)")->required();
	dist->add_option("--degree", opt.degree, "restrict to one degree");
	dist->add_option("--max-extra", opt.max_extra, "extra pullback points for hatdb (default 1)");

	auto* pb = app.add_subcommand("pullback-barcode", "verbose barcode of a pullback space");
	pb->add_option("matrix", opt.input_file, "base distance matrix file")->required();
	pb->add_option("--repeats", opt.repeats, "0-based base point indices to duplicate")
	    ->delimiter(',');
	pb->add_option("--degree", opt.degree, "restrict to one degree");
	pb->add_flag("--direct", opt.direct, "reduce the materialized space instead of the closed form");

	auto* st = app.add_subcommand("stability", "d_B <= pullback bound <= 2 d_GH report");
	st->add_option("a", opt.file_a, "first distance matrix")->required();
	st->add_option("b", opt.file_b, "second distance matrix")->required();
	st->add_option("--degree", opt.degree, "degree (default 0)");
	st->add_option("--max-extra", opt.max_extra, "extra pullback points (default 1)");

	auto* vp = app.add_subcommand("verify-paper", "run the bundled golden-value checklist");
	vp->add_option("--data-dir", opt.data_dir, "directory with the bundled matrices");

	CLI11_PARSE(app, argc, argv);
	std::string cmd = app.get_subcommands().front()->get_name();

	try {
		if (opt.float_mode) return dispatch<double>(cmd, opt);
		return dispatch<vph::rational>(cmd, opt);
	} catch (const vph::resource_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	} catch (const vph::input_error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
