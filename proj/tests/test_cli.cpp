#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Drives the installed CLI binary end to end. VPH_CLI_PATH and
// VPH_DATA_DIR are injected by the build.

namespace {

struct run_result {
	int exit_code = -1;
	std::string out;
};

run_result run(const std::string& args) {
	std::string cmd = std::string(VPH_CLI_PATH) + " " + args + " 2>&1";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	run_result r;
	char buf[4096];
	size_t got;
	while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
	int status = pclose(pipe);
	r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::string data_file(const std::string& name) { return std::string(VPH_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
	std::string path = std::string("cli_tmp_") + name;
	std::ofstream out(path);
	out << content;
	return path;
}

}  // namespace

TEST_CASE("barcode of a one-point space") {
	auto path = write_temp("one.dist", "1\n0\n");
	auto r = run("barcode " + path);
	REQUIRE(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["0"] == nlohmann::json::parse(R"([["0","inf"]])"));
}

TEST_CASE("barcode of the 4-point space X in table mode") {
	auto r = run("--format table barcode " + data_file("four_point_x.dist"));
	REQUIRE(r.exit_code == 0);
	CHECK(r.out.find("degree 0: {(0,1)_2, (0,2), (0,inf)}") != std::string::npos);
	CHECK(r.out.find("degree 1: {(1,1), (2,2)_2}") != std::string::npos);
	CHECK(r.out.find("degree 2: {(2,2)}") != std::string::npos);
}

TEST_CASE("barcode of the 5-point space X matches the printed list") {
	auto r = run("--format table barcode " + data_file("five_point_x.dist"));
	REQUIRE(r.exit_code == 0);
	CHECK(r.out.find("degree 0: {(0,1/2), (0,1)_2, (0,2), (0,inf)}") != std::string::npos);
	CHECK(r.out.find("degree 1: {(1,1), (2,2)_5}") != std::string::npos);
	CHECK(r.out.find("degree 2: {(2,2)_4}") != std::string::npos);
	CHECK(r.out.find("degree 3: {(2,2)}") != std::string::npos);
}

TEST_CASE("concise flag filters diagonal points") {
	auto r = run("--format table barcode --concise " + data_file("four_point_y.dist"));
	REQUIRE(r.exit_code == 0);
	CHECK(r.out.find("degree 1: {}") != std::string::npos);
}

TEST_CASE("invalid input exits with code 2 and names the axiom") {
	auto path = write_temp("bad.dist", "3\n0 3 1\n3 0 1\n1 1 0\n");
	auto r = run("barcode " + path);
	CHECK(r.exit_code == 2);
	CHECK(r.out.find("TriangleViolation(0,2,1)") != std::string::npos);
}

TEST_CASE("size cap exits with code 3 and can be overridden by the env var") {
	auto r = run("barcode " + data_file("five_point_x.dist"));
	CHECK(r.exit_code == 0);
	auto capped = run("barcode " + data_file("five_point_x.dist"));
	(void)capped;
	std::string cmd = "VERBOSE_PH_SIZE_CAP=8 " + std::string(VPH_CLI_PATH) + " barcode " +
	                  data_file("five_point_x.dist") + " 2>&1; echo exit=$?";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::string out;
	char buf[1024];
	size_t got;
	while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
	pclose(pipe);
	CHECK(out.find("SizeCapExceeded") != std::string::npos);
	CHECK(out.find("exit=3") != std::string::npos);
}

TEST_CASE("distance dm on identical files is zero with an assignment") {
	auto f = data_file("four_point_x.dist");
	auto r = run("distance --kind dm --degree 1 " + f + " " + f);
	REQUIRE(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["value"] == "0");
	CHECK(doc["assignment"].size() == 3);
}

TEST_CASE("distance dm reports inf with exit 0 on mismatched cardinalities") {
	auto r = run("distance --kind dm " + data_file("four_point_x.dist") + " " +
	             data_file("five_point_x.dist"));
	REQUIRE(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["value"] == "inf");
}

TEST_CASE("distance db on (Z,W) in degree 1 is 1/2") {
	auto r = run("distance --kind db --degree 1 " + data_file("four_point_z.dist") + " " +
	             data_file("four_point_w.dist"));
	REQUIRE(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["value"] == "1/2");
}

TEST_CASE("distance accepts barcode json files") {
	auto f = data_file("four_point_x.dist");
	auto bc = run("barcode " + f);
	REQUIRE(bc.exit_code == 0);
	auto path = write_temp("x_barcode.json", bc.out);
	auto r = run("distance --kind dm " + path + " " + f);
	REQUIRE(r.exit_code == 0);
	CHECK(nlohmann::json::parse(r.out)["value"] == "0");
}

TEST_CASE("distance gh on the 3-point instantiation gives |c1-c2|/2") {
	auto a = write_temp("x1.dist", "3\n0 1 2\n1 0 2\n2 2 0\n");
	auto b = write_temp("x2.dist", "3\n0 1 3\n1 0 2\n3 2 0\n");
	auto r = run("distance --kind gh " + a + " " + b);
	REQUIRE(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["value"] == "1/2");
	CHECK(doc["two_dgh"] == "1");
	CHECK(doc["correspondence"].size() >= 3);
}

TEST_CASE("distance hatdb0 and hatdb") {
	auto a = write_temp("e0.dist", "2\n0 1\n1 0\n");
	auto b = write_temp("e2.dist", "2\n0 3\n3 0\n");
	auto r0 = run("distance --kind hatdb0 " + a + " " + b);
	REQUIRE(r0.exit_code == 0);
	CHECK(nlohmann::json::parse(r0.out)["value"] == "2");
	auto r1 = run("distance --kind hatdb --degree 1 --max-extra 1 " +
	              data_file("four_point_x.dist") + " " + data_file("four_point_y.dist"));
	REQUIRE(r1.exit_code == 0);
	auto doc = nlohmann::json::parse(r1.out);
	CHECK(doc["value"] == "0");
	CHECK(doc["certified"] == true);
	CHECK(doc["witness"]["z_size"] == 5);
}

TEST_CASE("pullback-barcode closed form and direct agree on the CLI") {
	auto f = data_file("four_point_x.dist");
	auto r = run("--format table pullback-barcode " + f + " --repeats 3");
	REQUIRE(r.exit_code == 0);
	CHECK(r.out.find("degree 1: {(1,1), (2,2)_5}") != std::string::npos);
	CHECK(r.out.find("degree 3: {(2,2)}") != std::string::npos);
	auto rd = run("--format table pullback-barcode " + f + " --repeats 3 --direct");
	REQUIRE(rd.exit_code == 0);
	CHECK(rd.out == r.out);
}

TEST_CASE("stability subcommand emits the three-column report") {
	auto r = run("stability --degree 1 --max-extra 1 " + data_file("four_point_z.dist") + " " +
	             data_file("four_point_w.dist"));
	REQUIRE(r.exit_code == 0);
	auto doc = nlohmann::json::parse(r.out);
	CHECK(doc["db_concise"] == "1/2");
	CHECK(doc["hatdb_bound"] == "1");
	CHECK(doc["hatdb_certified"] == true);
	CHECK(doc["two_dgh"] == "1");
	CHECK(doc["ok"] == true);
}

TEST_CASE("verify-paper passes on the bundled data") {
	auto r = run("verify-paper --data-dir " + std::string(VPH_DATA_DIR));
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("all checks passed") != std::string::npos);
	CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify-paper in float mode matches within tolerance") {
	auto r = run("--float verify-paper --data-dir " + std::string(VPH_DATA_DIR));
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("float mode") != std::string::npos);
	CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify-paper names the failure when a bundled file is tampered") {
	std::string tmpdir = "cli_tamper_data";
	std::string cmd = "rm -rf " + tmpdir + " && cp -r " + std::string(VPH_DATA_DIR) + " " + tmpdir;
	REQUIRE(std::system(cmd.c_str()) == 0);
	{
		std::ofstream out(tmpdir + "/four_point_x.dist");
		out << "4\n0 1 1 2\n1 0 2 2\n1 2 0 2\n2 2 2 0\n";  // one entry changed: 1 -> 2
	}
	auto r = run("verify-paper --data-dir " + tmpdir);
	CHECK(r.exit_code == 1);
	CHECK(r.out.find("FAIL 4-point spaces: verbose barcodes") != std::string::npos);
}
