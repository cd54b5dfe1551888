#include "cli.hpp"

#include "arcfree/version.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
	int code;
	std::string out, err;
	nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = arcfree::cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("ope command")
{
	auto r = run({"ope", "beta_1", "gamma_1"});
	CHECK(r.code == 0);
	auto j = r.json();
	CHECK(j["schema"] == "arcfree.report/1");
	CHECK(j["status"] == "pass");
	CHECK(j["tool_version"] == std::string(arcfree::tool_version()));
	CHECK(j["config"]["a"] == "beta_1");

	auto t = run({"ope", ":beta_1 gamma_1:", ":beta_1 gamma_1:", "--format", "text"});
	CHECK(t.code == 0);
	CHECK(t.out.find("-1") != std::string::npos);

	auto bad = run({"ope", ":beta_1 gamma_2", "beta_1"});
	CHECK(bad.code == 2);
	CHECK(bad.json()["status"] == "error");
	CHECK(bad.json()["error"].get<std::string>().find("unbalanced") != std::string::npos);
}

TEST_CASE("verification commands")
{
	auto r = run({"verify-ope", "--family", "s2", "--n", "1", "--m", "1", "--r", "1"});
	CHECK(r.code == 0);
	CHECK(r.json()["status"] == "pass");
	CHECK(r.json()["config"]["n"] == 1);

	CHECK(run({"coset-check", "--n", "1", "--m", "1", "--r", "1"}).code == 0);
	CHECK(run({"embed-check", "--n", "1", "--m", "1", "--r", "1"}).code == 0);
	CHECK(run({"sugawara", "--which", "coset"}).code == 0);

	auto bad = run({"verify-ope", "--corrupt", "0"});
	CHECK(bad.code == 1);
	CHECK(bad.json()["status"] == "fail");
	CHECK(run({"coset-check", "--corrupt", "1"}).code == 1);
}

TEST_CASE("usage errors exit 2")
{
	CHECK(run({"certify", "--n", "1", "--m", "-1", "--r", "1"}).code == 2);
	CHECK(run({"certify", "--no-such-flag"}).code == 2);
	CHECK(run({}).code == 2);
	CHECK(run({"verify-ope", "--family", "s9"}).code == 2);
	CHECK(run({"char", "--format", "xml"}).code == 2);
	CHECK(run({"--version"}).code == 0);
}

TEST_CASE("certify through weight 2")
{
	auto r = run({"certify", "--n", "1", "--m", "1", "--r", "1", "--max-weight", "2", "--with-jet"});
	CHECK(r.code == 0);
	auto j = r.json();
	CHECK(j["result"]["verdict"] == "equal-through-2");

	auto drop = run({"certify", "--max-weight", "2", "--drop-relation", "0"});
	CHECK(drop.code == 1);
	CHECK(drop.json()["result"]["verdict"].get<std::string>().rfind("mismatch-at(", 0) == 0);
}

TEST_CASE("tables are independent of the thread count")
{
	for (std::string cmd : {"char", "zhu", "arc-hilbert", "invariants", "certify"})
	{
		CAPTURE(cmd);
		auto one = run({cmd, "--max-weight", "2", "--threads", "1"});
		auto four = run({cmd, "--max-weight", "2", "--threads", "4"});
		REQUIRE(one.code == 0);
		REQUIRE(four.code == 0);
		CHECK(one.json()["result"] == four.json()["result"]);
	}
}

TEST_CASE("csv output and report directories")
{
	auto csv = run({"char", "--max-weight", "2", "--format", "csv"});
	CHECK(csv.code == 0);
	CHECK(csv.out.find(',') != std::string::npos);
	CHECK(run({"ope", "beta_1", "gamma_1", "--format", "csv"}).code == 2);

	auto dir = std::filesystem::temp_directory_path() / "arcfree_cli_test";
	std::filesystem::remove_all(dir);
	auto r = run({"verify-ope", "--report-dir", dir.string()});
	CHECK(r.code == 0);
	auto path = dir / "verify-ope" / "s2_n1_m1_r1.json";
	REQUIRE(std::filesystem::exists(path));
	std::ifstream f(path);
	auto j = nlohmann::json::parse(f);
	CHECK(j["command"] == "verify-ope");
	CHECK(j["status"] == "pass");

	auto out = dir / "x.json";
	CHECK(run({"sugawara", "-o", out.string()}).code == 0);
	CHECK(std::filesystem::exists(out));
	std::filesystem::remove_all(dir);
}
