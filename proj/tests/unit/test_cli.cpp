#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gqs/cli.hpp"

using gqs::runCommand;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = runCommand(args, out, err);
  return {status, out.str(), err.str()};
}

std::string doc(const std::string& name) { return std::string(GQS_DOCUMENTS_DIR) + "/" + name; }

std::filesystem::path tempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gqs_cli_test_" + name);
}

nlohmann::json readJson(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check prints verdicts and witnesses") {
    auto r = run({"check", "quasi-semiprime", "-s", doc("free_rank_two.json"), "-N", "N"});
    CHECK(r.status == 0);
    CHECK(r.out == "true\n");

    r = run({"check", "semiprime", "-s", doc("free_rank_two.json"), "-N", "N"});
    CHECK(r.status == 0);
    CHECK(r.out == "false  witness: r=2 m=(3,0) n=2\n");

    r = run({"check", "semiprime", "-s", doc("cyclic_eight_over_z.json"), "-N", "N"});
    CHECK(r.out == "false  witness: r=2 m=1 n=2\n");
    r = run({"check", "quasi-semiprime", "-s", doc("cyclic_eight_over_z.json"), "-N", "N"});
    CHECK(r.out.rfind("false", 0) == 0);

    r = run({"check", "radical", "-s", doc("z8_self.json"), "-I", "Four"});
    CHECK(r.out == "{0,2,4,6}\n");
  }

  TEST_CASE("expect turns a verdict into an exit status") {
    CHECK(run({"check", "semiprime", "-s", doc("free_rank_two.json"), "-N", "N", "--expect", "true"}).status == 1);
    CHECK(run({"check", "semiprime", "-s", doc("free_rank_two.json"), "-N", "N", "--expect", "false"}).status == 0);
    CHECK(run({"check", "semiprime", "-s", doc("z8_self.json"), "-N", "Two", "--expect", "true"}).status == 0);
    CHECK(run({"check", "semiprime", "-s", doc("z8_self.json"), "-N", "Two", "--expect", "maybe"}).status == 2);
  }

  TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"check", "bogus", "-s", doc("z8_self.json")}).status == 2);
    CHECK(run({"check", "semiprime", "-s", doc("z8_self.json"), "-N", "Nope"}).status == 2);
    CHECK(run({"check", "semiprime", "-s", doc("missing.json"), "-N", "N"}).status == 2);
    CHECK(run({"verify", "T9.9"}).status == 2);
    CHECK(run({"verify", "all", "--catalog", "bogus"}).status == 2);
    const auto seedless = run({"--seedless", "verify", "all"});
    CHECK(seedless.status == 2);
    CHECK_FALSE(seedless.err.empty());
    CHECK(run({"verify", "all", "--seedless"}).status == 2);
  }

  TEST_CASE("enumerate") {
    auto r = run({"enumerate", "submodules", "-s", doc("split_z2_pair.json")});
    CHECK(r.status == 0);
    CHECK(r.out == "{(0,0)}\n{(0,0),(1,0)}\n{(0,0),(0,1)}\n{(0,0),(1,0),(0,1),(1,1)}\n");
    r = run({"enumerate", "ideals", "-s", doc("z8_self.json")});
    CHECK(r.out == "{0}\n{0,4}\n{0,2,4,6}\n{0,1,2,3,4,5,6,7}\n");
  }

  TEST_CASE("verify and search") {
    auto r = run({"verify", "T2.2", "--catalog", "small", "--no-timing"});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    r = run({"search", "--catalog", "small"});
    CHECK(r.status == 0);
    CHECK(r.out.find("<(4,0)>") != std::string::npos);
    r = run({"catalog", "list", "--catalog", "small"});
    CHECK(r.out.rfind("profile small:", 0) == 0);
  }

  TEST_CASE("json output") {
    const auto path = tempFile("check.json");
    auto r = run({"check", "semiprime", "-s", doc("free_rank_two.json"), "-N", "N", "--json", path.string()});
    CHECK(r.status == 0);
    const auto j = readJson(path);
    CHECK(j.at("verdict") == false);
    CHECK(j.at("witness") == "r=2 m=(3,0) n=2");

    const auto report = tempFile("verify.json");
    r = run({"verify", "all", "--catalog", "small", "--json", report.string()});
    CHECK(r.status == 0);
    const auto v = readJson(report);
    CHECK(v.at("schema") == "gqs-report/1");
    CHECK(v.at("reports").size() == 10);
    std::filesystem::remove(path);
    std::filesystem::remove(report);
  }
}
