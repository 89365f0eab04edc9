#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperoct/cli.hpp"
#include "hyperoct/serialize.hpp"

using namespace hyperoct;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(HYPEROCT_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("coeff by every method") {
  CHECK(call({"coeff", "--n", "2", "--lambda", "2", "--mu", "2", "--method", "pairings"}).out == "1\n");
  CHECK(call({"coeff", "--n", "3", "--lambda", "2,1", "--mu", "3", "--method", "formula"}).out ==
        call({"coeff", "--n", "3", "--lambda", "2,1", "--mu", "3", "--method", "pairings"}).out);
  CHECK(call({"coeff", "--n", "2", "--lambda", "2", "--mu", "2", "--method", "cosets"}).out == "8\n");
  CHECK(call({"coeff", "--n", "2", "--lambda", "2", "--mu", "2", "--nu", "1,1",
              "--method", "characters"}).out == "16\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"coeff", "--n"}).code == 2);
  CHECK(call({"coeff", "--n", "2", "--lambda", "3", "--mu", "2"}).code == 2);
  CHECK(call({"table", "--stat", "X", "--n", "2"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"coeff", "--n", "2", "--lambda", "2", "--mu", "2", "--nu", "1,1",
              "--method", "pairings"}).code == 2);
}

TEST_CASE("tables") {
  auto r = call({"table", "--stat", "L", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda,mu,count\n2,2,1\n2,1+1,1\n1+1,2,1\n");
  auto j = call({"table", "--stat", "LP", "--n", "2", "--format", "json"});
  CHECK(parseJson(j.out, "out")["2"]["2"] == "3");
  CHECK(call({"table", "--stat", "c", "--n", "3"}).out.find("2+1,2+1,3\n") !=
        std::string::npos);
}

TEST_CASE("series output") {
  auto r = call({"series", "--n", "2", "--basis", "m", "--side", "rhs"});
  REQUIRE(r.code == 0);
  auto json = parseJson(r.out, "out");
  CHECK(json["basis"] == "m");
  CHECK(json["entries"].size() == 3);
  CHECK(json["entries"][0]["value"] == "3");
  CHECK(call({"series", "--n", "3", "--basis", "p", "--side", "rhs"}).out ==
        call({"series", "--n", "3", "--basis", "p", "--side", "lhs"}).out);
}

TEST_CASE("bijection files") {
  const auto out = std::filesystem::temp_directory_path() / "hyperoct_cli_triple.json";
  auto r = call({"bijection", "inverse", "--input", data("forest_n11.json"),
                 "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("P=E_{4,1,0}+E_{7,0,3}") != std::string::npos);
  CHECK(hypermapFromJson(parseJson(readFile(out.string()), "out")) ==
        hypermapFromJson(parseJson(readFile(data("triple_n11.json")), "in")));
  std::filesystem::remove(out);

  auto f = call({"bijection", "forward", "--input", data("triple_n11.json")});
  CHECK(f.code == 0);
  CHECK(parseJson(f.out, "out") == parseJson(readFile(data("forest_n11.json")), "in"));

  // A valid JSON file that is not a valid forest gets a violation report.
  const auto bad = std::filesystem::temp_directory_path() / "hyperoct_bad_forest.json";
  {
    std::ofstream file(bad);
    file << R"({"n":1,"vertices":[{"id":0,"color":"black","kind":"seedRoot","descendants":[]}],"loopAssignments":{}})";
  }
  auto v = call({"bijection", "inverse", "--input", bad.string()});
  CHECK(v.code == 1);
  CHECK(v.err.find("invalid forest") != std::string::npos);
  std::filesystem::remove(bad);

  auto missing = call({"bijection", "forward", "--input", "/nonexistent.json"});
  CHECK(missing.code == 1);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--n", "2", "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.err.find("[main] n=1") != std::string::npos);
}
