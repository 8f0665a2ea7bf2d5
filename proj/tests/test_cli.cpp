#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "mixspec/cli.hpp"

using namespace mixspec;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"solve", "--family", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "--max-n", "11"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("malformed graph6 reports its position") {
  const Run r = run({"spectrum", "C~~"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(run({"classify"}, "D\x10").code == kExitUsage);
}

TEST_CASE("malformed type reports its position") {
  const Run r = run({"expand", "--base", "P3", "--type", "3,0,1"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(run({"expand", "--base", "P3", "--type", "3,1"}).code == kExitUsage);
}

TEST_CASE("expand") {
  const Run r = run({"expand", "--base", "P3", "--type", "3,.,-2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "E~CO\n");
  CHECK(run({"expand", "--base", "Bg", "--type", "3,.,-2"}).out == "E~CO\n");
}

TEST_CASE("spectrum") {
  const Run r = run({"spectrum", "C~"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["order"] == 4);
  CHECK(j["m_neg1"] == 3);
  CHECK(j["n_pos"] == 1);
  CHECK(j["char_poly"] == "x^4 - 6x^2 - 8x - 3");

  const Run edges = run({"spectrum", "--edges", "0-1,1-2,2-3,3-4,4-0"});
  REQUIRE(edges.code == kExitOk);
  CHECK(Json::parse(edges.out)["n_pos"] == 3);

  const Run piped = run({"spectrum"}, "C~\n");
  CHECK(Json::parse(piped.out) == j);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "E~CO"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["in_class_G"] == true);
  CHECK(j["in_Gpp"] == true);
  bool p3 = false;
  for (const auto& l : j["labels"]) p3 = p3 || l["family"] == "P3(i)";
  CHECK(p3);

  const Json c5 = Json::parse(run({"classify", "Dhc"}).out);
  CHECK(c5["in_class_G"] == false);
  CHECK(c5["labels"].empty());
  CHECK(c5["witnesses"][0]["name"] == "C5");
}

TEST_CASE("reduce") {
  const Json j = Json::parse(run({"reduce", "E~CO"}).out);
  CHECK(j["type"] == Json::array({3, 1, -2}));
}

TEST_CASE("forbidden") {
  const Json scan = Json::parse(run({"forbidden", "--scan", "Dhc"}).out);
  REQUIRE(scan["witnesses"].size() == 1);
  CHECK(scan["witnesses"][0]["vertices"] == Json::array({0, 1, 2, 3, 4}));

  const Run mine = run({"forbidden", "--mine", "--max-n", "5"});
  REQUIRE(mine.code == kExitOk);
  const Json m = Json::parse(mine.out);
  CHECK(m["graphs"].size() >= 6);
  CHECK(run({"forbidden", "--mine", "--max-n", "9"}).code == kExitUsage);
}

TEST_CASE("solve") {
  const Run iii = run({"solve", "--family", "iii"});
  REQUIRE(iii.code == kExitOk);
  const Json j = Json::parse(iii.out);
  CHECK(j["solutions"].size() == 10);
  CHECK(j["solutions"][0] == Json::array({3, 3, 6}));
  CHECK(j["certificate"]["identity_holds"] == true);

  const Json bip = Json::parse(run({"solve", "--family", "bipP4", "--bound", "50"}).out);
  CHECK(bip["solutions"] == Json::parse("[[1,2,1,3],[1,3,2,2],[2,1,1,2]]"));

  const Run nosol = run({"solve", "--family", "nosol"});
  CHECK(nosol.code == kExitOk);
  CHECK(Json::parse(nosol.out)["all_clear"] == true);

  CHECK(run({"solve", "--family", "iv", "--bound", "5"}).code == kExitUsage);
}

TEST_CASE("verify output is deterministic across job counts") {
  const Run one = run({"verify", "--max-n", "7", "--jobs", "1"});
  const Run three = run({"verify", "--max-n", "7", "--jobs", "3"});
  REQUIRE(one.code == kExitOk);
  CHECK(one.out == three.out);
  const Json j = Json::parse(one.out);
  CHECK(j["total_discrepancies"] == 0);
  CHECK(j["orders"].size() == 6);
  CHECK(j["orders"][5]["connected"]["examined"] == 853);
  CHECK(j["orders"][5].count("seconds") == 0);
  CHECK(one.err.find("order 7") != std::string::npos);

  const Json timed = Json::parse(run({"verify", "--max-n", "4", "--timings"}).out);
  CHECK(timed["orders"][0].count("seconds") == 1);
}

TEST_CASE("verify against a catalog file") {
  const std::string corpus = MIXSPEC_TEST_DATA "/atlas_upto6.g6";
  const Run r = run({"verify", "--max-n", "6", "--catalog", corpus});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["config"]["catalog"] == corpus);
  // The corpus holds all 208 graphs on 1..6 vertices, isolated vertices included.
  CHECK(j["total_examined"] == 208);

  const auto report = std::filesystem::temp_directory_path() / "mixspec_report_test.json";
  CHECK(run({"verify", "--max-n", "5", "--report", report.string()}).code == kExitOk);
  std::ifstream file(report);
  CHECK(Json::parse(file)["total_discrepancies"] == 0);
  std::filesystem::remove(report);

  CHECK(run({"verify", "--catalog", "/nonexistent/catalog.g6"}).code == kExitUsage);
}

TEST_CASE("verify rejects a corrupt catalog") {
  const auto path = std::filesystem::temp_directory_path() / "mixspec_bad_catalog.g6";
  {
    std::ofstream file(path);
    file << "Dhc\nC~\nnot-graph6\n";
  }
  CHECK(run({"verify", "--max-n", "6", "--catalog", path.string()}).code == kExitUsage);
  std::filesystem::remove(path);
}
