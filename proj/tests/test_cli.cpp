#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace mckay;

namespace {

const char* const k12 = R"({"n": 1, "generators": [{"order": 2, "weights": [1, 1]}]})";
const char* const k13 = R"({"n": 2, "generators": [{"order": 3, "weights": [1, 1, 1]}]})";
const char* const k14 = R"({"n": 3, "generators": [{"order": 4, "weights": [1, 1, 1, 1]}]})";
const char* const kC22 =
    R"({"n": 2, "generators": [{"order": 2, "weights": [1, 1, 0]}, {"order": 2, "weights": [1, 0, 1]}]})";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(MCKAY_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("analyze") {
  Result r = run({"analyze"}, k13);
  REQUIRE(r.code == cli::kOk);
  Json j = Json::parse(r.out);
  CHECK(j["types"]["types"].size() == 4);
  CHECK(j["hollow"] == false);

  j = Json::parse(run({"analyze"}, kC22).out);
  CHECK(j["types"]["types"].size() == 6);
  CHECK(j["hollow"] == true);

  j = Json::parse(run({"analyze"}, R"({"n": 2, "generators": []})").out);
  CHECK(j["quiver"]["vertices"] == 1);
  CHECK(j["hollow"] == true);
}

TEST_CASE("input from a file") {
  const std::string path = temp_file("g13.json", k13);
  const Result r = run({"types", "--input", path}, "");
  CHECK(r.code == cli::kOk);
  CHECK(Json::parse(r.out)["positive"].size() == 1);
}

TEST_CASE("construct") {
  Result r = run({"construct", "--type", "1,1,1"}, k13);
  REQUIRE(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["cut"]["arrows"].size() == 3);
  CHECK(j["acyclic"] == true);
  CHECK(j["presentation"]["relations"].size() == 3);
  CHECK(j["height"]["values"]["2,0"] == 2);

  r = run({"construct", "--type", "1,1,1", "--format", "dot"}, k13);
  CHECK(r.out.find("digraph") == 0);
}

TEST_CASE("lattice and extremes") {
  for (const auto& [input, type, size] :
       std::vector<std::tuple<std::string, std::string, std::size_t>>{
           {k12, "1,1", 2}, {k13, "1,1,1", 3}, {k14, "1,1,1,1", 4}}) {
    const Result r = run({"lattice", "--type", type}, input);
    REQUIRE(r.code == cli::kOk);
    const Json j = Json::parse(r.out);
    CHECK(j["cuts"].size() == size);
    CHECK(j["hasse"].size() == size - 1);
  }
  const Result e = run({"extremes", "--type", "1,1,1"}, k13);
  REQUIRE(e.code == cli::kOk);
  CHECK(Json::parse(e.out)["agreement"] == true);

  const Result np = run({"extremes", "--type", "2,2,0"}, kC22);
  REQUIRE(np.code == cli::kOk);
  CHECK(Json::parse(np.out)["experiment"]["status"] == "ran");
}

TEST_CASE("verify") {
  Result r = run({"verify"}, k12);
  CHECK(r.code == cli::kOk);
  CHECK(Json::parse(r.out)["status"] == "pass");

  r = run({"verify", "--budget", "0"}, k13);
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("oracle skipped") != std::string::npos);

  // A cut with one arrow removed.
  Json cut = Json::parse(run({"construct", "--type", "1,1"}, k12).out)["cut"];
  cut["arrows"].erase(0);
  const std::string path = temp_file("broken_cut.json", cut.dump());
  r = run({"verify", "--cut", path}, k12);
  CHECK(r.code == cli::kVerifyFailed);
  CHECK(r.out.find("elementary cycle uncovered") != std::string::npos);
  CHECK(Json::parse(r.out)["status"] == "fail");
}

TEST_CASE("export-dot") {
  CHECK(run({"export-dot", "quiver"}, k13).out.find("digraph Q") == 0);
  CHECK(run({"export-dot", "cut", "--type", "1,1,1"}, k13).out.find("dashed") != std::string::npos);
  CHECK(run({"export-dot", "hasse", "--type", "1,1,1"}, k13).out.find("digraph Hasse") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze"}, "{not json").code == cli::kParseError);
  CHECK(run({"analyze"}, R"({"n": 2, "generators": [{"order": 3, "weights": [1, 1, 2]}]})").code ==
        cli::kParseError);
  CHECK(run({"no-such-command"}, k13).code == cli::kParseError);
  CHECK(run({"lattice"}, k13).code == cli::kParseError);  // --type missing
  CHECK(run({"types", "--input", "/nonexistent/file.json"}, "").code == cli::kParseError);
  CHECK(run({"analyze"}, R"({"n": 9, "generators": []})").code == cli::kSizeError);
  CHECK(run({"analyze"}, R"({"n": 1, "generators": [{"order": 100000, "weights": [1, 99999]}]})")
            .code == cli::kSizeError);
  CHECK(run({"construct", "--type", "2,1,0"}, k13).code == cli::kInadmissibleType);
  CHECK(run({"construct", "--type", "1,1"}, k13).code == cli::kInadmissibleType);
  CHECK(run({"lattice", "--type", "2,2,0", "--budget", "3"}, kC22).code == cli::kUnsupported);
  CHECK(run({"verify", "--budget", "-1"}, k13).code == cli::kParseError);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze"}, {"lattice", "--type", "1,1,1"}, {"verify"}, {"export-dot", "quiver"}}) {
    CHECK(run(args, k13).out == run(args, k13).out);
  }
}
