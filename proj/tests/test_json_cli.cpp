#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ddmc/fuzz.hpp"
#include "ddmc/json_io.hpp"

using namespace ddmc;
using nlohmann::json;

namespace {

std::string write_temp_spec(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/ddmc_test_" + name + ".json";
  std::ofstream out(path);
  out << content;
  return path;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/ddmc_cli_out.txt";
  const std::string command = std::string(DDMC_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

}  // namespace

TEST_CASE("parsing the worked spec examples") {
  const auto indicator = parse_function_spec(
      R"({"dim": 2, "family": "indicator", "points": [[1,0],[0,1]]})");
  const auto& f = std::get<LatticeFunction>(indicator);
  CHECK(f({1, 0}) == ExtendedValue(0.0));
  CHECK(f({1, 1}).is_infinite());

  // Dominance is not required to construct a quadratic, only to decompose.
  const auto quad = parse_function_spec(
      R"({"dim": 2, "family": "quadratic", "Q": [[5,2],[2,1]],
          "box": {"lo": [-2,-2], "hi": [2,2]}})");
  CHECK(std::get<LatticeFunction>(quad)({1, -1}) == ExtendedValue(2.0));

  // Convex univariate table accepted; the non-convex one is rejected with
  // the violating point named.
  const auto sep = parse_function_spec(
      R"({"dim": 1, "family": "separable", "box": {"lo": [0], "hi": [3]},
          "pieces": [{"kind": "table", "lo": 0, "values": [3,1,2,5]}]})");
  CHECK(std::get<LatticeFunction>(sep)({1}) == ExtendedValue(1.0));

  CHECK_THROWS_WITH_AS(
      parse_function_spec(
          R"({"dim": 1, "family": "separable", "box": {"lo": [0], "hi": [2]},
              "pieces": [{"kind": "table", "lo": 0, "values": [0,2,1]}]})"),
      doctest::Contains("t = 1"), SpecError);
}

TEST_CASE("spec validation names the offending path") {
  CHECK_THROWS_WITH_AS(parse_function_spec("{"), doctest::Contains("invalid JSON"), SpecError);
  CHECK_THROWS_WITH_AS(parse_function_spec(R"({"family": "table"})"),
                       doctest::Contains("dim"), SpecError);
  CHECK_THROWS_WITH_AS(
      parse_function_spec(
          R"({"dim": 2, "family": "quadratic", "Q": [[1,2],[3,1]],
              "box": {"lo": [0,0], "hi": [1,1]}})"),
      doctest::Contains("not symmetric"), SpecError);
  CHECK_THROWS_WITH_AS(
      parse_function_spec(
          R"({"dim": 2, "family": "quadratic", "Q": [[1,1e999],[1e999,1]],
              "box": {"lo": [0,0], "hi": [1,1]}})"),
      doctest::Contains("finite"), SpecError);
  CHECK_THROWS_WITH_AS(
      parse_function_spec(
          R"({"dim": 1, "family": "table", "box": {"lo": [0], "hi": [1]},
              "values": [{"x": [0], "v": 1}]})"),
      doctest::Contains("unlisted"), SpecError);
  CHECK_THROWS_WITH_AS(
      parse_function_spec(
          R"({"dim": 1, "family": "table", "box": {"lo": [0], "hi": [1]}, "sparse": true,
              "values": [{"x": [5], "v": 1}]})"),
      doctest::Contains("outside"), SpecError);
  CHECK_THROWS_WITH_AS(
      parse_function_spec(
          R"({"dim": 1, "family": "table", "box": {"lo": [0], "hi": [1]}, "sparse": true,
              "values": [{"x": [0], "v": 1}, {"x": [0], "v": 2}]})"),
      doctest::Contains("twice"), SpecError);
  CHECK_THROWS_WITH_AS(parse_function_spec(R"({"dim": 1, "family": "mystery"})"),
                       doctest::Contains("unknown family"), SpecError);
}

TEST_CASE("continuous specs parse") {
  const auto parsed = parse_function_spec(
      R"({"continuous": true, "dim": 2, "family": "quadratic",
          "Q": [[1,0],[0,1]], "c": [-1,-1], "universe": {"lo": [-4,-4], "hi": [4,4]}})");
  const auto& F = std::get<ContinuousFunction>(parsed);
  CHECK(F({0.5, 0.5}).finite() == doctest::Approx(-0.5));

  const auto hull = parse_function_spec(
      R"({"continuous": true, "dim": 3, "family": "simplex_hull"})");
  CHECK(std::get<ContinuousFunction>(hull)({0.5, 0.25, 0.25}) == ExtendedValue(0.0));
}

TEST_CASE("report serialization shape") {
  const auto parsed = parse_function_spec(
      R"({"dim": 2, "family": "indicator", "points": [[1,0],[0,1]]})");
  const auto& f = std::get<LatticeFunction>(parsed);
  const auto report = classify_all(f, f.universe(), default_classes());
  const json j = json::parse(render_classification(report));
  REQUIRE(j.contains("classes"));
  CHECK(j["classes"].size() == 6);
  for (const auto& entry : j["classes"]) {
    CHECK(entry.contains("class"));
    CHECK(entry.contains("holds"));
    CHECK(entry.contains("witness"));
    CHECK(entry.contains("pairs_checked"));
  }
  // The L-natural entry carries the witness pair.
  for (const auto& entry : j["classes"]) {
    if (entry["class"] == "lnat") {
      CHECK(!entry["holds"].get<bool>());
      CHECK(entry["witness"]["x"] == json::array({0, 1}));
      CHECK(entry["witness"]["y"] == json::array({1, 0}));
    }
    if (entry["class"] == "ddm") CHECK(entry["holds"].get<bool>());
  }
}

TEST_CASE("fuzz reports are byte-identical for a fixed seed") {
  const FuzzOutcome a = run_fuzz(12345, 8, "table");
  const FuzzOutcome b = run_fuzz(12345, 8, "table");
  CHECK(a.report_json == b.report_json);
  CHECK(a.all_consistent);
  const FuzzOutcome c = run_fuzz(54321, 8, "table");
  CHECK(a.report_json != c.report_json);

  const FuzzOutcome q = run_fuzz(99, 6, "quadratic");
  CHECK(q.all_consistent);
  const FuzzOutcome s = run_fuzz(99, 6, "2sep");
  CHECK(s.all_consistent);
  CHECK_THROWS_AS(run_fuzz(1, 1, "nope"), ArgumentError);
}

TEST_CASE("cli is a thin shell over the library") {
  const std::string spec =
      R"({"dim": 2, "family": "indicator", "points": [[1,0],[0,1]]})";
  const std::string path = write_temp_spec("thin_shell", spec);

  const CommandResult cli = run_cli("--format json classify " + path);
  CHECK(cli.exit_code == 1);  // lnat and others are violated

  const auto parsed = parse_function_spec(spec);
  const auto& f = std::get<LatticeFunction>(parsed);
  const std::string direct = render_classification(classify_all(f, f.universe(), default_classes()));
  CHECK(cli.output == direct + "\n");
}

TEST_CASE("cli exit codes") {
  const std::string ddm_spec = write_temp_spec(
      "exit_holds",
      R"({"dim": 1, "family": "separable", "box": {"lo": [-3], "hi": [3]},
          "pieces": [{"kind": "abs", "center": 0}]})");
  CHECK(run_cli("classify " + ddm_spec).exit_code == 0);

  const std::string bad_spec = write_temp_spec("exit_usage", R"({"dim": 1})");
  CHECK(run_cli("classify " + bad_spec).exit_code == 2);

  CHECK(run_cli("classify /tmp/ddmc_no_such_file.json").exit_code == 2);

  const std::string big_spec = write_temp_spec(
      "exit_resource",
      R"({"dim": 2, "family": "quadratic", "Q": [[1,0],[0,1]],
          "box": {"lo": [-9,-9], "hi": [9,9]}})");
  const CommandResult capped = run_cli("classify " + big_spec + " --classes ddm");
  CHECK(capped.exit_code == 0);
  const std::string env_cmd = "DDMC_MAX_PAIRS=10 " + std::string(DDMC_CLI_PATH) +
                              " classify " + big_spec + " > /tmp/ddmc_cli_out.txt 2>&1";
  CHECK(WEXITSTATUS(std::system(env_cmd.c_str())) == 3);

  CHECK(run_cli("gallery").exit_code == 0);
  CHECK(run_cli("fuzz --seed 4 --count 3 --family quadratic").exit_code == 0);
  CHECK(run_cli("minimize " + ddm_spec + " --from 3").exit_code == 0);
  CHECK(run_cli("verify " + ddm_spec + " --property proximity --alpha 2").exit_code == 0);
  CHECK(run_cli("verify " + ddm_spec + " --property parallelogram").exit_code == 0);
}

TEST_CASE("cli fuzz output is deterministic across runs") {
  const CommandResult first = run_cli("--format json fuzz --seed 2024 --count 4 --family 2sep");
  const CommandResult second = run_cli("--format json fuzz --seed 2024 --count 4 --family 2sep");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output == run_fuzz(2024, 4, "2sep").report_json + "\n");
}

TEST_CASE("gallery json reports every fixture as passing") {
  const CommandResult result = run_cli("--format json gallery");
  CHECK(result.exit_code == 0);
  const json j = json::parse(result.output);
  CHECK(j["all_pass"].get<bool>());
  CHECK(j["fixtures"].size() >= 10);
  for (const auto& fixture : j["fixtures"]) CHECK(fixture["pass"].get<bool>());
}
