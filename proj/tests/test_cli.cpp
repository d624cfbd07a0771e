// Runs the installed command line binary as a subprocess and checks exit
// codes, text output and the JSON output against the schemas.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "schema_check.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr folds into stdout so error text is
// checkable too.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env;
  if (!cmd.empty()) cmd += " ";
  cmd += std::string(TEST_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void check_schema(const std::string& text, const std::string& schema_file) {
  nlohmann::json value = nlohmann::json::parse(text);
  nlohmann::json sch =
      schema::load(std::string(TEST_SCHEMA_DIR) + "/" + schema_file);
  std::string err = schema::validate(value, sch);
  INFO(schema_file, ": ", err);
  CHECK(err.empty());
}

}  // namespace

TEST_CASE("build reports the graph shape") {
  RunResult r = run_cli("build --family mbs --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "family: cycle"));
  CHECK(contains(r.out, "points: 4"));
  CHECK(contains(r.out, "vertices: 24"));
  CHECK(contains(r.out, "degree: 4"));
  CHECK(contains(r.out, "generates_full_symmetric: true"));

  r = run_cli("build --set \"(1,2)(2,3)(3,4)\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "family: path"));
  CHECK(contains(r.out, "vertices: 24"));

  r = run_cli("build --family path --n 4 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "cayley_summary.schema.json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"] == "24");
  CHECK_FALSE(j.contains("diameter"));

  r = run_cli("build --family star --n 3 --format dot");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "graph G {"));
  CHECK(contains(r.out, "--"));
}

TEST_CASE("aut on transposition sets and named graphs") {
  RunResult r = run_cli("aut --family mbs --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order: 768"));
  CHECK(contains(r.out, "orbit_size: 24"));
  CHECK(contains(r.out, "stabilizer_order: 32"));

  r = run_cli("aut --named petersen --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "aut_result.schema.json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == "120");
  CHECK(j["orbit_size"] == 10);

  // the triangular graph (pair intersection 1) has the petersen symmetries
  r = run_cli("aut --named johnson --n 5 --k 2 --i 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["order"] == "120");

  r = run_cli("aut --named hypercube --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order: 384"));
}

TEST_CASE("diameter with and without levels") {
  RunResult r = run_cli("diameter --family mbs --n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "9\n");

  r = run_cli("diameter --family mbs --n 4 --levels");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "4\n"));
  CHECK(contains(r.out, "level 0: 1"));
  CHECK(contains(r.out, "level 4: "));

  r = run_cli("diameter --family bs --n 5 --levels --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "diameter.schema.json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["diameter"] == 10);  // 5*4/2
  CHECK(j["levels"].size() == 11);

  r = run_cli("diameter --family bs --n 5 --format json");
  CHECK_FALSE(nlohmann::json::parse(r.out).contains("levels"));
}

TEST_CASE("census for a pair and as a sweep") {
  RunResult r =
      run_cli("census --family mbs --n 4 --t \"(1,2)\" --k \"(3,4)\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "four_cycles: 1"));

  r = run_cli(
      "census --family mbs --n 4 --t \"(1,2)\" --k \"(2,3)\" --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "census.schema.json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["four_cycles"] == 0);
  CHECK(j["six_cycles"] == 8);
  CHECK(j["distance3_vertices"] == 6);

  r = run_cli("census --family mbs --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "holds: false"));
  CHECK(contains(r.out, "failing: (1,2) (2,3)"));

  r = run_cli("census --family mbs --n 5 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "criterion.schema.json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["failing_pairs"].empty());

  r = run_cli("census --family bs --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "holds: true"));
}

TEST_CASE("check-normal") {
  RunResult r = run_cli("check-normal --family mbs --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "normal: false"));

  r = run_cli("check-normal --family st --n 4 --format json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["normal"] == true);
}

TEST_CASE("predict and verify") {
  RunResult r = run_cli("predict --family mbs --n 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "rule: cycle-n"));
  CHECK(contains(r.out, "predicted_order: 1200"));
  CHECK(contains(r.out, "normal: normal"));

  r = run_cli("predict --family st --n 4 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "prediction.schema.json");
  CHECK(nlohmann::json::parse(r.out)["predicted_order"] == "144");

  // no prediction for a triangle-shaped set
  r = run_cli("predict --set \"(1,2)(1,3)(2,3)\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "predicted_order: none"));
  CHECK(contains(r.out, "rule: none"));

  r = run_cli("verify --family bs --n 4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "computed_order: 48"));
  CHECK(contains(r.out, "agree: true"));

  r = run_cli("verify --family st --n 4 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "verify.schema.json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["computed_order"] == "144");

  r = run_cli("verify --set \"(1,2)(1,3)(2,3)\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "agree: computed only"));
}

TEST_CASE("named graphs") {
  RunResult r = run_cli("named --named petersen");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "vertices: 10"));
  CHECK(contains(r.out, "edges: 15"));
  CHECK(contains(r.out, "connected: true"));

  r = run_cli("named --named hypercube --n 3 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.out, "graph.schema.json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["num_vertices"] == 8);
  CHECK(j["labels"][0] == "000");

  r = run_cli("named --named kneser --n 5 --k 2 --format dot");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "graph G {"));
}

TEST_CASE("usage errors exit with code 1") {
  RunResult r = run_cli("aut");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "error: "));

  r = run_cli("build --family pentagon --n 5");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "error: "));

  r = run_cli("build --family path");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "--n"));

  r = run_cli("build --family path --n 4 --set \"(1,2)\"");
  CHECK(r.exit_code == 1);

  r = run_cli("census --family bs --n 4 --t \"(1,2)\"");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "--t and --k"));

  r = run_cli("census --family bs --n 4 --t \"(1,2)\" --k \"(1,3)\"");
  CHECK(r.exit_code == 1);  // (1,3) is not a generator

  r = run_cli("predict --family matching --n 4");
  CHECK(r.exit_code == 1);  // disconnected set graph

  r = run_cli("nonsense");
  CHECK(r.exit_code != 0);
}

TEST_CASE("vertex budgets from the flag and the environment") {
  RunResult r = run_cli("build --family bs --n 5 --budget-vertices 100");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "error: "));

  r = run_cli("build --family bs --n 5", "AUTKIT_BUDGET_VERTICES=100");
  CHECK(r.exit_code == 1);

  // the explicit flag wins over the environment
  r = run_cli("build --family bs --n 5 --budget-vertices 200",
              "AUTKIT_BUDGET_VERTICES=100");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "vertices: 120"));
}

TEST_CASE("the seed flag is accepted everywhere") {
  RunResult with = run_cli("--seed 42 aut --family st --n 4");
  RunResult without = run_cli("aut --family st --n 4");
  CHECK(with.exit_code == 0);
  CHECK(with.out == without.out);
}

TEST_CASE("search bound flag reaches the search") {
  RunResult r = run_cli("aut --family bs --n 7 --search-bound 100");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "error: "));

  r = run_cli("aut --family bs --n 6 --search-bound 720");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order: 1440"));
}
