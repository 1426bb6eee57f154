#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>

#include "colquiver/checks.hpp"
#include "colquiver/session.hpp"

using namespace colquiver;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when asked.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("mutating the worked example") {
  const Run r = run("mutate --state " + fixture("worked_example_state.json") + " --seq 2");
  REQUIRE(r.status == 0);
  const Json out = Json::parse(r.out);
  CHECK(quiver_from_json(out.at("quiver")) == worked_example_mutated_quiver());
  CHECK(out.at("summands").dump() == R"([{"root":[1,1,0],"degree":0},{"root":[0,1,1],"degree":1},{"root":[0,0,1],"degree":1}])");
}

TEST_CASE("m+1 mutations at a vertex return the input") {
  const Run once = run("mutate --state " + fixture("worked_example_state.json"));
  const Run cycle = run("mutate --state " + fixture("worked_example_state.json") + " --seq 2,2,2");
  REQUIRE(once.status == 0);
  REQUIRE(cycle.status == 0);
  CHECK(cycle.out == once.out);
}

TEST_CASE("raw quivers") {
  const Run r = run("mutate --quiver " + fixture("worked_example_state.json") + " --seq 2,1,3,2");
  CHECK(r.status != 0);
  // A state file is not a quiver file; export the quiver part first.
  const Run q = run("export --state " + fixture("worked_example_state.json") + " --format json");
  REQUIRE(q.status == 0);
  const Json state = Json::parse(q.out);
  CHECK(state_from_json(state).quiver == worked_example_state().quiver);
}

TEST_CASE("CLI output matches a session after the same clicks") {
  const Run r = run("mutate --type A --rank 3 --m 2 --seq 1,2,3,2");
  REQUIRE(r.status == 0);
  Session s("s1", SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"A","rank":3},"m":2})")), 0);
  for (int v : {0, 1, 2, 1}) s.mutate(v);
  const Json out = Json::parse(r.out);
  CHECK(out.at("quiver").dump() == s.view().at("quiver").dump());
  CHECK(out.dump() == s.view().at("state").dump());
}

TEST_CASE("exit codes") {
  const Run bad_vertex = run("mutate --type A --rank 3 --m 2 --seq 4", true);
  CHECK(bad_vertex.status == 2);
  CHECK(Json::parse(bad_vertex.out).at("error").at("code") == "vertex_out_of_range");
  CHECK(run("mutate --type A --rank 3 --m 2 --seq 0").status == 2);
  CHECK(run("mutate --quiver " + fixture("missing.json")).status != 0);
  CHECK(run("").status != 0);

  const Run corrupted = run("check --quiver " + fixture("corrupted_quiver.json"));
  CHECK(corrupted.status == 1);
  const Json report = Json::parse(corrupted.out);
  CHECK(report.at("passed") == false);
  CHECK_FALSE(report.at("checks")[0].at("details").at("violations").empty());
}

TEST_CASE("check passes on a small scope") {
  const Run r = run("check --type A --rank 2 --m 2 --fz-sequences 50");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out).at("passed") == true);
  const Run state = run("check --state " + fixture("worked_example_state.json"));
  CHECK(state.status == 0);
}

TEST_CASE("enumerate") {
  const Run r = run("enumerate --type A --rank 3 --m 2");
  REQUIRE(r.status == 0);
  const Json out = Json::parse(r.out);
  CHECK(out.at("report").at("states") == 55);
  CHECK(out.at("report").at("edges") == 165);
  CHECK_FALSE(out.contains("exchangeGraph"));
  const Json graph = Json::parse(run("enumerate --type D --rank 4 --m 1 --graph").out);
  CHECK(graph.at("exchangeGraph").at("states") == 50);
  const Run capped = run("enumerate --type A --rank 3 --m 2 --bound 10", true);
  CHECK(capped.status == 2);
  CHECK(Json::parse(capped.out).at("error").at("code") == "bound_exceeded");
}

TEST_CASE("export formats") {
  const Run dot = run("mutate --type A --rank 3 --m 2 --seq 1 --format dot");
  CHECK(dot.out.rfind("digraph", 0) == 0);
  const Run svg = run("mutate --type A --rank 3 --m 2 --seq 1 --format svg");
  CHECK(svg.out.rfind("<svg", 0) == 0);
  const Run cluster = run("export --state " + fixture("worked_example_state.json") + " --format cluster");
  REQUIRE(cluster.status == 0);
  CHECK(Json::parse(cluster.out).dump() ==
        R"([{"root":[1,1,0],"colour":1},{"root":[0,1,0],"colour":1},{"root":[0,0,1],"colour":2}])");
  const Run angulation = run("export --state " + fixture("worked_example_state.json") + " --format angulation");
  REQUIRE(angulation.status == 0);
  CHECK(Json::parse(angulation.out).at("diagonals").size() == 3);
}
