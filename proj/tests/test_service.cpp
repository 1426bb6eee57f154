#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

#include "colquiver/checks.hpp"
#include "colquiver/http.hpp"

using namespace colquiver;

namespace {

SessionSpec a3_spec(int m = 2) {
  return SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"A","rank":3},"m":)" + std::to_string(m) + "}"));
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("colquiver-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

// A running explorer on an ephemeral port, stopped on destruction.
struct LiveServer {
  ExplorerService service;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit LiveServer(ServiceOptions options = {}) : service(std::move(options)) {
    service.install(server);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

Json body_of(const httplib::Result& r) {
  REQUIRE(r);
  return Json::parse(r->body);
}

}  // namespace

TEST_CASE("session request parsing") {
  const SessionSpec s = a3_spec();
  REQUIRE(s.algebra);
  CHECK(s.m == 2);
  CHECK(s.start == "projectives");
  CHECK(SessionSpec::from_json(s.to_json()).to_json() == s.to_json());
  CHECK_THROWS_AS(SessionSpec::from_json(Json::parse(R"({"m":2})")), Error);
  CHECK_THROWS_AS(SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"A","rank":3}})")), Error);
  CHECK_THROWS_AS(SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"A","rank":3},"m":0})")), Error);
  CHECK_THROWS_AS(SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"B","rank":3},"m":2})")), Error);
  CHECK_THROWS_AS(SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"A","rank":3},"m":2,"start":"x"})")),
                  Error);
  CHECK_THROWS_AS(SessionSpec::from_json(Json::parse(R"([1,2])")), Error);
}

TEST_CASE("session mutate, undo and replay") {
  Session s("s1", a3_spec(), 0);
  REQUIRE(s.state());
  REQUIRE(s.angulation());
  const ColouredQuiver start = s.quiver();
  CHECK(quiver_from_angulation(*s.polygon(), *s.angulation()) == start);

  s.mutate(0);
  s.mutate(1);
  s.mutate(2);
  s.mutate(1);
  CHECK(s.history() == std::vector<int>{0, 1, 2, 1});
  CHECK(s.replay_matches());
  CHECK(s.quiver() == mutate_sequence(start, {0, 1, 2, 1}));
  CHECK(s.state()->quiver == s.quiver());
  CHECK(quiver_from_angulation(*s.polygon(), *s.angulation()) == s.quiver());

  const ColouredQuiver before = s.quiver();
  s.mutate(2);
  CHECK(s.undo());
  CHECK(s.quiver() == before);
  CHECK(s.replay_matches());
  while (s.undo()) {
  }
  CHECK(s.quiver() == start);
  CHECK(s.history().empty());
  CHECK_FALSE(s.undo());

  CHECK_THROWS_AS(s.mutate(3), Error);
  CHECK_THROWS_AS(s.mutate(-1), Error);
}

TEST_CASE("session view and complements") {
  Session s("s1", a3_spec(), 0);
  const Json v = s.view();
  CHECK(v.at("n") == 3);
  CHECK(v.at("m") == 2);
  CHECK(v.at("quiver") == quiver_to_json(s.quiver()));
  CHECK(v.at("cluster").size() == 3);
  CHECK(v.at("diagonals").size() == 3);
  CHECK(v.at("svg").get<std::string>().rfind("<svg", 0) == 0);

  for (int vertex = 0; vertex < 3; ++vertex) {
    const Json c = s.complements_at(vertex);
    CHECK(c.at("summands").size() == 3);
    CHECK(c.at("cluster").size() == 3);
    CHECK(c.at("diagonals").size() == 3);
    // The first complement is the current summand.
    CHECK(c.at("summands")[0].at("root") == v.at("state").at("summands")[vertex].at("root"));
    CHECK(c.at("diagonals")[0] == v.at("diagonals")[vertex]);
  }
  CHECK_THROWS_AS(s.complements_at(3), Error);
}

TEST_CASE("negative simples start") {
  Session s("s1", SessionSpec::from_json(Json::parse(R"({"algebra":{"type":"A","rank":3},"m":2,"start":"negative-simples"})")),
            0);
  REQUIRE(s.state());
  for (const auto& d : s.state()->summands) CHECK(d.degree == 2);
  CHECK(from_state(*s.state()).elements ==
        std::vector<ColouredRoot>{ColouredRoot::negative_simple(0), ColouredRoot::negative_simple(1),
                                  ColouredRoot::negative_simple(2)});
}

TEST_CASE("raw quiver sessions") {
  const Json request = {{"quiver", quiver_to_json(worked_example_mutated_quiver())}};
  Session s("s1", SessionSpec::from_json(request), 0);
  CHECK_FALSE(s.state());
  s.mutate(1);
  s.mutate(1);
  CHECK(s.quiver() == worked_example_state().quiver);
  CHECK(s.view().at("state").is_null());
  // Type A quivers get an angulation found by search.
  REQUIRE(s.angulation());
  CHECK(quiver_from_angulation(*s.polygon(), *s.angulation()) == s.quiver());

  Json bad = request;
  bad["quiver"]["arrows"].erase(0);
  CHECK_THROWS_AS(SessionSpec::from_json(bad), Error);
}

TEST_CASE("snapshots") {
  Session s("s7", a3_spec(), 1234);
  s.mutate(2);
  s.mutate(0);
  const Session back = Session::from_snapshot(s.snapshot());
  CHECK(back.id() == "s7");
  CHECK(back.created() == 1234);
  CHECK(back.history() == s.history());
  CHECK(back.quiver() == s.quiver());
  CHECK(back.view() == s.view());
  CHECK_THROWS_AS(Session::from_snapshot(Json::parse(R"({"id":"x"})")), Error);
}

TEST_CASE("session store persists and reloads") {
  const auto dir = temp_dir("store");
  std::string id;
  Json last;
  {
    SessionStore store(dir);
    id = store.create(a3_spec()).at("id");
    store.mutate(id, 1);
    last = store.mutate(id, 2);
    CHECK_THROWS_AS(store.view("nope"), Error);
  }
  SessionStore reloaded(dir);
  CHECK(reloaded.ids() == std::vector<std::string>{id});
  CHECK(reloaded.view(id) == last);
  const std::string next = reloaded.create(a3_spec()).at("id");
  CHECK(next != id);
  CHECK_THROWS_AS(reloaded.undo(next), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumeration jobs") {
  JobQueue jobs(2);
  auto a3 = std::make_shared<const AlgebraData>(build_algebra(DynkinType::A, 3));
  const std::string ok = jobs.submit(a3, 2);
  const std::string capped = jobs.submit(a3, 2, 10);
  jobs.wait(ok);
  jobs.wait(capped);
  const Json done = *jobs.status(ok);
  CHECK(done.at("status") == "done");
  CHECK(done.at("report").at("states") == 55);
  CHECK(jobs.graph(ok)->at("adjacency").size() == 55);
  const Json failed = *jobs.status(capped);
  CHECK(failed.at("status") == "failed");
  CHECK(failed.at("error").at("code") == "bound_exceeded");
  CHECK_FALSE(jobs.graph(capped));
  CHECK_FALSE(jobs.status("e999"));
}

TEST_CASE("error statuses") {
  CHECK(http_status(Errc::invalid_input) == 400);
  CHECK(http_status(Errc::invalid_quiver) == 400);
  CHECK(http_status(Errc::vertex_out_of_range) == 400);
  CHECK(http_status(Errc::not_found) == 404);
  CHECK(http_status(Errc::bound_exceeded) == 422);
  CHECK(error_body("not_found", "x").dump() == R"({"error":{"code":"not_found","message":"x"}})");
}

TEST_CASE("default port") {
  ::setenv("COLQUIVER_PORT", "9123", 1);
  CHECK(default_port() == 9123);
  ::unsetenv("COLQUIVER_PORT");
  CHECK(default_port() == 8080);
}

TEST_CASE("HTTP session flow") {
  LiveServer live;
  auto cli = live.client();

  auto health = cli.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  auto created = cli.Post("/sessions", R"({"algebra":{"type":"A","rank":3,"orientation":"alternating"},"m":2})",
                          "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const Json view = Json::parse(created->body);
  const std::string id = view.at("id");
  const std::string base = "/sessions/" + id;

  auto mutated = cli.Post(base + "/mutate", R"({"vertex":1})", "application/json");
  REQUIRE(mutated);
  CHECK(mutated->status == 200);
  const Json after = Json::parse(mutated->body);
  CHECK(after.at("history") == Json::array({1}));
  CHECK(quiver_from_json(after.at("quiver")) == mutate(quiver_from_json(view.at("quiver")), 1));

  auto first = cli.Get(base);
  auto second = cli.Get(base);
  REQUIRE(first);
  REQUIRE(second);
  CHECK(first->body == second->body);
  CHECK(first->body == mutated->body);

  const Json comps = body_of(cli.Get(base + "/complements?vertex=1"));
  CHECK(comps.at("summands").size() == 3);
  CHECK(comps.at("diagonals").size() == 3);

  auto dot = cli.Get(base + "/export?format=dot");
  REQUIRE(dot);
  CHECK(dot->status == 200);
  CHECK(dot->body.rfind("digraph", 0) == 0);
  auto svg = cli.Get(base + "/export?format=svg");
  REQUIRE(svg);
  CHECK(svg->body.rfind("<svg", 0) == 0);
  const Json exported = body_of(cli.Get(base + "/export"));
  CHECK(exported == after.at("state"));

  const Json undone = body_of(cli.Post(base + "/undo", "", "application/json"));
  CHECK(undone.at("history").empty());
  CHECK(undone.at("quiver") == view.at("quiver"));

  const Json listed = body_of(cli.Get("/sessions"));
  CHECK(listed.at("sessions") == Json::array({id}));

  auto options = cli.Options(base);
  REQUIRE(options);
  CHECK(options->status == 204);
}

TEST_CASE("HTTP errors") {
  LiveServer live;
  auto cli = live.client();
  const std::string id =
      body_of(cli.Post("/sessions", R"({"algebra":{"type":"A","rank":3},"m":2})", "application/json")).at("id");
  const std::string base = "/sessions/" + id;

  struct Case {
    httplib::Result result;
    int status;
    std::string code;
  };
  std::vector<Case> cases;
  cases.push_back({cli.Post("/sessions", "{not json", "application/json"), 400, "invalid_input"});
  cases.push_back({cli.Post("/sessions", R"({"algebra":{"type":"A","rank":3},"m":-1})", "application/json"), 400,
                   "invalid_input"});
  cases.push_back({cli.Post("/sessions", R"({"quiver":{"m":1,"labels":["a","b"],"arrows":[{"from":0,"to":1,"colour":0,"mult":1}]}})",
                            "application/json"),
                   400, "invalid_quiver"});
  cases.push_back({cli.Get("/sessions/s999"), 404, "not_found"});
  cases.push_back({cli.Post(base + "/mutate", R"({"vertex":3})", "application/json"), 400, "vertex_out_of_range"});
  cases.push_back({cli.Post(base + "/mutate", R"({"v":1})", "application/json"), 400, "invalid_input"});
  cases.push_back({cli.Post(base + "/undo", "", "application/json"), 400, "invalid_input"});
  cases.push_back({cli.Get(base + "/complements"), 400, "invalid_input"});
  cases.push_back({cli.Get(base + "/export?format=png"), 400, "invalid_input"});
  cases.push_back({cli.Get("/enumerations/e42"), 404, "not_found"});
  cases.push_back({cli.Post("/enumerations", R"({"algebra":{"type":"A","rank":3}})", "application/json"), 400,
                   "invalid_input"});
  for (auto& c : cases) {
    REQUIRE(c.result);
    CAPTURE(c.result->body);
    CHECK(c.result->status == c.status);
    const Json body = Json::parse(c.result->body);
    CHECK(body.at("error").at("code") == c.code);
    CHECK(body.at("error").at("message").is_string());
  }
  // Failed requests leave the session untouched.
  CHECK(body_of(cli.Get(base)).at("history").empty());
}

TEST_CASE("HTTP enumeration jobs") {
  LiveServer live;
  auto cli = live.client();
  auto submitted = cli.Post("/enumerations", R"({"algebra":{"type":"D","rank":4},"m":2})", "application/json");
  REQUIRE(submitted);
  CHECK(submitted->status == 202);
  const std::string id = Json::parse(submitted->body).at("id");
  live.service.jobs().wait(id);
  const Json status = body_of(cli.Get("/enumerations/" + id));
  CHECK(status.at("status") == "done");
  CHECK(status.at("report").at("states") == 336);
  const Json graph = body_of(cli.Get("/enumerations/" + id + "/graph"));
  CHECK(graph.at("states") == 336);

  const std::string capped =
      body_of(cli.Post("/enumerations", R"({"algebra":{"type":"A","rank":3},"m":2,"bound":5})", "application/json"))
          .at("id");
  live.service.jobs().wait(capped);
  const Json failed = body_of(cli.Get("/enumerations/" + capped));
  CHECK(failed.at("status") == "failed");
  auto graph_missing = cli.Get("/enumerations/" + capped + "/graph");
  REQUIRE(graph_missing);
  CHECK(graph_missing->status == 404);
}

TEST_CASE("concurrent sessions") {
  LiveServer live;
  constexpr int kSessions = 4;
  constexpr int kSteps = 25;
  std::vector<std::string> ids;
  {
    auto cli = live.client();
    for (int i = 0; i < kSessions; ++i)
      ids.push_back(body_of(cli.Post("/sessions", R"({"algebra":{"type":"A","rank":4},"m":2})", "application/json"))
                        .at("id"));
  }
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < kSessions; ++i) {
    threads.emplace_back([&, i] {
      auto cli = live.client();
      for (int step = 0; step < kSteps; ++step) {
        const std::string body = R"({"vertex":)" + std::to_string((step + i) % 4) + "}";
        auto r = cli.Post("/sessions/" + ids[i] + "/mutate", body, "application/json");
        if (!r || r->status != 200) ++failures;
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(failures == 0);
  for (int i = 0; i < kSessions; ++i) {
    bool matches = false;
    const Json v = live.service.sessions().with_session(ids[i], [&](Session& s) {
      matches = s.replay_matches();
      return s.view();
    });
    CHECK(matches);
    CHECK(v.at("history").size() == static_cast<std::size_t>(kSteps));
    for (int step = 0; step < kSteps; ++step) CHECK(v.at("history")[step] == (step + i) % 4);
  }
}

TEST_CASE("concurrent mutations of one session are serialized") {
  LiveServer live;
  auto cli = live.client();
  const std::string id =
      body_of(cli.Post("/sessions", R"({"algebra":{"type":"A","rank":3},"m":2})", "application/json")).at("id");
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) {
    threads.emplace_back([&, i] {
      auto c = live.client();
      for (int step = 0; step < 10; ++step) c.Post("/sessions/" + id + "/mutate", R"({"vertex":)" + std::to_string(i % 3) + "}", "application/json");
    });
  }
  for (auto& t : threads) t.join();
  live.service.sessions().with_session(id, [](Session& s) {
    CHECK(s.history().size() == 40);
    CHECK(s.replay_matches());
    return 0;
  });
}
