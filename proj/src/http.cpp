#include "colquiver/http.hpp"

#include <cstdlib>
#include <functional>

#include <httplib.h>

namespace colquiver {

namespace {

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

void send_json(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Wraps a handler so library errors become {"error": ...} bodies.
Handler guarded(Handler body) {
  return [body = std::move(body)](const httplib::Request& req, httplib::Response& res) {
    try {
      body(req, res);
    } catch (const Error& ex) {
      send_json(res, error_body(errc_name(ex.code()), ex.what()), http_status(ex.code()));
    } catch (const Json::exception& ex) {
      send_json(res, error_body("invalid_input", ex.what()), 400);
    } catch (const std::exception& ex) {
      send_json(res, error_body("internal_error", ex.what()), 500);
    }
  };
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& ex) {
    throw Error(Errc::invalid_input, std::string("request body is not JSON: ") + ex.what());
  }
}

int vertex_from(const Json& j) {
  if (!j.is_object() || !j.contains("vertex") || !j.at("vertex").is_number_integer()) {
    throw Error(Errc::invalid_input, "expected {\"vertex\": <integer>}");
  }
  return j.at("vertex").get<int>();
}

int vertex_param(const httplib::Request& req) {
  if (!req.has_param("vertex")) throw Error(Errc::invalid_input, "missing query parameter vertex");
  const std::string text = req.get_param_value("vertex");
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(Errc::invalid_input, "vertex must be an integer");
  return v;
}

}  // namespace

int default_port() {
  if (const char* env = std::getenv("COLQUIVER_PORT")) {
    try {
      const int port = std::stoi(env);
      if (port > 0 && port < 65536) return port;
    } catch (const std::exception&) {
    }
  }
  return 8080;
}

int http_status(Errc code) {
  switch (code) {
    case Errc::invalid_quiver:
    case Errc::vertex_out_of_range:
    case Errc::invalid_input:
      return 400;
    case Errc::not_found:
      return 404;
    case Errc::bound_exceeded:
      return 422;
    case Errc::internal_contradiction:
    case Errc::data_corruption:
    case Errc::cluster_mismatch:
      return 500;
  }
  return 500;
}

Json error_body(std::string_view code, const std::string& message) {
  return {{"error", {{"code", std::string(code)}, {"message", message}}}};
}

ExplorerService::ExplorerService(ServiceOptions options)
    : sessions_(std::move(options.snapshot_dir)), jobs_(options.workers) {}

void ExplorerService::install(httplib::Server& server) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) { send_json(res, {{"status", "ok"}}); });

  server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
                send_json(res, sessions_.create(SessionSpec::from_json(parse_body(req))), 201);
              }));
  server.Get("/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
               send_json(res, {{"sessions", sessions_.ids()}});
             }));
  server.Get(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
               send_json(res, sessions_.view(req.matches[1]));
             }));
  server.Post(R"(/sessions/([^/]+)/mutate)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                send_json(res, sessions_.mutate(req.matches[1], vertex_from(parse_body(req))));
              }));
  server.Post(R"(/sessions/([^/]+)/undo)", guarded([this](const httplib::Request& req, httplib::Response& res) {
                send_json(res, sessions_.undo(req.matches[1]));
              }));
  server.Get(R"(/sessions/([^/]+)/complements)",
             guarded([this](const httplib::Request& req, httplib::Response& res) {
               send_json(res, sessions_.complements(req.matches[1], vertex_param(req)));
             }));
  server.Get(R"(/sessions/([^/]+)/export)", guarded([this](const httplib::Request& req, httplib::Response& res) {
               const std::string format = req.has_param("format") ? req.get_param_value("format") : "json";
               sessions_.with_session(req.matches[1], [&](Session& s) {
                 if (format == "json") {
                   send_json(res, s.state() ? state_to_json(*s.state()) : quiver_to_json(s.quiver()));
                 } else if (format == "dot") {
                   res.set_content(quiver_dot(s.quiver()), "text/vnd.graphviz");
                 } else if (format == "svg") {
                   if (!s.angulation()) throw Error(Errc::not_found, "this session has no angulation");
                   res.set_content(angulation_svg(*s.polygon(), *s.angulation()), "image/svg+xml");
                 } else {
                   throw Error(Errc::invalid_input, "format is json, dot or svg");
                 }
               });
             }));

  server.Post("/enumerations", guarded([this](const httplib::Request& req, httplib::Response& res) {
                const Json body = parse_body(req);
                if (!body.contains("algebra")) throw Error(Errc::invalid_input, "expected \"algebra\"");
                if (!body.contains("m") || !body.at("m").is_number_integer()) {
                  throw Error(Errc::invalid_input, "\"m\" must be an integer");
                }
                const std::size_t bound = body.value("bound", kDefaultStateBound);
                const std::string id = jobs_.submit(algebra_from_json(body.at("algebra")), body.at("m").get<int>(), bound);
                send_json(res, *jobs_.status(id), 202);
              }));
  server.Get(R"(/enumerations/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
               auto status = jobs_.status(req.matches[1]);
               if (!status) throw Error(Errc::not_found, "no enumeration job " + std::string(req.matches[1]));
               send_json(res, *status);
             }));
  server.Get(R"(/enumerations/([^/]+)/graph)", guarded([this](const httplib::Request& req, httplib::Response& res) {
               auto graph = jobs_.graph(req.matches[1]);
               if (!graph) throw Error(Errc::not_found, "no finished enumeration job " + std::string(req.matches[1]));
               send_json(res, *graph);
             }));
}

}  // namespace colquiver
