#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "colquiver/session.hpp"

namespace httplib {
class Server;
}

namespace colquiver {

/// Port from COLQUIVER_PORT, else 8080.
int default_port();

int http_status(Errc code);
/// {"error": {"code", "message"}}
Json error_body(std::string_view code, const std::string& message);

struct ServiceOptions {
  std::optional<std::filesystem::path> snapshot_dir;
  int workers = 2;
};

/// The HTTP/JSON explorer API:
///   POST /sessions                      {"algebra": {...}, "m"} or {"quiver": {...}}
///   GET  /sessions
///   GET  /sessions/{id}
///   POST /sessions/{id}/mutate          {"vertex": j}
///   POST /sessions/{id}/undo
///   GET  /sessions/{id}/complements?vertex=j
///   GET  /sessions/{id}/export?format=json|dot|svg
///   POST /enumerations                  {"algebra": {...}, "m", "bound"?}
///   GET  /enumerations/{id}
///   GET  /enumerations/{id}/graph
///   GET  /health
/// Vertices are 0-based.
class ExplorerService {
 public:
  explicit ExplorerService(ServiceOptions options = {});

  void install(httplib::Server& server);

  SessionStore& sessions() { return sessions_; }
  JobQueue& jobs() { return jobs_; }

 private:
  SessionStore sessions_;
  JobQueue jobs_;
};

}  // namespace colquiver
