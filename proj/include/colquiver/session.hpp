#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "colquiver/io.hpp"

namespace colquiver {

/// What a session starts from: an algebra (type, rank, orientation) with m, or
/// a raw coloured quiver.
struct SessionSpec {
  std::shared_ptr<const AlgebraData> algebra;  // null for a raw quiver
  int m = 1;
  std::optional<ColouredQuiver> quiver;  // raw seed
  /// "projectives": the summands P_i in degree 0; "negative-simples": the
  /// m-cluster of negative simple roots, i.e. the P_i in degree m.
  std::string start = "projectives";

  /// {"algebra": {...}, "m": int, "start"?: string} or {"quiver": <quiver JSON>}.
  static SessionSpec from_json(const Json& j);
  Json to_json() const;
};

/// A mutation session. The current data is always the seed with the history
/// replayed on it; undo pops the history and replays.
class Session {
 public:
  Session(std::string id, SessionSpec spec, std::int64_t created);

  const std::string& id() const { return id_; }
  const SessionSpec& spec() const { return spec_; }
  const std::vector<int>& history() const { return history_; }
  std::int64_t created() const { return created_; }
  int n() const { return quiver_.n(); }

  const ColouredQuiver& quiver() const { return quiver_; }
  const std::optional<TiltingState>& state() const { return state_; }
  const std::optional<Angulation>& angulation() const { return angulation_; }
  std::optional<Polygon> polygon() const;

  void mutate(int vertex);
  /// False when there is nothing to undo.
  bool undo();

  /// True when replaying the history from the seed gives the current data.
  bool replay_matches() const;

  /// The full view: spec, history, quiver, state, cluster and, in type A, the
  /// angulation with its SVG.
  Json view() const;
  /// The m+1 complements at a vertex: summands (with algebra) and diameters (type A).
  Json complements_at(int vertex) const;

  Json snapshot() const;
  static Session from_snapshot(const Json& j);

 private:
  struct Current {
    ColouredQuiver quiver;
    std::optional<TiltingState> state;
    std::optional<Angulation> angulation;
  };
  Current seed() const;
  static Current step(const Current& c, const std::optional<Polygon>& polygon, int vertex);
  void require_vertex(int vertex) const;

  std::string id_;
  SessionSpec spec_;
  std::int64_t created_;
  std::vector<int> history_;
  std::optional<Angulation> seed_angulation_;
  ColouredQuiver quiver_;
  std::optional<TiltingState> state_;
  std::optional<Angulation> angulation_;
};

/// In-memory sessions, optionally mirrored as one JSON snapshot per session.
/// Calls on one session are serialized; different sessions run concurrently.
class SessionStore {
 public:
  explicit SessionStore(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

  Json create(const SessionSpec& spec);
  Json view(const std::string& id);
  Json mutate(const std::string& id, int vertex);
  Json undo(const std::string& id);
  Json complements(const std::string& id, int vertex);
  std::vector<std::string> ids();

  /// Runs fn on the session under its lock.
  template <class F>
  auto with_session(const std::string& id, F&& fn) {
    auto entry = find(id);
    std::lock_guard lock(entry->mutex);
    return fn(entry->session);
  }

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };
  std::shared_ptr<Entry> find(const std::string& id);
  void persist(const Session& s) const;

  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
  std::optional<std::filesystem::path> dir_;
};

/// Background enumeration jobs on a small worker pool.
class JobQueue {
 public:
  explicit JobQueue(int workers = 2);
  ~JobQueue();
  JobQueue(const JobQueue&) = delete;
  JobQueue& operator=(const JobQueue&) = delete;

  std::string submit(std::shared_ptr<const AlgebraData> algebra, int m, std::size_t bound = kDefaultStateBound);
  /// {"id", "status": queued|running|done|failed, "report"?, "error"?}; nullopt if unknown.
  std::optional<Json> status(const std::string& id);
  /// Exchange-graph JSON of a finished job.
  std::optional<Json> graph(const std::string& id);
  /// Blocks until the job leaves the queued and running states.
  void wait(const std::string& id);

 private:
  struct Job {
    std::string id;
    std::shared_ptr<const AlgebraData> algebra;
    int m;
    std::size_t bound;
    std::string status = "queued";
    Json report;
    Json graph;
    Json error;
  };
  void work();

  std::mutex mutex_;
  std::condition_variable changed_;
  std::deque<std::shared_ptr<Job>> queue_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
  std::uint64_t next_id_ = 1;
  bool stopping_ = false;
  std::vector<std::thread> workers_;
};

}  // namespace colquiver
