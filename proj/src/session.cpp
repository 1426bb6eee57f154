#include "colquiver/session.hpp"

#include <fstream>

#include "colquiver/checks.hpp"

namespace colquiver {

namespace {

// Above this many angulations the seed angulation is not searched for.
constexpr std::uint64_t kAngulationSearchLimit = 50000;

std::optional<Angulation> seed_angulation(const SessionSpec& spec, const ColouredQuiver& q) {
  if (spec.algebra && spec.algebra->type() != DynkinType::A) return std::nullopt;
  const int n = q.n();
  if (n > kCanonicalFormDefaultBound || fuss_catalan(DynkinType::A, n, spec.m) > kAngulationSearchLimit) {
    return std::nullopt;
  }
  return find_angulation_for(q);
}

}  // namespace

SessionSpec SessionSpec::from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::invalid_input, "session request must be a JSON object");
  SessionSpec spec;
  if (j.contains("quiver")) {
    spec.quiver = quiver_from_json(j.at("quiver"));
    if (const auto v = validate(*spec.quiver); !v.empty()) throw Error(Errc::invalid_quiver, v.front().message);
    spec.m = spec.quiver->m();
    if (j.contains("m") && j.at("m") != spec.m) throw Error(Errc::invalid_input, "\"m\" disagrees with the quiver");
    return spec;
  }
  if (!j.contains("algebra")) throw Error(Errc::invalid_input, "expected \"algebra\" or \"quiver\"");
  spec.algebra = algebra_from_json(j.at("algebra"));
  if (!j.contains("m") || !j.at("m").is_number_integer()) throw Error(Errc::invalid_input, "\"m\" must be an integer");
  spec.m = j.at("m").get<int>();
  if (spec.m < 1) throw Error(Errc::invalid_input, "m must be a positive integer");
  if (j.contains("start")) {
    if (!j.at("start").is_string()) throw Error(Errc::invalid_input, "\"start\" must be a string");
    spec.start = j.at("start").get<std::string>();
    if (spec.start != "projectives" && spec.start != "negative-simples") {
      throw Error(Errc::invalid_input, "\"start\" is \"projectives\" or \"negative-simples\"");
    }
  }
  return spec;
}

Json SessionSpec::to_json() const {
  if (quiver) return {{"quiver", quiver_to_json(*quiver)}};
  return {{"algebra", algebra_to_json(*algebra)}, {"m", m}, {"start", start}};
}

Session::Session(std::string id, SessionSpec spec, std::int64_t created)
    : id_(std::move(id)), spec_(std::move(spec)), created_(created) {
  Current s = seed();
  seed_angulation_ = seed_angulation(spec_, s.quiver);
  s.angulation = seed_angulation_;
  quiver_ = std::move(s.quiver);
  state_ = std::move(s.state);
  angulation_ = std::move(s.angulation);
}

std::optional<Polygon> Session::polygon() const {
  if (!seed_angulation_) return std::nullopt;
  return Polygon(n(), spec_.m);
}

Session::Current Session::seed() const {
  if (spec_.quiver) return {*spec_.quiver, std::nullopt, std::nullopt};
  TiltingState s = spec_.start == "projectives" ? initial_state(spec_.algebra, spec_.m)
                                                : to_state(initial_cluster(spec_.algebra, spec_.m));
  ColouredQuiver q = s.quiver;
  return {std::move(q), std::move(s), seed_angulation_};
}

Session::Current Session::step(const Current& c, const std::optional<Polygon>& polygon, int vertex) {
  Current next{ColouredQuiver(), std::nullopt, std::nullopt};
  if (c.state) {
    next.state = mutate_state(*c.state, vertex);
    next.quiver = next.state->quiver;
  } else {
    next.quiver = colquiver::mutate(c.quiver, vertex);
  }
  if (c.angulation && polygon) {
    next.angulation = mutate_angulation_at(*polygon, *c.angulation, vertex);
    if (!(quiver_from_angulation(*polygon, *next.angulation) == next.quiver)) {
      throw Error(Errc::internal_contradiction, "angulation quiver no longer matches the session quiver");
    }
  }
  return next;
}

void Session::require_vertex(int vertex) const {
  if (vertex < 0 || vertex >= n()) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(vertex) + " out of range 0.." + std::to_string(n() - 1));
  }
}

void Session::mutate(int vertex) {
  require_vertex(vertex);
  Current next = step({quiver_, state_, angulation_}, polygon(), vertex);
  quiver_ = std::move(next.quiver);
  state_ = std::move(next.state);
  angulation_ = std::move(next.angulation);
  history_.push_back(vertex);
}

bool Session::undo() {
  if (history_.empty()) return false;
  history_.pop_back();
  Current c = seed();
  const auto p = polygon();
  for (int v : history_) c = step(c, p, v);
  quiver_ = std::move(c.quiver);
  state_ = std::move(c.state);
  angulation_ = std::move(c.angulation);
  return true;
}

bool Session::replay_matches() const {
  Current c = seed();
  const auto p = polygon();
  for (int v : history_) c = step(c, p, v);
  if (!(c.quiver == quiver_) || c.quiver.labels() != quiver_.labels()) return false;
  if (c.state.has_value() != state_.has_value()) return false;
  if (c.state && c.state->summands != state_->summands) return false;
  if (c.angulation.has_value() != angulation_.has_value()) return false;
  return !c.angulation || c.angulation->diagonals == angulation_->diagonals;
}

Json Session::view() const {
  Json j = {{"id", id_},
            {"created", created_},
            {"spec", spec_.to_json()},
            {"n", n()},
            {"m", spec_.m},
            {"history", history_},
            {"quiver", quiver_to_json(quiver_)},
            {"state", nullptr},
            {"cluster", nullptr},
            {"angulation", nullptr},
            {"diagonals", nullptr},
            {"svg", nullptr}};
  if (state_) {
    j["state"] = state_to_json(*state_);
    j["cluster"] = cluster_to_json(from_state(*state_));
  }
  if (angulation_) {
    const Polygon p = *polygon();
    j["angulation"] = angulation_to_json(p, *angulation_);
    Json by_vertex = Json::array();
    for (const auto& d : angulation_->diagonals) by_vertex.push_back({d.a, d.b});
    j["diagonals"] = std::move(by_vertex);
    j["svg"] = angulation_svg(p, *angulation_);
  }
  return j;
}

Json Session::complements_at(int vertex) const {
  require_vertex(vertex);
  Json j = {{"vertex", vertex}, {"summands", nullptr}, {"cluster", nullptr}, {"diagonals", nullptr}};
  if (state_) {
    Json summands = Json::array();
    Json cluster = Json::array();
    for (const auto& s : complements(*state_, vertex)) {
      Json entry = summand_to_json(s);
      entry["label"] = summand_label(*state_->algebra, s);
      summands.push_back(std::move(entry));
      cluster.push_back(coloured_root_to_json(from_summand(*state_->algebra, state_->m, s)));
    }
    j["summands"] = std::move(summands);
    j["cluster"] = std::move(cluster);
  }
  if (angulation_) {
    Json diagonals = Json::array();
    for (const auto& d : complements_of(*polygon(), *angulation_, angulation_->diagonals[vertex])) {
      diagonals.push_back({d.a, d.b});
    }
    j["diagonals"] = std::move(diagonals);
  }
  return j;
}

Json Session::snapshot() const {
  return {{"id", id_}, {"created", created_}, {"spec", spec_.to_json()}, {"history", history_}};
}

Session Session::from_snapshot(const Json& j) {
  if (!j.is_object() || !j.contains("id") || !j.contains("spec") || !j.contains("history")) {
    throw Error(Errc::invalid_input, "malformed session snapshot");
  }
  Session s(j.at("id").get<std::string>(), SessionSpec::from_json(j.at("spec")), j.value("created", std::int64_t{0}));
  for (const auto& v : j.at("history")) s.mutate(v.get<int>());
  return s;
}

SessionStore::SessionStore(std::optional<std::filesystem::path> snapshot_dir) : dir_(std::move(snapshot_dir)) {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  for (const auto& file : std::filesystem::directory_iterator(*dir_)) {
    if (file.path().extension() != ".json") continue;
    Session s = Session::from_snapshot(read_json_file(file.path().string()));
    const std::string id = s.id();
    if (id.size() > 1 && id[0] == 's') {
      next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(id.substr(1)) + 1);
    }
    sessions_.emplace(id, std::make_shared<Entry>(std::move(s)));
  }
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(Errc::not_found, "no session " + id);
  return it->second;
}

void SessionStore::persist(const Session& s) const {
  if (!dir_) return;
  const auto target = *dir_ / (s.id() + ".json");
  const auto temp = *dir_ / (s.id() + ".json.tmp");
  {
    std::ofstream out(temp);
    out << s.snapshot().dump(2) << "\n";
    if (!out) throw Error(Errc::invalid_input, "cannot write snapshot " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

Json SessionStore::create(const SessionSpec& spec) {
  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = "s" + std::to_string(next_id_++);
  }
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  auto entry = std::make_shared<Entry>(Session(id, spec, now));
  std::lock_guard session_lock(entry->mutex);
  {
    std::lock_guard lock(mutex_);
    sessions_.emplace(id, entry);
  }
  persist(entry->session);
  return entry->session.view();
}

Json SessionStore::view(const std::string& id) {
  return with_session(id, [](Session& s) { return s.view(); });
}

Json SessionStore::mutate(const std::string& id, int vertex) {
  return with_session(id, [&](Session& s) {
    s.mutate(vertex);
    persist(s);
    return s.view();
  });
}

Json SessionStore::undo(const std::string& id) {
  return with_session(id, [&](Session& s) {
    if (!s.undo()) throw Error(Errc::invalid_input, "nothing to undo");
    persist(s);
    return s.view();
  });
}

Json SessionStore::complements(const std::string& id, int vertex) {
  return with_session(id, [&](Session& s) { return s.complements_at(vertex); });
}

std::vector<std::string> SessionStore::ids() {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, entry] : sessions_) out.push_back(id);
  return out;
}

JobQueue::JobQueue(int workers) {
  for (int w = 0; w < std::max(1, workers); ++w) workers_.emplace_back([this] { work(); });
}

JobQueue::~JobQueue() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  changed_.notify_all();
  for (auto& t : workers_) t.join();
}

std::string JobQueue::submit(std::shared_ptr<const AlgebraData> algebra, int m, std::size_t bound) {
  if (m < 1) throw Error(Errc::invalid_input, "m must be a positive integer");
  auto job = std::make_shared<Job>();
  job->algebra = std::move(algebra);
  job->m = m;
  job->bound = bound;
  {
    std::lock_guard lock(mutex_);
    job->id = "e" + std::to_string(next_id_++);
    jobs_.emplace(job->id, job);
    queue_.push_back(job);
  }
  changed_.notify_all();
  return job->id;
}

std::optional<Json> JobQueue::status(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  const Job& job = *it->second;
  Json j = {{"id", job.id}, {"status", job.status}, {"algebra", algebra_to_json(*job.algebra)}, {"m", job.m}};
  if (job.status == "done") j["report"] = job.report;
  if (job.status == "failed") j["error"] = job.error;
  return j;
}

std::optional<Json> JobQueue::graph(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end() || it->second->status != "done") return std::nullopt;
  return it->second->graph;
}

void JobQueue::wait(const std::string& id) {
  std::unique_lock lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return;
  auto job = it->second;
  changed_.wait(lock, [&] { return job->status == "done" || job->status == "failed"; });
}

void JobQueue::work() {
  for (;;) {
    std::shared_ptr<Job> job;
    {
      std::unique_lock lock(mutex_);
      changed_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      job = queue_.front();
      queue_.pop_front();
      job->status = "running";
    }
    Json report, graph, error;
    try {
      const Enumeration e = enumerate_tilting_states(job->algebra, job->m, job->bound);
      report = enumeration_report(e);
      graph = exchange_graph_json(e);
    } catch (const Error& ex) {
      error = {{"code", std::string(errc_name(ex.code()))}, {"message", ex.what()}};
    } catch (const std::exception& ex) {
      error = {{"code", "internal_contradiction"}, {"message", ex.what()}};
    }
    {
      std::lock_guard lock(mutex_);
      job->status = error.is_null() ? "done" : "failed";
      job->report = std::move(report);
      job->graph = std::move(graph);
      job->error = std::move(error);
    }
    changed_.notify_all();
  }
}

}  // namespace colquiver
