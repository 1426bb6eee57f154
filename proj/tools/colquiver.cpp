// colquiver: command-line front end for coloured quiver mutation.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "colquiver/checks.hpp"
#include "colquiver/http.hpp"

using namespace colquiver;

namespace {

struct AlgebraOptions {
  std::string type = "A";
  int rank = 3;
  int m = 2;
  std::string orientation = "alternating";
  std::string start = "projectives";

  void add_to(CLI::App* app, bool with_start) {
    app->add_option("--type", type, "Dynkin type: A, D or E")->capture_default_str();
    app->add_option("--rank", rank, "rank n")->capture_default_str();
    app->add_option("--m", m, "m >= 1")->capture_default_str();
    app->add_option("--orientation", orientation, "alternating, linear, or arrows such as 2>1,2>3")
        ->capture_default_str();
    if (with_start) {
      app->add_option("--start", start, "initial object")
          ->check(CLI::IsMember({"projectives", "negative-simples"}))
          ->capture_default_str();
    }
  }

  std::shared_ptr<const AlgebraData> algebra() const {
    const DynkinType t = parse_dynkin_type(type);
    return std::make_shared<const AlgebraData>(build_algebra(t, rank, parse_orientation(t, rank, orientation)));
  }

  TiltingState seed() const {
    auto a = algebra();
    return start == "projectives" ? initial_state(a, m) : to_state(initial_cluster(a, m));
  }
};

std::vector<int> parse_sequence(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(Errc::invalid_input, "bad vertex '" + item + "' in --seq");
    if (v < 1 || v > n) {
      throw Error(Errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " in --seq is outside 1.." + std::to_string(n));
    }
    out.push_back(v - 1);
  }
  return out;
}

void print_json(const Json& j, int indent) { std::cout << j.dump(indent) << "\n"; }

// The angulation of a type-A state, found by search, or nullopt.
std::optional<std::pair<Polygon, Angulation>> angulation_of(const TiltingState& s) {
  if (s.algebra->type() != DynkinType::A || s.n() > kCanonicalFormDefaultBound) return std::nullopt;
  const Polygon p(s.n(), s.m);
  if (auto a = find_angulation_for(s.quiver)) return std::make_pair(p, *a);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured quiver mutation in m-cluster categories"};
  app.require_subcommand(1);
  app.fallthrough();

  int indent = -1;
  app.add_option("--indent", indent, "JSON indentation; -1 for compact output");

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence to a seed, state or quiver");
  AlgebraOptions mutate_alg;
  mutate_alg.add_to(mutate_cmd, true);
  std::string mutate_seq, mutate_state_file, mutate_quiver_file, mutate_format = "json";
  mutate_cmd->add_option("--seq", mutate_seq, "comma-separated 1-based vertices, e.g. 2,1,3");
  auto* ms = mutate_cmd->add_option("--state", mutate_state_file, "state JSON file");
  auto* mq = mutate_cmd->add_option("--quiver", mutate_quiver_file, "coloured quiver JSON file");
  ms->excludes(mq);
  mutate_cmd->add_option("--format", mutate_format)->check(CLI::IsMember({"json", "dot", "svg"}))->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "run the oracle suites; exit status 1 on failure");
  AlgebraOptions check_alg;
  check_alg.add_to(check_cmd, false);
  CheckScope scope;
  std::string check_quiver_file, check_state_file;
  check_cmd->add_option("--fz-sequences", scope.fz_sequences, "random sequences for the m=1 comparison")
      ->capture_default_str();
  check_cmd->add_option("--fz-max-n", scope.fz_max_n)->capture_default_str();
  check_cmd->add_option("--fz-max-length", scope.fz_max_length)->capture_default_str();
  check_cmd->add_option("--seed", scope.seed, "random seed")->capture_default_str();
  auto* cq = check_cmd->add_option("--quiver", check_quiver_file, "only check this coloured quiver JSON file");
  auto* cs = check_cmd->add_option("--state", check_state_file, "only check this state JSON file");
  cq->excludes(cs);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate all tilting states reachable by mutation");
  AlgebraOptions enum_alg;
  enum_alg.add_to(enum_cmd, false);
  std::size_t bound = kDefaultStateBound;
  bool with_graph = false;
  std::string enum_format = "json";
  enum_cmd->add_option("--bound", bound, "maximum number of states")->capture_default_str();
  enum_cmd->add_flag("--graph", with_graph, "include the exchange graph");
  enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP/JSON explorer service");
  int port = default_port();
  std::string host = "127.0.0.1";
  std::string snapshots;
  int workers = 2;
  serve_cmd->add_option("--port", port, "port (default from COLQUIVER_PORT, else 8080)")->capture_default_str();
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--snapshots", snapshots, "directory for per-session JSON snapshots");
  serve_cmd->add_option("--workers", workers, "enumeration worker threads")->capture_default_str();

  // export
  auto* export_cmd = app.add_subcommand("export", "convert a seed, state, quiver or angulation");
  AlgebraOptions export_alg;
  export_alg.add_to(export_cmd, true);
  std::string export_state_file, export_quiver_file, export_angulation_file, export_format = "json";
  auto* es = export_cmd->add_option("--state", export_state_file, "state JSON file");
  auto* eq = export_cmd->add_option("--quiver", export_quiver_file, "coloured quiver JSON file");
  auto* ea = export_cmd->add_option("--angulation", export_angulation_file, "angulation JSON file");
  es->excludes(eq)->excludes(ea);
  eq->excludes(ea);
  export_cmd->add_option("--format", export_format)
      ->check(CLI::IsMember({"json", "dot", "svg", "cluster", "angulation"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mutate_cmd) {
      if (!mutate_quiver_file.empty()) {
        ColouredQuiver q = quiver_from_json(read_json_file(mutate_quiver_file));
        q = mutate_sequence(q, parse_sequence(mutate_seq, q.n()));
        if (mutate_format == "svg") throw Error(Errc::invalid_input, "svg needs an algebra or state input");
        if (mutate_format == "dot") std::cout << quiver_dot(q);
        else print_json(quiver_to_json(q), indent);
        return 0;
      }
      TiltingState s = mutate_state_file.empty() ? mutate_alg.seed() : state_from_json(read_json_file(mutate_state_file));
      s = mutate_state_sequence(s, parse_sequence(mutate_seq, s.n()));
      if (mutate_format == "dot") {
        std::cout << quiver_dot(s.quiver);
      } else if (mutate_format == "svg") {
        auto pa = angulation_of(s);
        if (!pa) throw Error(Errc::not_found, "no angulation for this state");
        std::cout << angulation_svg(pa->first, pa->second);
      } else {
        print_json(state_to_json(s), indent);
      }
      return 0;
    }

    if (*check_cmd) {
      CheckReport report;
      if (!check_quiver_file.empty()) {
        report.results.push_back(check_quiver(quiver_from_json(read_json_file(check_quiver_file)), check_quiver_file));
      } else if (!check_state_file.empty()) {
        const Json j = read_json_file(check_state_file);
        report.results.push_back(check_quiver(quiver_from_json(j.at("quiver")), check_state_file));
        if (report.passed()) state_from_json(j);
      } else {
        scope.type = parse_dynkin_type(check_alg.type);
        scope.rank = check_alg.rank;
        scope.m = check_alg.m;
        scope.orientation = parse_orientation(scope.type, scope.rank, check_alg.orientation);
        report = run_checks(scope);
      }
      print_json(report.to_json(), indent < 0 ? 2 : indent);
      return report.passed() ? 0 : 1;
    }

    if (*enum_cmd) {
      const Enumeration e = enumerate_tilting_states(enum_alg.algebra(), enum_alg.m, bound);
      if (enum_format == "dot") {
        std::cout << exchange_graph_dot(e);
        return 0;
      }
      Json out = {{"report", enumeration_report(e)}};
      if (with_graph) out["exchangeGraph"] = exchange_graph_json(e);
      print_json(out, indent);
      return 0;
    }

    if (*serve_cmd) {
      ServiceOptions options;
      if (!snapshots.empty()) options.snapshot_dir = snapshots;
      options.workers = workers;
      ExplorerService service(std::move(options));
      httplib::Server server;
      service.install(server);
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "cannot listen on " << host << ":" << port << "\n";
        return 2;
      }
      return 0;
    }

    if (*export_cmd) {
      if (!export_angulation_file.empty()) {
        int n = 0, m = 0;
        const Angulation a = angulation_from_json(read_json_file(export_angulation_file), &n, &m);
        const Polygon p(n, m);
        if (export_format == "svg") std::cout << angulation_svg(p, a);
        else if (export_format == "dot") std::cout << quiver_dot(quiver_from_angulation(p, a));
        else if (export_format == "angulation") print_json(angulation_to_json(p, a), indent);
        else if (export_format == "json") print_json(quiver_to_json(quiver_from_angulation(p, a)), indent);
        else throw Error(Errc::invalid_input, "an angulation has no cluster");
        return 0;
      }
      if (!export_quiver_file.empty()) {
        const ColouredQuiver q = quiver_from_json(read_json_file(export_quiver_file));
        if (export_format == "dot") std::cout << quiver_dot(q);
        else if (export_format == "json") print_json(quiver_to_json(q), indent);
        else throw Error(Errc::invalid_input, "a raw quiver exports only as json or dot");
        return 0;
      }
      const TiltingState s =
          export_state_file.empty() ? export_alg.seed() : state_from_json(read_json_file(export_state_file));
      if (export_format == "json") {
        print_json(state_to_json(s), indent);
      } else if (export_format == "dot") {
        std::cout << quiver_dot(s.quiver);
      } else if (export_format == "cluster") {
        print_json(cluster_to_json(from_state(s)), indent);
      } else {
        auto pa = angulation_of(s);
        if (!pa) throw Error(Errc::not_found, "no angulation for this state");
        if (export_format == "svg") std::cout << angulation_svg(pa->first, pa->second);
        else print_json(angulation_to_json(pa->first, pa->second), indent);
      }
      return 0;
    }
  } catch (const Error& ex) {
    std::cerr << error_body(errc_name(ex.code()), ex.what()).dump() << "\n";
    return 2;
  } catch (const Json::exception& ex) {
    std::cerr << error_body("invalid_input", ex.what()).dump() << "\n";
    return 2;
  }
  return 0;
}
