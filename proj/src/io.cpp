#include "colquiver/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace colquiver {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(Errc::invalid_input, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw Error(Errc::invalid_input, std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

RootVec int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::invalid_input, std::string(what) + " must be an array of integers");
  RootVec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::invalid_input, std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json quiver_to_json(const ColouredQuiver& q) {
  Json arrows = Json::array();
  for (int i = 0; i < q.n(); ++i)
    for (int k = 0; k < q.n(); ++k)
      for (int c = 0; c < q.colours(); ++c)
        if (const auto mult = q.count(i, k, c); mult != 0) {
          arrows.push_back({{"from", i}, {"to", k}, {"colour", c}, {"mult", mult}});
        }
  return {{"m", q.m()}, {"labels", q.labels()}, {"arrows", std::move(arrows)}};
}

ColouredQuiver quiver_from_json(const Json& j) {
  const int m = int_field(j, "m");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw Error(Errc::invalid_input, "\"labels\" must be an array of strings");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw Error(Errc::invalid_input, "\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (j.contains("n") && int_field(j, "n") != static_cast<int>(labels.size())) {
      throw Error(Errc::invalid_input, "\"n\" disagrees with the number of labels");
    }
  } else {
    const int count = int_field(j, "n");
    if (count < 0) throw Error(Errc::invalid_input, "\"n\" must be nonnegative");
    for (int v = 1; v <= count; ++v) labels.push_back(std::to_string(v));
  }
  const int n = static_cast<int>(labels.size());
  ColouredQuiver q(n, m, std::move(labels));

  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) throw Error(Errc::invalid_input, "\"arrows\" must be an array");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& a : arrows) {
    const int from = int_field(a, "from");
    const int to = int_field(a, "to");
    const int colour = int_field(a, "colour");
    const Json& mult = field(a, "mult");
    if (!mult.is_number_integer()) throw Error(Errc::invalid_input, "\"mult\" must be an integer");
    if (!q.contains_vertex(from) || !q.contains_vertex(to)) {
      throw Error(Errc::vertex_out_of_range, "arrow endpoint out of range");
    }
    if (colour < 0 || colour > m) throw Error(Errc::invalid_input, "arrow colour outside 0..m");
    if (!seen.insert({from, to, colour}).second) {
      throw Error(Errc::invalid_input, "arrow (" + std::to_string(from) + "," + std::to_string(to) + "," +
                                           std::to_string(colour) + ") listed twice");
    }
    q.set(from, to, colour, mult.get<Multiplicity>());
  }
  return q;
}

Json algebra_to_json(const AlgebraData& algebra) {
  Json orientation = Json::array();
  for (const auto& a : algebra.orientation()) orientation.push_back({a.from, a.to});
  return {{"type", dynkin_name(algebra.type(), 1).substr(0, 1)},
          {"rank", algebra.rank()},
          {"orientation", std::move(orientation)}};
}

std::shared_ptr<const AlgebraData> algebra_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) throw Error(Errc::invalid_input, "\"type\" must be a string");
  const DynkinType t = parse_dynkin_type(type.get<std::string>());
  const int rank = int_field(j, "rank");
  if (!j.contains("orientation")) return std::make_shared<const AlgebraData>(build_algebra(t, rank));
  const Json& o = j.at("orientation");
  if (o.is_string()) {
    return std::make_shared<const AlgebraData>(build_algebra(t, rank, parse_orientation(t, rank, o.get<std::string>())));
  }
  if (!o.is_array()) throw Error(Errc::invalid_input, "\"orientation\" must be an array of [from, to] pairs");
  std::vector<Arrow> arrows;
  for (const auto& pair : o) {
    const RootVec ends = int_vector(pair, "orientation arrow");
    if (ends.size() != 2) throw Error(Errc::invalid_input, "orientation arrows are [from, to] pairs");
    arrows.push_back({ends[0], ends[1]});
  }
  return std::make_shared<const AlgebraData>(build_algebra(t, rank, std::move(arrows)));
}

Json summand_to_json(const DecoratedSummand& s) { return {{"root", s.root()}, {"degree", s.degree}}; }

DecoratedSummand summand_from_json(const Json& j) {
  return DecoratedSummand::from_root(int_vector(field(j, "root"), "\"root\""), int_field(j, "degree"));
}

Json state_to_json(const TiltingState& state) {
  Json summands = Json::array();
  for (const auto& s : state.summands) summands.push_back(summand_to_json(s));
  return {{"algebra", algebra_to_json(*state.algebra)},
          {"m", state.m},
          {"quiver", quiver_to_json(state.quiver)},
          {"summands", std::move(summands)}};
}

TiltingState state_from_json(const Json& j) {
  TiltingState state{algebra_from_json(field(j, "algebra")), int_field(j, "m"), quiver_from_json(field(j, "quiver")),
                     {}};
  const Json& summands = field(j, "summands");
  if (!summands.is_array()) throw Error(Errc::invalid_input, "\"summands\" must be an array");
  for (const auto& s : summands) state.summands.push_back(summand_from_json(s));
  if (state.quiver.m() != state.m) throw Error(Errc::invalid_input, "quiver m disagrees with state m");
  if (state.quiver.n() != state.n()) throw Error(Errc::invalid_input, "quiver size disagrees with summand count");
  if (const auto v = validate(state.quiver); !v.empty()) {
    throw Error(Errc::invalid_quiver, "state quiver is invalid: " + v.front().message);
  }
  validate_state(state);
  return state;
}

Json coloured_root_to_json(const ColouredRoot& x) {
  if (x.is_negative_simple()) return {{"negSimple", x.neg_simple}};
  return {{"root", x.root}, {"colour", x.colour}};
}

ColouredRoot coloured_root_from_json(const Json& j) {
  if (j.is_object() && j.contains("negSimple")) return ColouredRoot::negative_simple(int_field(j, "negSimple"));
  return ColouredRoot::positive(int_vector(field(j, "root"), "\"root\""), int_field(j, "colour"));
}

Json cluster_to_json(const OrderedMCluster& cluster) {
  Json out = Json::array();
  for (const auto& x : cluster.elements) out.push_back(coloured_root_to_json(x));
  return out;
}

Json angulation_to_json(const Polygon& p, const Angulation& angulation) {
  Json diagonals = Json::array();
  for (const auto& d : angulation.sorted()) diagonals.push_back({d.a, d.b});
  return {{"n", p.n()}, {"m", p.m()}, {"diagonals", std::move(diagonals)}};
}

Angulation angulation_from_json(const Json& j, int* n_out, int* m_out) {
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  const Json& ds = field(j, "diagonals");
  if (!ds.is_array()) throw Error(Errc::invalid_input, "\"diagonals\" must be an array");
  Angulation out;
  for (const auto& d : ds) {
    const RootVec ends = int_vector(d, "diagonal");
    if (ends.size() != 2) throw Error(Errc::invalid_input, "diagonals are [a, b] pairs");
    out.diagonals.push_back(Diagonal::of(ends[0], ends[1]));
  }
  validate_angulation(Polygon(n, m), out);
  if (n_out) *n_out = n;
  if (m_out) *m_out = m;
  return out;
}

std::string quiver_dot(const ColouredQuiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  for (int v = 0; v < q.n(); ++v) os << "  v" << v << " [label=" << dot_quote(q.label(v)) << "];\n";
  for (int i = 0; i < q.n(); ++i)
    for (int k = 0; k < q.n(); ++k)
      for (int c = 0; c < q.colours(); ++c)
        for (Multiplicity u = 0; u < q.count(i, k, c); ++u) {
          os << "  v" << i << " -> v" << k << " [label=\"" << c << "\"];\n";
        }
  os << "}\n";
  return os.str();
}

Json exchange_graph_json(const Enumeration& e) {
  std::vector<std::vector<std::string>> neighbours(e.states.size());
  for (std::size_t s = 0; s < e.states.size(); ++s) neighbours[s].resize(e.states[s].n());
  for (const auto& edge : e.edges) neighbours[edge.from][edge.vertex] = key_string(e.states[edge.to].key());
  Json adjacency = Json::object();
  for (std::size_t s = 0; s < e.states.size(); ++s) adjacency[key_string(e.states[s].key())] = neighbours[s];
  return {{"states", e.states.size()}, {"edges", e.edges.size()}, {"adjacency", std::move(adjacency)}};
}

std::string exchange_graph_dot(const Enumeration& e) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (std::size_t s = 0; s < e.states.size(); ++s) {
    os << "  s" << s << " [label=" << dot_quote(key_string(e.states[s].key())) << "];\n";
  }
  for (const auto& edge : e.edges) {
    os << "  s" << edge.from << " -> s" << edge.to << " [label=\"" << edge.vertex << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json enumeration_report(const Enumeration& e) {
  Json report = {{"states", e.states.size()}, {"edges", e.edges.size()}, {"seconds", e.elapsed.count()}};
  const int n = e.states.empty() ? 0 : e.states.front().n();
  if (n > kCanonicalFormDefaultBound) {
    report["quiverClasses"] = nullptr;
    report["gabrielQuiverClasses"] = nullptr;
    return report;
  }
  std::set<std::string> coloured;
  std::set<std::string> gabriel;
  for (const auto& s : e.states) {
    coloured.insert(canonical_form(s.quiver));
    gabriel.insert(canonical_form(encode_two_colour(colour_zero_part(s.quiver))));
  }
  report["quiverClasses"] = coloured.size();
  report["gabrielQuiverClasses"] = gabriel.size();
  return report;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_input, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw Error(Errc::invalid_input, path + ": " + ex.what());
  }
}

}  // namespace colquiver
