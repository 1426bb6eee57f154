#include "colquiver/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace colquiver {

namespace {

int mod(int x, int k) {
  const int r = x % k;
  return r < 0 ? r + k : r;
}

void require_diagonal(const Polygon& p, Diagonal d) {
  const int N = p.vertices();
  if (d.a < 1 || d.b > N || d.a >= d.b) {
    throw Error(Errc::invalid_input, "diagonal " + d.name() + " does not join two distinct polygon vertices");
  }
  if (p.adjacent(d.a, d.b)) throw Error(Errc::invalid_input, d.name() + " is a boundary edge, not a diagonal");
}

// Per vertex: number of outgoing arrows of each colour, then sorted over vertices.
std::vector<std::vector<Multiplicity>> colour_profile(const ColouredQuiver& q) {
  std::vector<std::vector<Multiplicity>> rows;
  for (int i = 0; i < q.n(); ++i) {
    std::vector<Multiplicity> row(q.colours(), 0);
    for (int k = 0; k < q.n(); ++k)
      for (int c = 0; c < q.colours(); ++c) row[c] += q.count(i, k, c);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

Polygon::Polygon(int n, int m) : n_(n), m_(m) {
  if (n < 0 || m < 1) throw Error(Errc::invalid_input, "polygon needs n >= 0 and m >= 1");
  if (vertices() < 4) throw Error(Errc::invalid_input, "polygon needs at least 4 vertices");
}

bool Polygon::adjacent(int a, int b) const {
  const int gap = mod(b - a, vertices());
  return gap == 1 || gap == vertices() - 1;
}

bool is_admissible(const Polygon& p, Diagonal d) {
  require_diagonal(p, d);
  // The clockwise arc a..b has k edges; that part has k+1 sides, the other
  // N-k+1. N = 2 (mod m), so one part is admissible iff the other is.
  const int k = d.b - d.a;
  const int other = p.vertices() - k;
  return mod(k + 1 - 2, p.m()) == 0 && mod(other + 1 - 2, p.m()) == 0;
}

bool crosses(Diagonal x, Diagonal y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

std::vector<Diagonal> Angulation::sorted() const {
  auto out = diagonals;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> Angulation::position(Diagonal d) const {
  for (std::size_t v = 0; v < diagonals.size(); ++v)
    if (diagonals[v] == d) return static_cast<int>(v);
  return std::nullopt;
}

std::vector<std::vector<int>> regions(const Polygon& p, const std::vector<Diagonal>& diagonals) {
  std::vector<std::vector<int>> cells(1);
  cells[0].resize(p.vertices());
  std::iota(cells[0].begin(), cells[0].end(), 1);
  for (const Diagonal& d : diagonals) {
    bool split = false;
    for (std::size_t r = 0; r < cells.size() && !split; ++r) {
      auto& cell = cells[r];
      const auto ia = std::find(cell.begin(), cell.end(), d.a);
      const auto ib = std::find(cell.begin(), cell.end(), d.b);
      if (ia == cell.end() || ib == cell.end()) continue;
      const int pa = static_cast<int>(std::min(ia, ib) - cell.begin());
      const int pb = static_cast<int>(std::max(ia, ib) - cell.begin());
      const int size = static_cast<int>(cell.size());
      if (mod(pb - pa, size) == 1 || mod(pa - pb, size) == 1) {
        throw Error(Errc::invalid_input, "diagonal " + d.name() + " repeats a side of an existing cell");
      }
      std::vector<int> first(cell.begin() + pa, cell.begin() + pb + 1);
      std::vector<int> second(cell.begin() + pb, cell.end());
      second.insert(second.end(), cell.begin(), cell.begin() + pa + 1);
      cell = std::move(first);
      cells.push_back(std::move(second));
      split = true;
    }
    if (!split) throw Error(Errc::invalid_input, "diagonal " + d.name() + " crosses another diagonal");
  }
  return cells;
}

void validate_angulation(const Polygon& p, const Angulation& angulation) {
  const auto& ds = angulation.diagonals;
  if (static_cast<int>(ds.size()) != p.n()) {
    throw Error(Errc::invalid_input, "an angulation of this polygon has exactly " + std::to_string(p.n()) +
                                         " diagonals, got " + std::to_string(ds.size()));
  }
  for (std::size_t s = 0; s < ds.size(); ++s) {
    if (!is_admissible(p, ds[s])) throw Error(Errc::invalid_input, "diagonal " + ds[s].name() + " is not admissible");
    for (std::size_t t = 0; t < s; ++t) {
      if (ds[s] == ds[t]) throw Error(Errc::invalid_input, "diagonal " + ds[s].name() + " appears twice");
      if (crosses(ds[s], ds[t])) {
        throw Error(Errc::invalid_input, "diagonals " + ds[s].name() + " and " + ds[t].name() + " cross");
      }
    }
  }
}

ColouredQuiver quiver_from_angulation(const Polygon& p, const Angulation& angulation) {
  validate_angulation(p, angulation);
  std::vector<std::string> labels;
  for (const auto& d : angulation.diagonals) labels.push_back(d.name());
  ColouredQuiver q(p.n(), p.m(), std::move(labels));

  for (const auto& cell : regions(p, angulation.diagonals)) {
    const int sides = static_cast<int>(cell.size());
    // Side t joins cell[t] and cell[t+1], in clockwise order.
    std::vector<std::pair<int, int>> diagonal_sides;  // (side index, quiver vertex)
    for (int t = 0; t < sides; ++t) {
      if (auto v = angulation.position(Diagonal::of(cell[t], cell[(t + 1) % sides]))) {
        diagonal_sides.emplace_back(t, *v);
      }
    }
    // Colour of gamma -> delta: sides strictly between them, walking
    // counterclockwise from gamma (equivalently clockwise from delta).
    for (auto [g, from] : diagonal_sides) {
      for (auto [d, to] : diagonal_sides) {
        if (g == d) continue;
        q.add(from, to, mod(g - d - 1, sides), 1);
      }
    }
  }
  return q;
}

std::vector<Diagonal> complements_of(const Polygon& p, const Angulation& angulation, Diagonal gamma) {
  const auto at = angulation.position(gamma);
  if (!at) throw Error(Errc::not_found, "diagonal " + gamma.name() + " is not in the angulation");
  validate_angulation(p, angulation);

  std::vector<Diagonal> rest;
  for (const auto& d : angulation.diagonals)
    if (!(d == gamma)) rest.push_back(d);
  const int width = 2 * p.m() + 2;
  for (const auto& cell : regions(p, rest)) {
    const auto ia = std::find(cell.begin(), cell.end(), gamma.a);
    const auto ib = std::find(cell.begin(), cell.end(), gamma.b);
    if (ia == cell.end() || ib == cell.end()) continue;
    if (static_cast<int>(cell.size()) != width) {
      throw Error(Errc::internal_contradiction, "removing a diagonal did not leave a (2m+2)-gon");
    }
    const int pa = static_cast<int>(ia - cell.begin());
    const int pb = static_cast<int>(ib - cell.begin());
    std::vector<Diagonal> out;
    for (int i = 0; i <= p.m(); ++i) {
      out.push_back(Diagonal::of(cell[mod(pa - i, width)], cell[mod(pb - i, width)]));
    }
    return out;
  }
  throw Error(Errc::internal_contradiction, "no cell contains both ends of " + gamma.name());
}

Angulation mutate_angulation(const Polygon& p, const Angulation& angulation, Diagonal gamma) {
  const auto diameters = complements_of(p, angulation, gamma);
  Angulation out = angulation;
  out.diagonals[*angulation.position(gamma)] = diameters[1];
  return out;
}

Angulation mutate_angulation_at(const Polygon& p, const Angulation& angulation, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(angulation.diagonals.size())) {
    throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(vertex) + " out of range");
  }
  return mutate_angulation(p, angulation, angulation.diagonals[vertex]);
}

std::vector<Angulation> enumerate_angulations(const Polygon& p, std::size_t bound) {
  const int N = p.vertices();
  std::vector<Diagonal> admissible;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b)
      if (!p.adjacent(a, b) && is_admissible(p, {a, b})) admissible.push_back({a, b});

  std::vector<Angulation> out;
  std::vector<Diagonal> chosen;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == p.n()) {
      if (out.size() >= bound) {
        throw Error(Errc::bound_exceeded, "more than " + std::to_string(bound) + " angulations");
      }
      out.push_back(Angulation{chosen});
      return;
    }
    for (std::size_t s = start; s < admissible.size(); ++s) {
      const Diagonal d = admissible[s];
      if (std::any_of(chosen.begin(), chosen.end(), [&](Diagonal c) { return crosses(c, d); })) continue;
      chosen.push_back(d);
      self(self, s + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::optional<Angulation> find_angulation_for(const ColouredQuiver& q) {
  const int n = q.n();
  if (n > 8) throw Error(Errc::bound_exceeded, "angulation search is limited to 8 vertices");
  const Polygon p(n, q.m());
  const auto target = colour_profile(q);
  for (const auto& candidate : enumerate_angulations(p)) {
    const ColouredQuiver cq = quiver_from_angulation(p, candidate);
    if (colour_profile(cq) != target) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (cq.permuted(perm) == q) {
        Angulation out;
        for (int v : perm) out.diagonals.push_back(candidate.diagonals[v]);
        return out;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::string angulation_svg(const Polygon& p, const Angulation& angulation, double size) {
  const int N = p.vertices();
  const double centre = size / 2.0;
  const double radius = size / 2.0 - 24.0;
  const double pi = std::acos(-1.0);
  std::vector<std::pair<double, double>> pos(N + 1);
  for (int k = 1; k <= N; ++k) {
    // Vertex 1 at the top, labels increasing clockwise.
    const double angle = -pi / 2.0 + 2.0 * pi * (k - 1) / N;
    pos[k] = {centre + radius * std::cos(angle), centre + radius * std::sin(angle)};
  }
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
     << "\" viewBox=\"0 0 " << num(size) << " " << num(size) << "\">\n";
  os << "  <polygon class=\"boundary\" fill=\"none\" stroke=\"#444\" points=\"";
  for (int k = 1; k <= N; ++k) os << (k > 1 ? " " : "") << num(pos[k].first) << "," << num(pos[k].second);
  os << "\"/>\n";
  for (std::size_t v = 0; v < angulation.diagonals.size(); ++v) {
    const Diagonal d = angulation.diagonals[v];
    os << "  <line class=\"diagonal\" data-vertex=\"" << v << "\" data-name=\"" << d.name() << "\" x1=\""
       << num(pos[d.a].first) << "\" y1=\"" << num(pos[d.a].second) << "\" x2=\"" << num(pos[d.b].first)
       << "\" y2=\"" << num(pos[d.b].second) << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  }
  for (int k = 1; k <= N; ++k) {
    const double lx = centre + (pos[k].first - centre) * (radius + 14.0) / radius;
    const double ly = centre + (pos[k].second - centre) * (radius + 14.0) / radius;
    os << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly)
       << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << k << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace colquiver
