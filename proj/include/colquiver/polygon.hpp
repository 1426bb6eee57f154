#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colquiver/quiver.hpp"

namespace colquiver {

/// The polygon modelling the m-cluster category of type A_n: (n+1)m+2
/// vertices labelled clockwise 1..N.
class Polygon {
 public:
  Polygon(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int vertices() const { return (n_ + 1) * m_ + 2; }
  bool adjacent(int a, int b) const;

 private:
  int n_;
  int m_;
};

/// A diagonal {a, b}, stored with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;

  static Diagonal of(int x, int y) { return x < y ? Diagonal{x, y} : Diagonal{y, x}; }
  bool touches(int v) const { return a == v || b == v; }
  std::string name() const { return std::to_string(a) + "-" + std::to_string(b); }

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

bool is_admissible(const Polygon& p, Diagonal d);
bool crosses(Diagonal x, Diagonal y);

/// An (m+2)-angulation. The order of `diagonals` is the vertex order of the
/// associated coloured quiver; mutation replaces a diagonal in place.
struct Angulation {
  std::vector<Diagonal> diagonals;

  std::vector<Diagonal> sorted() const;
  std::optional<int> position(Diagonal d) const;
  /// Same set of diagonals, regardless of order.
  bool same_set(const Angulation& other) const { return sorted() == other.sorted(); }
};

/// Throws invalid_input unless the diagonals form an (m+2)-angulation of p.
void validate_angulation(const Polygon& p, const Angulation& angulation);

/// The cells of the dissection, each as its vertex list in clockwise order.
std::vector<std::vector<int>> regions(const Polygon& p, const std::vector<Diagonal>& diagonals);

ColouredQuiver quiver_from_angulation(const Polygon& p, const Angulation& angulation);

/// The m+1 diameters delta_(0) = gamma, ..., delta_(m) of the (2m+2)-gon left
/// after removing gamma, rotating counterclockwise one step at a time.
std::vector<Diagonal> complements_of(const Polygon& p, const Angulation& angulation, Diagonal gamma);

Angulation mutate_angulation(const Polygon& p, const Angulation& angulation, Diagonal gamma);
Angulation mutate_angulation_at(const Polygon& p, const Angulation& angulation, int vertex);

inline constexpr std::size_t kDefaultAngulationBound = 2000000;

/// All (m+2)-angulations, each with its diagonals sorted, in lexicographic order.
std::vector<Angulation> enumerate_angulations(const Polygon& p, std::size_t bound = kDefaultAngulationBound);

/// An angulation whose quiver equals q exactly, diagonals ordered to match the
/// vertices of q. Brute force; n at most 8.
std::optional<Angulation> find_angulation_for(const ColouredQuiver& q);

std::string angulation_svg(const Polygon& p, const Angulation& angulation, double size = 320.0);

}  // namespace colquiver
