#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colquiver/quiver.hpp"

namespace colquiver {

using RootVec = std::vector<int>;

enum class DynkinType { A, D, E };

std::string dynkin_name(DynkinType type, int rank);
DynkinType parse_dynkin_type(const std::string& text);

struct Arrow {
  int from;
  int to;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Undirected edges {a, b}, a < b, of the Dynkin diagram (0-based, Bourbaki numbering).
std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank);

/// Bipartite orientation in which the class containing vertex 0 consists of
/// sinks. For A3 this is 1 <- 2 -> 3.
std::vector<Arrow> alternating_orientation(DynkinType type, int rank);
/// Every edge {a, b} oriented a -> b with a < b.
std::vector<Arrow> linear_orientation(DynkinType type, int rank);
/// Two-colouring of the Dynkin tree; true marks the class containing vertex 0.
std::vector<bool> bipartition(DynkinType type, int rank);

/// Precomputed data of the path algebra of an oriented simply-laced Dynkin quiver.
///
/// Dimension vectors follow the convention (P_i)_k = #paths i -> k and
/// (I_i)_k = #paths k -> i. The Coxeter matrix acts on classes as the
/// Auslander-Reiten translate: coxeter * [P_i] = -[I_i].
class AlgebraData {
 public:
  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<Arrow>& orientation() const { return orientation_; }
  const IntQuiver& gamma() const { return gamma_; }
  std::string name() const { return dynkin_name(type_, rank_); }

  /// Sorted by height, then lexicographically.
  const std::vector<RootVec>& positive_roots() const { return roots_; }
  const std::vector<RootVec>& projectives() const { return projectives_; }
  const std::vector<RootVec>& injectives() const { return injectives_; }
  const std::vector<std::vector<int>>& coxeter() const { return coxeter_; }

  bool is_positive_root(const RootVec& v) const { return root_set_.count(v) > 0; }
  std::optional<int> projective_index(const RootVec& v) const;
  std::optional<int> injective_index(const RootVec& v) const;
  RootVec apply_coxeter(const RootVec& v) const;
  RootVec apply_inverse_coxeter(const RootVec& v) const;
  /// Euler form <x, y>; for indecomposable modules M, N it equals
  /// dim Hom(M, N) - dim Ext^1(M, N), and at most one of the two is nonzero.
  int euler(const RootVec& x, const RootVec& y) const;

  friend AlgebraData build_algebra(DynkinType type, int rank, std::vector<Arrow> orientation);

 private:
  DynkinType type_ = DynkinType::A;
  int rank_ = 0;
  std::vector<Arrow> orientation_;
  IntQuiver gamma_;
  std::vector<RootVec> roots_;
  std::set<RootVec> root_set_;
  std::vector<RootVec> projectives_;
  std::vector<RootVec> injectives_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<std::vector<int>> inverse_coxeter_;
};

AlgebraData build_algebra(DynkinType type, int rank, std::vector<Arrow> orientation);
inline AlgebraData build_algebra(DynkinType type, int rank) {
  return build_algebra(type, rank, alternating_orientation(type, rank));
}

/// Parses "alternating", "linear" or a comma-separated arrow list such as
/// "2>1,2>3" (1-based vertex numbers).
std::vector<Arrow> parse_orientation(DynkinType type, int rank, const std::string& text);

}  // namespace colquiver
