#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colquiver/algebra.hpp"
#include "colquiver/quiver.hpp"

namespace colquiver {

/// An indecomposable of the fundamental domain: a shift M[degree] of a module
/// M (or of a projective when degree == m), stored as its Grothendieck class
/// (-1)^degree [M] together with the degree.
struct DecoratedSummand {
  RootVec cls;
  int degree = 0;

  /// Underlying positive root [M].
  RootVec root() const;

  static DecoratedSummand from_root(RootVec root, int degree);

  friend auto operator<=>(const DecoratedSummand&, const DecoratedSummand&) = default;
};

/// Human-readable name: "P2", "I3[1]", or the root itself such as "(0,1,1)[1]".
std::string summand_label(const AlgebraData& algebra, const DecoratedSummand& s);

struct TiltingState {
  std::shared_ptr<const AlgebraData> algebra;
  int m = 1;
  ColouredQuiver quiver;
  std::vector<DecoratedSummand> summands;

  int n() const { return static_cast<int>(summands.size()); }

  /// Summands in sorted order; the dedup key of the state.
  std::vector<DecoratedSummand> key() const;
  /// The same state with vertices reordered so that summands are sorted.
  TiltingState normalized() const;
};

/// Checks the summand invariants (count, distinctness, roots, degree range).
void validate_state(const TiltingState& state);

std::string key_string(const std::vector<DecoratedSummand>& key);

TiltingState initial_state(std::shared_ptr<const AlgebraData> algebra, int m);

/// Sum over k of q[i][k][c] * class(T_k).
RootVec class_of_b(const TiltingState& state, int i, int c);

/// T_i^(1) from the colour-0 exchange triangle; nullopt where the forward rule
/// is not applicable (non-projective in degree m, or degree m+1).
std::optional<DecoratedSummand> step_lemma_one(const TiltingState& state, int i);
/// T_i^(m) from the colour-m exchange triangle; nullopt on degree -1.
std::optional<DecoratedSummand> step_lemma_two(const TiltingState& state, int i);

TiltingState mutate_state(const TiltingState& state, int j);
TiltingState mutate_state_sequence(TiltingState state, const std::vector<int>& seq);

/// The m+1 complements T_j^(0), ..., T_j^(m) of state / T_j.
std::vector<DecoratedSummand> complements(const TiltingState& state, int j);

struct ExchangeEdge {
  std::size_t from;
  std::size_t to;
  int vertex;  // vertex of `from` (in its normalized order) that was mutated
  friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
};

/// All tilting states reachable from the initial one, in normalized vertex
/// order, sorted by key, with the directed mutation edges between them.
struct Enumeration {
  std::vector<TiltingState> states;
  std::vector<ExchangeEdge> edges;
  std::map<std::vector<DecoratedSummand>, std::size_t> index;
  std::chrono::duration<double> elapsed{};

  std::optional<std::size_t> find(const TiltingState& state) const;
};

inline constexpr std::size_t kDefaultStateBound = 200000;

Enumeration enumerate_tilting_states(std::shared_ptr<const AlgebraData> algebra, int m,
                                     std::size_t bound = kDefaultStateBound);

}  // namespace colquiver
