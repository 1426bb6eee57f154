#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colquiver/tracker.hpp"

namespace colquiver {

/// An element of the m-coloured almost positive roots: a positive root with a
/// colour in 1..m, or a negative simple root -alpha_i.
struct ColouredRoot {
  RootVec root;         // empty for a negative simple root
  int colour = 0;       // 1..m; 0 for a negative simple root
  int neg_simple = -1;  // index i of -alpha_i, or -1

  static ColouredRoot positive(RootVec root, int colour) { return {std::move(root), colour, -1}; }
  static ColouredRoot negative_simple(int i) { return {{}, 0, i}; }

  bool is_negative_simple() const { return neg_simple >= 0; }

  friend auto operator<=>(const ColouredRoot&, const ColouredRoot&) = default;
};

std::string to_string(const ColouredRoot& x);

/// All of Phi^m_{>=-1}: m coloured copies of the positive roots, then -Pi.
std::vector<ColouredRoot> coloured_almost_positive_roots(const AlgebraData& algebra, int m);

/// Fundamental-domain translation: beta^(c) <-> the module of class beta in
/// degree c-1, and -alpha_i <-> P_i in degree m.
DecoratedSummand to_summand(const AlgebraData& algebra, int m, const ColouredRoot& x);
ColouredRoot from_summand(const AlgebraData& algebra, int m, const DecoratedSummand& s);

/// The bijection R_m, i.e. the shift functor [1] on the fundamental domain.
ColouredRoot r_map(const AlgebraData& algebra, int m, const ColouredRoot& x);

struct OrderedMCluster {
  std::shared_ptr<const AlgebraData> algebra;
  int m = 1;
  std::vector<ColouredRoot> elements;
  /// Quiver carried along the mutation path from the initial cluster.
  ColouredQuiver quiver;

  std::vector<ColouredRoot> sorted_elements() const;
};

/// The initial cluster -Pi with the quiver of H[m] (the Gabriel quiver of the
/// orientation's opposite in colour 0).
OrderedMCluster initial_cluster(std::shared_ptr<const AlgebraData> algebra, int m);

/// The bipartite seed: for each Dynkin edge {i, j} with i in the class of
/// vertex 0, an arrow i -> j of colour 0 and j -> i of colour m.
ColouredQuiver bipartite_initial_quiver(DynkinType type, int rank, int m);

TiltingState to_state(const OrderedMCluster& cluster);
OrderedMCluster from_state(const TiltingState& state);

/// How the direct three-case rule turns cluster elements into vectors when
/// forming beta = -C_j + sum_k q_jk^(0) C_k.
enum class DirectRuleReading {
  natural,  // beta^(c) -> beta, -alpha_i -> -alpha_i
  signed_,  // the class of the corresponding summand, (-1)^degree [M]
};

enum class DirectRuleStatus { agree, disagree, inapplicable };

struct DirectRuleOutcome {
  DirectRuleStatus status = DirectRuleStatus::inapplicable;
  std::optional<ColouredRoot> proposed;  // what the direct rule produced, if anything
};

/// Evaluates the direct rule for a positive C_j and compares it with `expected`.
/// Negative simple C_j is always inapplicable.
DirectRuleOutcome direct_rule(const OrderedMCluster& cluster, int j, const ColouredRoot& expected,
                              DirectRuleReading reading = DirectRuleReading::natural);

struct MuOptions {
  bool cross_check = false;
  bool strict = false;  // throw cluster_mismatch on a direct-rule disagreement
  DirectRuleReading reading = DirectRuleReading::natural;
};

/// Mutation of ordered m-clusters through the fundamental-domain translation.
OrderedMCluster mu_cluster(const OrderedMCluster& cluster, int j, const MuOptions& options = {});

const ColouredQuiver& quiver_of_cluster(const OrderedMCluster& cluster);

}  // namespace colquiver
