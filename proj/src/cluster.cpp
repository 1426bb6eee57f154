#include "colquiver/cluster.hpp"

#include <algorithm>

namespace colquiver {

namespace {

RootVec negated(RootVec v) {
  for (int& x : v) x = -x;
  return v;
}

RootVec simple_root(int rank, int i) {
  RootVec v(rank, 0);
  v[i] = 1;
  return v;
}

void require_valid_element(const AlgebraData& algebra, int m, const ColouredRoot& x) {
  if (x.is_negative_simple()) {
    if (x.neg_simple >= algebra.rank()) throw Error(Errc::invalid_input, "negative simple index out of range");
    return;
  }
  if (!algebra.is_positive_root(x.root)) throw Error(Errc::invalid_input, to_string(x) + " is not a positive root");
  if (x.colour < 1 || x.colour > m) throw Error(Errc::invalid_input, to_string(x) + " has colour outside 1..m");
}

RootVec as_vector(const AlgebraData& algebra, int m, const ColouredRoot& x, DirectRuleReading reading) {
  if (reading == DirectRuleReading::signed_) return to_summand(algebra, m, x).cls;
  if (x.is_negative_simple()) return negated(simple_root(algebra.rank(), x.neg_simple));
  return x.root;
}

}  // namespace

std::string to_string(const ColouredRoot& x) {
  if (x.is_negative_simple()) return "-a" + std::to_string(x.neg_simple + 1);
  std::string out = "(";
  for (std::size_t t = 0; t < x.root.size(); ++t) out += (t ? "," : "") + std::to_string(x.root[t]);
  return out + ")^" + std::to_string(x.colour);
}

std::vector<ColouredRoot> coloured_almost_positive_roots(const AlgebraData& algebra, int m) {
  std::vector<ColouredRoot> out;
  for (int c = 1; c <= m; ++c)
    for (const auto& beta : algebra.positive_roots()) out.push_back(ColouredRoot::positive(beta, c));
  for (int i = 0; i < algebra.rank(); ++i) out.push_back(ColouredRoot::negative_simple(i));
  return out;
}

DecoratedSummand to_summand(const AlgebraData& algebra, int m, const ColouredRoot& x) {
  require_valid_element(algebra, m, x);
  if (x.is_negative_simple()) return DecoratedSummand::from_root(algebra.projectives()[x.neg_simple], m);
  return DecoratedSummand::from_root(x.root, x.colour - 1);
}

ColouredRoot from_summand(const AlgebraData& algebra, int m, const DecoratedSummand& s) {
  const RootVec root = s.root();
  if (s.degree == m) {
    if (auto i = algebra.projective_index(root)) return ColouredRoot::negative_simple(*i);
    throw Error(Errc::invalid_input, "degree-m summand is not projective");
  }
  if (s.degree < 0 || s.degree > m || !algebra.is_positive_root(root)) {
    throw Error(Errc::invalid_input, "summand is outside the fundamental domain");
  }
  return ColouredRoot::positive(root, s.degree + 1);
}

ColouredRoot r_map(const AlgebraData& algebra, int m, const ColouredRoot& x) {
  require_valid_element(algebra, m, x);
  // P_i[m+1] ~ tau P_i [1] = I_i in degree 0.
  if (x.is_negative_simple()) return ColouredRoot::positive(algebra.injectives()[x.neg_simple], 1);
  if (x.colour < m) return ColouredRoot::positive(x.root, x.colour + 1);
  if (auto i = algebra.projective_index(x.root)) return ColouredRoot::negative_simple(*i);
  // M[m] ~ tau M in degree 0 for non-projective M.
  RootVec translated = algebra.apply_coxeter(x.root);
  if (!algebra.is_positive_root(translated)) {
    throw Error(Errc::data_corruption, "tau of " + to_string(x) + " is not a positive root");
  }
  return ColouredRoot::positive(std::move(translated), 1);
}

std::vector<ColouredRoot> OrderedMCluster::sorted_elements() const {
  auto out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

OrderedMCluster initial_cluster(std::shared_ptr<const AlgebraData> algebra, int m) {
  OrderedMCluster out{algebra, m, {}, seed_from_acyclic(algebra->gamma().opposite(), m)};
  for (int i = 0; i < algebra->rank(); ++i) {
    out.elements.push_back(ColouredRoot::negative_simple(i));
    out.quiver.set_label(i, to_string(out.elements.back()));
  }
  return out;
}

ColouredQuiver bipartite_initial_quiver(DynkinType type, int rank, int m) {
  const auto plus = bipartition(type, rank);
  ColouredQuiver q(rank, m);
  for (auto [a, b] : dynkin_edges(type, rank)) {
    const int from = plus[a] ? a : b;
    const int to = plus[a] ? b : a;
    q.set(from, to, 0, 1);
    q.set(to, from, m, 1);
  }
  return q;
}

TiltingState to_state(const OrderedMCluster& cluster) {
  if (!cluster.algebra) throw Error(Errc::invalid_input, "cluster has no algebra");
  TiltingState state{cluster.algebra, cluster.m, cluster.quiver, {}};
  for (const auto& x : cluster.elements) state.summands.push_back(to_summand(*cluster.algebra, cluster.m, x));
  validate_state(state);
  for (int v = 0; v < state.n(); ++v) state.quiver.set_label(v, summand_label(*state.algebra, state.summands[v]));
  return state;
}

OrderedMCluster from_state(const TiltingState& state) {
  OrderedMCluster out{state.algebra, state.m, {}, state.quiver};
  for (int v = 0; v < state.n(); ++v) {
    out.elements.push_back(from_summand(*state.algebra, state.m, state.summands[v]));
    out.quiver.set_label(v, to_string(out.elements.back()));
  }
  return out;
}

DirectRuleOutcome direct_rule(const OrderedMCluster& cluster, int j, const ColouredRoot& expected,
                              DirectRuleReading reading) {
  const AlgebraData& alg = *cluster.algebra;
  const ColouredRoot& current = cluster.elements.at(j);
  if (current.is_negative_simple()) return {};

  RootVec beta = negated(as_vector(alg, cluster.m, current, reading));
  for (int k = 0; k < static_cast<int>(cluster.elements.size()); ++k) {
    if (k == j) continue;
    const auto mult = cluster.quiver.count(j, k, 0);
    if (mult == 0) continue;
    const RootVec v = as_vector(alg, cluster.m, cluster.elements[k], reading);
    for (std::size_t t = 0; t < beta.size(); ++t) beta[t] += static_cast<int>(mult) * v[t];
  }

  std::optional<ColouredRoot> proposed;
  if (alg.is_positive_root(beta)) {
    proposed = ColouredRoot::positive(beta, current.colour);
  } else if (const RootVec minus = negated(beta); alg.is_positive_root(minus)) {
    proposed = r_map(alg, cluster.m, ColouredRoot::positive(minus, current.colour));
  }
  const bool agrees = proposed && *proposed == expected;
  return {agrees ? DirectRuleStatus::agree : DirectRuleStatus::disagree, proposed};
}

OrderedMCluster mu_cluster(const OrderedMCluster& cluster, int j, const MuOptions& options) {
  OrderedMCluster out = from_state(mutate_state(to_state(cluster), j));
  if (options.cross_check) {
    const auto outcome = direct_rule(cluster, j, out.elements[j], options.reading);
    if (outcome.status == DirectRuleStatus::disagree && options.strict) {
      throw Error(Errc::cluster_mismatch, "direct rule gives " +
                                              (outcome.proposed ? to_string(*outcome.proposed) : "no element") +
                                              " but the translation gives " + to_string(out.elements[j]));
    }
  }
  return out;
}

const ColouredQuiver& quiver_of_cluster(const OrderedMCluster& cluster) { return cluster.quiver; }

}  // namespace colquiver
