#include "colquiver/tracker.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace colquiver {

namespace {

bool is_nonnegative(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

bool is_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

RootVec signed_copy(const RootVec& v, int degree) {
  RootVec out = v;
  if (degree % 2 != 0)
    for (int& x : out) x = -x;
  return out;
}

/// Picks whichever of `low` / `low + 1` makes (-1)^d v a positive root.
DecoratedSummand summand_by_sign(const AlgebraData& alg, const RootVec& v, int low, const char* rule) {
  if (is_zero(v)) {
    throw Error(Errc::data_corruption, std::string(rule) + ": exchange class is zero; state is not a tilting state");
  }
  const int degree = is_nonnegative(signed_copy(v, low)) ? low : low + 1;
  const RootVec root = signed_copy(v, degree);
  if (!alg.is_positive_root(root)) {
    std::ostringstream os;
    os << rule << ": class (";
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
    os << ") is not plus or minus a positive root; state is not a tilting state";
    throw Error(Errc::data_corruption, os.str());
  }
  return DecoratedSummand{v, degree};
}

// An object M[shift] of the derived category, M an indecomposable module.
struct Shifted {
  RootVec module;
  int shift;
};

Shifted as_shifted(const DecoratedSummand& s) { return {s.root(), s.degree}; }

RootVec signed_class(const Shifted& x) { return signed_copy(x.module, x.shift); }

// Dynkin path algebras are representation-directed, so Hom and Ext^1 between
// indecomposables are never both nonzero and the Euler form decides which one is.
bool hom_nonzero(const AlgebraData& alg, const Shifted& x, const Shifted& y) {
  const int gap = y.shift - x.shift;
  if (gap == 0) return alg.euler(x.module, y.module) > 0;
  if (gap == 1) return alg.euler(x.module, y.module) < 0;
  return false;
}

// G = tau^{-1}[m]; tau^{-1} I_k = P_k[1] in the derived category.
Shifted apply_g(const AlgebraData& alg, int m, const Shifted& y) {
  if (auto k = alg.injective_index(y.module)) return {alg.projectives()[*k], y.shift + m + 1};
  return {alg.apply_inverse_coxeter(y.module), y.shift + m};
}

// G^{-1} = tau[-m]; tau P_k = I_k[-1] in the derived category.
Shifted apply_g_inverse(const AlgebraData& alg, int m, const Shifted& y) {
  if (auto k = alg.projective_index(y.module)) return {alg.injectives()[*k], y.shift - m - 1};
  return {alg.apply_coxeter(y.module), y.shift - m};
}

// Class of B_i^(c) as it appears in the lift of the exchange triangle to the
// derived category. A summand T_k sits in the fundamental domain, but the map
// between T_i and it may come from its G-translate; each summand is replaced by
// the copy that carries the nonzero map (into it for c = 0, out of it for c = m).
RootVec lifted_class_of_b(const TiltingState& state, int i, int c) {
  const AlgebraData& alg = *state.algebra;
  const Shifted x = as_shifted(state.summands[i]);
  RootVec sum(alg.rank(), 0);
  for (int k = 0; k < state.n(); ++k) {
    if (k == i) continue;
    const auto mult = state.quiver.count(i, k, c);
    if (mult == 0) continue;
    const Shifted y = as_shifted(state.summands[k]);
    const bool forward = c == 0;
    const Shifted moved = forward ? apply_g(alg, state.m, y) : apply_g_inverse(alg, state.m, y);
    const bool direct = forward ? hom_nonzero(alg, x, y) : hom_nonzero(alg, y, x);
    const bool translated = forward ? hom_nonzero(alg, x, moved) : hom_nonzero(alg, moved, x);
    if (direct == translated) {
      throw Error(Errc::data_corruption, "cannot place exchange summand " + std::to_string(k) + " of vertex " +
                                             std::to_string(i) + "; state is not a tilting state");
    }
    const RootVec cls = signed_class(direct ? y : moved);
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += static_cast<int>(mult) * cls[t];
  }
  return sum;
}

void require_vertex(const TiltingState& state, int j) {
  if (j < 0 || j >= state.n()) {
    throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(j) + " out of range");
  }
}

}  // namespace

RootVec DecoratedSummand::root() const { return signed_copy(cls, degree); }

DecoratedSummand DecoratedSummand::from_root(RootVec root, int degree) {
  return DecoratedSummand{signed_copy(root, degree), degree};
}

std::string summand_label(const AlgebraData& algebra, const DecoratedSummand& s) {
  const RootVec root = s.root();
  std::string name;
  if (auto p = algebra.projective_index(root)) {
    name = "P" + std::to_string(*p + 1);
  } else if (auto i = algebra.injective_index(root)) {
    name = "I" + std::to_string(*i + 1);
  } else {
    name = "(";
    for (std::size_t t = 0; t < root.size(); ++t) name += (t ? "," : "") + std::to_string(root[t]);
    name += ")";
  }
  if (s.degree != 0) name += "[" + std::to_string(s.degree) + "]";
  return name;
}

std::vector<DecoratedSummand> TiltingState::key() const {
  auto k = summands;
  std::sort(k.begin(), k.end());
  return k;
}

TiltingState TiltingState::normalized() const {
  std::vector<int> perm(summands.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return summands[a] < summands[b]; });
  TiltingState out{algebra, m, quiver.permuted(perm), {}};
  for (int v : perm) out.summands.push_back(summands[v]);
  return out;
}

std::string key_string(const std::vector<DecoratedSummand>& key) {
  std::ostringstream os;
  for (std::size_t s = 0; s < key.size(); ++s) {
    if (s) os << "|";
    const RootVec root = key[s].root();
    os << "(";
    for (std::size_t t = 0; t < root.size(); ++t) os << (t ? "," : "") << root[t];
    os << ")@" << key[s].degree;
  }
  return os.str();
}

void validate_state(const TiltingState& state) {
  if (!state.algebra) throw Error(Errc::invalid_input, "state has no algebra");
  const AlgebraData& alg = *state.algebra;
  if (state.n() != alg.rank()) {
    throw Error(Errc::invalid_input, "a tilting state has exactly rank-many summands");
  }
  if (state.quiver.n() != state.n() || state.quiver.m() != state.m) {
    throw Error(Errc::invalid_input, "quiver does not match the summands");
  }
  for (const auto& s : state.summands) {
    if (static_cast<int>(s.cls.size()) != alg.rank()) throw Error(Errc::invalid_input, "class has wrong length");
    if (s.degree < 0 || s.degree > state.m) throw Error(Errc::invalid_input, "degree outside 0..m");
    if (!alg.is_positive_root(s.root())) {
      throw Error(Errc::invalid_input, "summand class is not a signed positive root");
    }
    if (s.degree == state.m && !alg.projective_index(s.root())) {
      throw Error(Errc::invalid_input, "only projectives live in degree m");
    }
  }
  const auto key = state.key();
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw Error(Errc::invalid_input, "summands are not pairwise distinct");
  }
  const auto violations = validate(state.quiver);
  if (!violations.empty()) throw Error(Errc::invalid_quiver, violations.front().message);
}

TiltingState initial_state(std::shared_ptr<const AlgebraData> algebra, int m) {
  if (m < 1) throw Error(Errc::invalid_input, "m must be a positive integer");
  // Irreducible maps between indecomposable projectives run P_i -> P_k for
  // each arrow k -> i of the orientation, so the Gabriel quiver is its opposite.
  TiltingState state{algebra, m, seed_from_acyclic(algebra->gamma().opposite(), m), {}};
  for (int i = 0; i < algebra->rank(); ++i) {
    state.summands.push_back(DecoratedSummand{algebra->projectives()[i], 0});
    state.quiver.set_label(i, summand_label(*algebra, state.summands.back()));
  }
  return state;
}

RootVec class_of_b(const TiltingState& state, int i, int c) {
  require_vertex(state, i);
  RootVec sum(state.algebra->rank(), 0);
  for (int k = 0; k < state.n(); ++k) {
    if (k == i) continue;
    const auto mult = state.quiver.count(i, k, c);
    if (mult == 0) continue;
    const RootVec& cls = state.summands[k].cls;
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += static_cast<int>(mult) * cls[t];
  }
  return sum;
}

std::optional<DecoratedSummand> step_lemma_one(const TiltingState& state, int i) {
  require_vertex(state, i);
  RootVec v = lifted_class_of_b(state, i, 0);
  const DecoratedSummand& current = state.summands[i];
  for (std::size_t t = 0; t < v.size(); ++t) v[t] -= current.cls[t];
  const DecoratedSummand next = summand_by_sign(*state.algebra, v, current.degree, "forward exchange");
  if (next.degree == state.m + 1) return std::nullopt;
  if (next.degree == state.m && !state.algebra->projective_index(next.root())) return std::nullopt;
  return next;
}

std::optional<DecoratedSummand> step_lemma_two(const TiltingState& state, int i) {
  require_vertex(state, i);
  RootVec v = lifted_class_of_b(state, i, state.m);
  const DecoratedSummand& current = state.summands[i];
  for (std::size_t t = 0; t < v.size(); ++t) v[t] -= current.cls[t];
  const DecoratedSummand prev = summand_by_sign(*state.algebra, v, current.degree - 1, "backward exchange");
  if (prev.degree == -1) return std::nullopt;
  if (prev.degree == state.m && !state.algebra->projective_index(prev.root())) {
    throw Error(Errc::data_corruption, "backward exchange produced a non-projective object in degree m");
  }
  return prev;
}

TiltingState mutate_state(const TiltingState& state, int j) {
  require_vertex(state, j);
  TiltingState next{state.algebra, state.m, mutate(state.quiver, j), state.summands};

  if (auto forward = step_lemma_one(state, j)) {
    next.summands[j] = *forward;
  } else {
    // Walk backwards through T_j^(m), T_j^(m-1), ..., T_j^(1).
    TiltingState walk = state;
    for (int step = 0; step < state.m; ++step) {
      auto back = step_lemma_two(walk, j);
      if (!back) {
        throw Error(Errc::internal_contradiction,
                    "complement at vertex " + std::to_string(j) + " is determined by neither exchange direction");
      }
      walk.summands[j] = *back;
      walk.quiver = inverse_mutate(walk.quiver, j);
    }
    if (!(walk.quiver == next.quiver)) {
      throw Error(Errc::internal_contradiction, "backward walk did not reproduce the mutated quiver");
    }
    next.summands[j] = walk.summands[j];
  }

  for (int k = 0; k < state.n(); ++k) {
    if (k != j && next.summands[k] == next.summands[j]) {
      throw Error(Errc::data_corruption, "mutation produced a repeated summand");
    }
  }
  next.quiver.set_label(j, summand_label(*state.algebra, next.summands[j]));
  return next;
}

TiltingState mutate_state_sequence(TiltingState state, const std::vector<int>& seq) {
  for (int j : seq) state = mutate_state(state, j);
  return state;
}

std::vector<DecoratedSummand> complements(const TiltingState& state, int j) {
  require_vertex(state, j);
  std::vector<DecoratedSummand> out{state.summands[j]};
  TiltingState walk = state;
  for (int c = 0; c < state.m; ++c) {
    walk = mutate_state(walk, j);
    out.push_back(walk.summands[j]);
  }
  return out;
}

std::optional<std::size_t> Enumeration::find(const TiltingState& state) const {
  auto it = index.find(state.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Enumeration enumerate_tilting_states(std::shared_ptr<const AlgebraData> algebra, int m, std::size_t bound) {
  const auto started = std::chrono::steady_clock::now();
  Enumeration result;
  std::vector<TiltingState> found;
  std::map<std::vector<DecoratedSummand>, std::size_t> discovery;
  std::vector<ExchangeEdge> edges;

  TiltingState start = initial_state(algebra, m).normalized();
  discovery.emplace(start.key(), 0);
  found.push_back(std::move(start));

  for (std::size_t cursor = 0; cursor < found.size(); ++cursor) {
    for (int j = 0; j < algebra->rank(); ++j) {
      TiltingState next = mutate_state(found[cursor], j).normalized();
      auto key = next.key();
      auto it = discovery.find(key);
      std::size_t target;
      if (it != discovery.end()) {
        target = it->second;
        if (!(found[target].quiver == next.quiver)) {
          throw Error(Errc::internal_contradiction,
                      "two mutation paths reach " + key_string(key) + " with different quivers");
        }
      } else {
        if (found.size() >= bound) {
          throw Error(Errc::bound_exceeded, "more than " + std::to_string(bound) + " tilting states");
        }
        target = found.size();
        discovery.emplace(std::move(key), target);
        found.push_back(std::move(next));
      }
      edges.push_back({cursor, target, j});
    }
  }

  // Renumber by key order so the output does not depend on traversal order.
  std::vector<std::size_t> position(found.size());
  std::size_t rank = 0;
  for (auto& [key, discovered] : discovery) {
    position[discovered] = rank;
    result.index.emplace(key, rank);
    ++rank;
  }
  result.states.resize(found.size());
  for (std::size_t s = 0; s < found.size(); ++s) result.states[position[s]] = std::move(found[s]);
  for (auto& e : edges) result.edges.push_back({position[e.from], position[e.to], e.vertex});
  std::sort(result.edges.begin(), result.edges.end(), [](const ExchangeEdge& a, const ExchangeEdge& b) {
    return std::tie(a.from, a.vertex) < std::tie(b.from, b.vertex);
  });
  result.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace colquiver
