#include "colquiver/algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace colquiver {

namespace {

void check_rank(DynkinType type, int rank) {
  bool ok = false;
  switch (type) {
    case DynkinType::A: ok = rank >= 1; break;
    case DynkinType::D: ok = rank >= 4; break;
    case DynkinType::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw Error(Errc::invalid_input, "no Dynkin diagram " + dynkin_name(type, rank));
}

int tits_form(const RootVec& x, const std::vector<std::pair<int, int>>& edges) {
  int value = 0;
  for (int xi : x) value += xi * xi;
  for (auto [a, b] : edges) value -= x[a] * x[b];
  return value;
}

int height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

std::string dynkin_name(DynkinType type, int rank) {
  const char* letter = type == DynkinType::A ? "A" : type == DynkinType::D ? "D" : "E";
  return letter + std::to_string(rank);
}

DynkinType parse_dynkin_type(const std::string& text) {
  if (text == "A" || text == "a") return DynkinType::A;
  if (text == "D" || text == "d") return DynkinType::D;
  if (text == "E" || text == "e") return DynkinType::E;
  throw Error(Errc::invalid_input, "unsupported Dynkin type '" + text + "' (simply-laced A, D, E only)");
}

std::vector<std::pair<int, int>> dynkin_edges(DynkinType type, int rank) {
  check_rank(type, rank);
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DynkinType::A:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinType::D:
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case DynkinType::E:
      // Bourbaki: 1-3-4-5-6(-7-8) with 2 attached to 4.
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<bool> bipartition(DynkinType type, int rank) {
  const auto edges = dynkin_edges(type, rank);
  std::vector<int> side(rank, -1);
  side[0] = 1;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop_front();
    for (auto [a, b] : edges) {
      const int w = a == v ? b : b == v ? a : -1;
      if (w >= 0 && side[w] < 0) {
        side[w] = 1 - side[v];
        todo.push_back(w);
      }
    }
  }
  std::vector<bool> out(rank);
  for (int v = 0; v < rank; ++v) out[v] = side[v] == 1;
  return out;
}

std::vector<Arrow> alternating_orientation(DynkinType type, int rank) {
  const auto plus = bipartition(type, rank);
  std::vector<Arrow> arrows;
  for (auto [a, b] : dynkin_edges(type, rank)) {
    arrows.push_back(plus[a] ? Arrow{b, a} : Arrow{a, b});
  }
  return arrows;
}

std::vector<Arrow> linear_orientation(DynkinType type, int rank) {
  std::vector<Arrow> arrows;
  for (auto [a, b] : dynkin_edges(type, rank)) arrows.push_back({a, b});
  return arrows;
}

std::vector<Arrow> parse_orientation(DynkinType type, int rank, const std::string& text) {
  if (text.empty() || text == "alternating") return alternating_orientation(type, rank);
  if (text == "linear") return linear_orientation(type, rank);
  std::vector<Arrow> arrows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw Error(Errc::invalid_input, "orientation arrow '" + item + "' lacks '>'");
    try {
      arrows.push_back({std::stoi(item.substr(0, gt)) - 1, std::stoi(item.substr(gt + 1)) - 1});
    } catch (const std::logic_error&) {
      throw Error(Errc::invalid_input, "orientation arrow '" + item + "' is not of the form a>b");
    }
  }
  return arrows;
}

std::optional<int> AlgebraData::projective_index(const RootVec& v) const {
  for (int i = 0; i < rank_; ++i)
    if (projectives_[i] == v) return i;
  return std::nullopt;
}

std::optional<int> AlgebraData::injective_index(const RootVec& v) const {
  for (int i = 0; i < rank_; ++i)
    if (injectives_[i] == v) return i;
  return std::nullopt;
}

RootVec AlgebraData::apply_coxeter(const RootVec& v) const {
  RootVec out(rank_, 0);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) out[r] += coxeter_[r][c] * v[c];
  return out;
}

RootVec AlgebraData::apply_inverse_coxeter(const RootVec& v) const {
  RootVec out(rank_, 0);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) out[r] += inverse_coxeter_[r][c] * v[c];
  return out;
}

int AlgebraData::euler(const RootVec& x, const RootVec& y) const {
  int value = 0;
  for (int i = 0; i < rank_; ++i) value += x[i] * y[i];
  for (const Arrow& a : orientation_) value -= x[a.from] * y[a.to];
  return value;
}

AlgebraData build_algebra(DynkinType type, int rank, std::vector<Arrow> orientation) {
  const auto edges = dynkin_edges(type, rank);

  std::vector<std::pair<int, int>> oriented_edges;
  for (const Arrow& a : orientation) {
    if (a.from < 0 || a.from >= rank || a.to < 0 || a.to >= rank) {
      throw Error(Errc::invalid_input, "orientation arrow out of range");
    }
    oriented_edges.emplace_back(std::min(a.from, a.to), std::max(a.from, a.to));
  }
  std::sort(oriented_edges.begin(), oriented_edges.end());
  if (oriented_edges != edges) {
    throw Error(Errc::invalid_input,
                "orientation must orient each edge of the " + dynkin_name(type, rank) + " diagram exactly once");
  }

  AlgebraData alg;
  alg.type_ = type;
  alg.rank_ = rank;
  std::sort(orientation.begin(), orientation.end());
  alg.orientation_ = orientation;
  alg.gamma_ = IntQuiver(rank);
  for (const Arrow& a : orientation) alg.gamma_.set(a.from, a.to, 1);

  // Positive roots: positive vectors with Tits form 1, grown from the simple roots.
  std::deque<RootVec> todo;
  for (int i = 0; i < rank; ++i) {
    RootVec simple(rank, 0);
    simple[i] = 1;
    alg.root_set_.insert(simple);
    todo.push_back(simple);
  }
  while (!todo.empty()) {
    RootVec beta = todo.front();
    todo.pop_front();
    for (int i = 0; i < rank; ++i) {
      ++beta[i];
      if (tits_form(beta, edges) == 1 && alg.root_set_.insert(beta).second) todo.push_back(beta);
      --beta[i];
    }
  }
  alg.roots_.assign(alg.root_set_.begin(), alg.root_set_.end());
  std::stable_sort(alg.roots_.begin(), alg.roots_.end(),
                   [](const RootVec& a, const RootVec& b) { return height(a) < height(b); });

  // paths[i][k] = number of paths i -> k, including the trivial path.
  std::vector<std::vector<int>> paths(rank, std::vector<int>(rank, 0));
  std::vector<std::vector<int>> power(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) power[i][i] = 1;
  for (int len = 0; len < rank; ++len) {
    for (int i = 0; i < rank; ++i)
      for (int k = 0; k < rank; ++k) paths[i][k] += power[i][k];
    std::vector<std::vector<int>> next(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i)
      for (int t = 0; t < rank; ++t)
        if (power[i][t] != 0)
          for (int k = 0; k < rank; ++k)
            next[i][k] += power[i][t] * static_cast<int>(alg.gamma_.arrows(t, k));
    power = std::move(next);
  }

  alg.projectives_.assign(rank, RootVec(rank, 0));
  alg.injectives_.assign(rank, RootVec(rank, 0));
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < rank; ++k) {
      alg.projectives_[i][k] = paths[i][k];
      alg.injectives_[i][k] = paths[k][i];
    }
  }

  // The matrix with columns [P_i] is (1 - A)^{-T}, so its inverse is (1 - A)^T
  // and coxeter = -[I] (1 - A)^T, where [I] has columns [I_i], i.e. [I] = paths.
  alg.coxeter_.assign(rank, std::vector<int>(rank, 0));
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < rank; ++c) {
      int value = 0;
      for (int t = 0; t < rank; ++t) {
        const int one_minus_a_tc = (t == c ? 1 : 0) - static_cast<int>(alg.gamma_.arrows(c, t));
        value += paths[r][t] * one_minus_a_tc;
      }
      alg.coxeter_[r][c] = -value;
    }
  }

  // inverse = -[P] [I]^{-1} = -paths^T (1 - A).
  alg.inverse_coxeter_.assign(rank, std::vector<int>(rank, 0));
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < rank; ++c) {
      int value = 0;
      for (int t = 0; t < rank; ++t) {
        const int one_minus_a_tc = (t == c ? 1 : 0) - static_cast<int>(alg.gamma_.arrows(t, c));
        value += paths[t][r] * one_minus_a_tc;
      }
      alg.inverse_coxeter_[r][c] = -value;
    }
  }

  for (int i = 0; i < rank; ++i) {
    if (alg.apply_inverse_coxeter(alg.apply_coxeter(alg.projectives_[i])) != alg.projectives_[i]) {
      throw Error(Errc::internal_contradiction, "inverse Coxeter matrix is wrong");
    }
    if (!alg.is_positive_root(alg.projectives_[i]) || !alg.is_positive_root(alg.injectives_[i])) {
      throw Error(Errc::internal_contradiction, "projective or injective vector is not a root");
    }
    RootVec image = alg.apply_coxeter(alg.projectives_[i]);
    for (int& x : image) x = -x;
    if (image != alg.injectives_[i]) {
      throw Error(Errc::internal_contradiction, "Coxeter matrix does not send [P_i] to -[I_i]");
    }
  }
  return alg;
}

}  // namespace colquiver
