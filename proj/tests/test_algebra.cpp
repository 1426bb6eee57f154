#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "colquiver/algebra.hpp"

using namespace colquiver;

namespace {

// Independent oracle: number of paths a -> b by depth-first search.
int paths(const std::vector<Arrow>& arrows, int a, int b) {
  if (a == b) return 1;
  int total = 0;
  for (const auto& x : arrows)
    if (x.from == a) total += paths(arrows, x.to, b);
  return total;
}

struct Case {
  DynkinType type;
  int rank;
};

const std::vector<Case> kTypes = {{DynkinType::A, 1}, {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4},
                                  {DynkinType::A, 6}, {DynkinType::D, 4}, {DynkinType::D, 5}, {DynkinType::D, 6},
                                  {DynkinType::E, 6}, {DynkinType::E, 7}, {DynkinType::E, 8}};

std::size_t expected_roots(Case c) {
  const std::size_t n = c.rank;
  switch (c.type) {
    case DynkinType::A:
      return n * (n + 1) / 2;
    case DynkinType::D:
      return n * (n - 1);
    case DynkinType::E:
      return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

int coxeter_h(Case c) {
  switch (c.type) {
    case DynkinType::A:
      return c.rank + 1;
    case DynkinType::D:
      return 2 * c.rank - 2;
    case DynkinType::E:
      return c.rank == 6 ? 12 : c.rank == 7 ? 18 : 30;
  }
  return 0;
}

}  // namespace

TEST_CASE("A3 with 1 <- 2 -> 3") {
  const AlgebraData a = build_algebra(DynkinType::A, 3, parse_orientation(DynkinType::A, 3, "2>1,2>3"));
  CHECK(a.projectives() == std::vector<RootVec>{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}});
  CHECK(a.injectives() == std::vector<RootVec>{{1, 1, 0}, {0, 1, 0}, {0, 1, 1}});
  CHECK(a.orientation() == alternating_orientation(DynkinType::A, 3));
}

TEST_CASE("small root systems") {
  const AlgebraData a1 = build_algebra(DynkinType::A, 1);
  CHECK(a1.positive_roots() == std::vector<RootVec>{{1}});
  const AlgebraData a2 = build_algebra(DynkinType::A, 2, {{0, 1}});
  CHECK(a2.positive_roots().size() == 3);
  CHECK(a2.is_positive_root({1, 0}));
  CHECK(a2.is_positive_root({0, 1}));
  CHECK(a2.is_positive_root({1, 1}));
  CHECK_FALSE(a2.is_positive_root({2, 1}));
}

TEST_CASE("projectives and injectives agree with path counts") {
  for (const auto c : kTypes) {
    for (const auto& orientation : {alternating_orientation(c.type, c.rank), linear_orientation(c.type, c.rank)}) {
      const AlgebraData a = build_algebra(c.type, c.rank, orientation);
      CAPTURE(a.name());
      for (int i = 0; i < c.rank; ++i) {
        for (int k = 0; k < c.rank; ++k) {
          CHECK(a.projectives()[i][k] == paths(orientation, i, k));
          CHECK(a.injectives()[i][k] == paths(orientation, k, i));
        }
        CHECK(a.is_positive_root(a.projectives()[i]));
        CHECK(a.is_positive_root(a.injectives()[i]));
      }
    }
  }
}

TEST_CASE("number of positive roots") {
  for (const auto c : kTypes) {
    const AlgebraData a = build_algebra(c.type, c.rank);
    CAPTURE(a.name());
    CHECK(a.positive_roots().size() == expected_roots(c));
  }
}

TEST_CASE("Coxeter transformation") {
  for (const auto c : kTypes) {
    const AlgebraData a = build_algebra(c.type, c.rank);
    CAPTURE(a.name());
    for (int i = 0; i < c.rank; ++i) {
      RootVec minus_injective = a.injectives()[i];
      for (int& x : minus_injective) x = -x;
      CHECK(a.apply_coxeter(a.projectives()[i]) == minus_injective);
      CHECK(a.apply_inverse_coxeter(minus_injective) == a.projectives()[i]);
    }
    // The Coxeter transformation has order h.
    for (const auto& root : a.positive_roots()) {
      RootVec v = root;
      for (int t = 0; t < coxeter_h(c); ++t) v = a.apply_coxeter(v);
      CHECK(v == root);
    }
  }
}

TEST_CASE("Euler form against projectives") {
  const AlgebraData a = build_algebra(DynkinType::D, 5);
  for (int i = 0; i < 5; ++i)
    for (const auto& x : a.positive_roots()) CHECK(a.euler(a.projectives()[i], x) == x[i]);
}

TEST_CASE("invalid algebras") {
  CHECK_THROWS_AS(build_algebra(DynkinType::D, 3), Error);
  CHECK_THROWS_AS(build_algebra(DynkinType::E, 9), Error);
  CHECK_THROWS_AS(build_algebra(DynkinType::A, 0), Error);
  CHECK_THROWS_AS(parse_dynkin_type("B"), Error);
  // An edge oriented twice, one missing.
  CHECK_THROWS_AS(build_algebra(DynkinType::A, 3, {{0, 1}, {1, 0}}), Error);
  // Not an edge of the diagram.
  CHECK_THROWS_AS(build_algebra(DynkinType::A, 3, {{0, 1}, {0, 2}}), Error);
  CHECK_THROWS_AS(parse_orientation(DynkinType::A, 3, "1>"), Error);
}

TEST_CASE("orientation presets") {
  CHECK(parse_orientation(DynkinType::A, 3, "linear") == std::vector<Arrow>{{0, 1}, {1, 2}});
  CHECK(parse_orientation(DynkinType::A, 3, "alternating") == std::vector<Arrow>{{1, 0}, {1, 2}});
  const auto plus = bipartition(DynkinType::D, 4);
  for (auto [a, b] : dynkin_edges(DynkinType::D, 4)) CHECK(plus[a] != plus[b]);
}
