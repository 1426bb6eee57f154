#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "colquiver/checks.hpp"
#include "colquiver/tracker.hpp"

using namespace colquiver;

namespace {

std::shared_ptr<const AlgebraData> algebra(DynkinType t, int rank) {
  return std::make_shared<const AlgebraData>(build_algebra(t, rank));
}

std::shared_ptr<const AlgebraData> linear(DynkinType t, int rank) {
  return std::make_shared<const AlgebraData>(build_algebra(t, rank, linear_orientation(t, rank)));
}

DecoratedSummand ds(RootVec root, int degree) { return DecoratedSummand::from_root(std::move(root), degree); }

TiltingState a1_state(int m, int degree) {
  auto a = algebra(DynkinType::A, 1);
  return TiltingState{a, m, ColouredQuiver(1, m), {ds({1}, degree)}};
}

}  // namespace

TEST_CASE("classes carry the sign of the degree") {
  CHECK(ds({0, 1, 1}, 1).cls == RootVec{0, -1, -1});
  CHECK(ds({0, 1, 1}, 2).cls == RootVec{0, 1, 1});
  CHECK(ds({0, 1, 1}, 1).root() == RootVec{0, 1, 1});
}

TEST_CASE("initial state") {
  const TiltingState s = initial_state(algebra(DynkinType::A, 3), 2);
  CHECK(s.summands == std::vector<DecoratedSummand>{ds({1, 0, 0}, 0), ds({1, 1, 1}, 0), ds({0, 0, 1}, 0)});
  CHECK(validate(s.quiver).empty());
  CHECK(s.quiver.labels() == std::vector<std::string>{"P1", "P2", "P3"});
  for (int m = 1; m <= 4; ++m) {
    const TiltingState a1 = initial_state(algebra(DynkinType::A, 1), m);
    CHECK(a1.summands == std::vector<DecoratedSummand>{ds({1}, 0)});
  }
}

TEST_CASE("class of B in the worked example") {
  const TiltingState s = worked_example_state();
  CHECK(class_of_b(s, 1, 0) == RootVec{0, 0, -1});
  CHECK(class_of_b(s, 1, 2) == RootVec{1, 1, 0});
  CHECK(class_of_b(s, 0, 1) == RootVec{0, 0, 0});
}

TEST_CASE("forward exchange steps") {
  CHECK(step_lemma_one(worked_example_state(), 1) == ds({0, 1, 1}, 1));
  CHECK(step_lemma_one(a1_state(2, 0), 0) == ds({1}, 1));
  CHECK_FALSE(step_lemma_one(a1_state(2, 2), 0).has_value());
}

TEST_CASE("backward exchange steps") {
  CHECK(step_lemma_two(worked_example_state(), 1) == ds({1, 0, 0}, 0));
  CHECK_FALSE(step_lemma_two(a1_state(2, 0), 0).has_value());
  CHECK_FALSE(step_lemma_two(initial_state(algebra(DynkinType::A, 3), 2), 1).has_value());
}

TEST_CASE("mutate_state on the worked example") {
  const TiltingState s = worked_example_state();
  const TiltingState next = mutate_state(s, 1);
  CHECK(next.summands == std::vector<DecoratedSummand>{ds({1, 1, 0}, 0), ds({0, 1, 1}, 1), ds({0, 0, 1}, 1)});
  CHECK(next.quiver == worked_example_mutated_quiver());
  CHECK(next.quiver.label(1) == "I3[1]");
  CHECK(mutate_state_sequence(s, {1, 1, 1}).summands == s.summands);
}

TEST_CASE("mutate_state from the projectives") {
  const TiltingState s = initial_state(algebra(DynkinType::A, 3), 2);
  const TiltingState next = mutate_state(s, 0);
  CHECK(next.summands[0] == ds({0, 1, 1}, 0));
  CHECK(next.quiver == mutate(s.quiver, 0));
}

TEST_CASE("complements of the worked example") {
  const auto cs = complements(worked_example_state(), 1);
  CHECK(cs == std::vector<DecoratedSummand>{ds({0, 1, 0}, 0), ds({0, 1, 1}, 1), ds({1, 0, 0}, 0)});
}

TEST_CASE("A1 cycles through the shifts of its projective") {
  TiltingState s = initial_state(algebra(DynkinType::A, 1), 2);
  s = mutate_state(s, 0);
  CHECK(s.summands[0] == ds({1}, 1));
  s = mutate_state(s, 0);
  CHECK(s.summands[0] == ds({1}, 2));
  s = mutate_state(s, 0);
  CHECK(s.summands[0] == ds({1}, 0));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_tilting_states(algebra(DynkinType::A, 3), 2).states.size() == 55);
  CHECK(enumerate_tilting_states(linear(DynkinType::A, 3), 2).states.size() == 55);
  CHECK(enumerate_tilting_states(algebra(DynkinType::A, 2), 1).states.size() == 5);
  CHECK(enumerate_tilting_states(algebra(DynkinType::A, 3), 1).states.size() == 14);
  CHECK(enumerate_tilting_states(algebra(DynkinType::D, 4), 1).states.size() == 50);
  for (int m = 1; m <= 5; ++m) {
    CHECK(enumerate_tilting_states(algebra(DynkinType::A, 1), m).states.size() == static_cast<std::size_t>(m + 1));
  }
}

TEST_CASE("enumeration agrees with the product formula") {
  struct Case {
    DynkinType type;
    int rank;
    int m;
  };
  for (const auto c : {Case{DynkinType::A, 2, 2}, Case{DynkinType::A, 2, 3}, Case{DynkinType::A, 3, 3},
                       Case{DynkinType::A, 4, 2}, Case{DynkinType::D, 4, 2}, Case{DynkinType::D, 5, 1},
                       Case{DynkinType::E, 6, 1}}) {
    const auto e = enumerate_tilting_states(algebra(c.type, c.rank), c.m);
    CAPTURE(dynkin_name(c.type, c.rank));
    CAPTURE(c.m);
    CHECK(e.states.size() == fuss_catalan(c.type, c.rank, c.m));
    CHECK(e.edges.size() == e.states.size() * c.rank);
  }
}

TEST_CASE("enumeration structure") {
  const auto e = enumerate_tilting_states(algebra(DynkinType::A, 3), 2);
  std::set<std::vector<DecoratedSummand>> keys;
  for (const auto& s : e.states) {
    keys.insert(s.key());
    CHECK(s.summands == s.key());
    CHECK(e.find(s) == e.index.at(s.key()));
  }
  CHECK(keys.size() == e.states.size());
  for (const auto& edge : e.edges) {
    CHECK(mutate_state(e.states[edge.from], edge.vertex).key() == e.states[edge.to].key());
  }
  CHECK_THROWS_AS(enumerate_tilting_states(algebra(DynkinType::A, 3), 2, 10), Error);
}

TEST_CASE("validate_state") {
  auto a = algebra(DynkinType::A, 3);
  TiltingState dup{a, 2, ColouredQuiver(3, 2), {ds({1, 0, 0}, 0), ds({1, 0, 0}, 0), ds({0, 0, 1}, 0)}};
  CHECK_THROWS_AS(validate_state(dup), Error);
  TiltingState top{a, 2, ColouredQuiver(3, 2), {ds({1, 1, 0}, 2), ds({1, 0, 0}, 0), ds({0, 0, 1}, 0)}};
  CHECK_THROWS_AS(validate_state(top), Error);
  TiltingState few{a, 2, ColouredQuiver(2, 2), {ds({1, 0, 0}, 0), ds({0, 0, 1}, 0)}};
  CHECK_THROWS_AS(validate_state(few), Error);
  TiltingState notroot{a, 2, ColouredQuiver(3, 2), {ds({1, 0, 1}, 0), ds({1, 0, 0}, 0), ds({0, 0, 1}, 0)}};
  CHECK_THROWS_AS(validate_state(notroot), Error);
}

TEST_CASE("key strings") {
  CHECK(key_string(worked_example_state().key()) == "(0,0,1)@1|(0,1,0)@0|(1,1,0)@0");
  CHECK(summand_label(*algebra(DynkinType::A, 3), ds({0, 1, 1}, 1)) == "I3[1]");
  CHECK(summand_label(*algebra(DynkinType::A, 4), ds({0, 1, 1, 0}, 0)) == "(0,1,1,0)");
}
