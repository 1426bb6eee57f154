#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colquiver/io.hpp"

namespace colquiver {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;  // reported, never fails the run
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
  Json details = Json::object();
  double seconds = 0.0;

  void fail(std::string message);
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool passed() const;
  Json to_json() const;
};

Json to_json(const CheckResult& r);

/// Coxeter number and exponents of a simply-laced Dynkin type.
int coxeter_number(DynkinType type, int rank);
std::vector<int> exponents(DynkinType type, int rank);
/// prod_i (m h + e_i + 1) / (e_i + 1): the number of m-clusters.
std::uint64_t fuss_catalan(DynkinType type, int rank, int m);

/// The worked A3 example with orientation 1 <- 2 -> 3 and m = 2: the state
/// I1 + I2 + P3[1] in that vertex order, with its coloured quiver.
TiltingState worked_example_state();
/// Its quiver after mutating at I2, written out arrow by arrow in the vertex
/// order I1, I3[1], P3[1].
ColouredQuiver worked_example_mutated_quiver();

CheckResult check_worked_example_quiver();
CheckResult check_worked_example_tracker();
CheckResult check_mutate_alt(const Enumeration& e);
CheckResult check_cycle_law(const Enumeration& e);
CheckResult check_conditions(const Enumeration& e);
CheckResult check_counts(const Enumeration& e, DynkinType type, int rank, int m);
CheckResult check_complements(const Enumeration& e);
CheckResult check_clusters(const Enumeration& e);
CheckResult check_r_map(const AlgebraData& algebra, int m);
CheckResult check_direct_rule(const Enumeration& e);
CheckResult check_polygon_commutation(int n, int m);
CheckResult check_fz_reduction(int sequences, int max_n, int max_length, std::uint64_t seed);
/// Conditions (I)-(III) and the colour restriction on one quiver.
CheckResult check_quiver(const ColouredQuiver& q, const std::string& name = "quiver");

struct CheckScope {
  DynkinType type = DynkinType::A;
  int rank = 3;
  int m = 2;
  std::vector<Arrow> orientation;  // empty: alternating
  int fz_sequences = 1000;
  int fz_max_n = 6;
  int fz_max_length = 20;
  std::uint64_t seed = 20240611;
  bool worked_example = true;
};

CheckReport run_checks(const CheckScope& scope);

}  // namespace colquiver
