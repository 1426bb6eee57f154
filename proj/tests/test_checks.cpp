#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colquiver/checks.hpp"

using namespace colquiver;

TEST_CASE("product formula matches the classical cluster counts") {
  CHECK(fuss_catalan(DynkinType::A, 1, 1) == 2);
  CHECK(fuss_catalan(DynkinType::A, 3, 1) == 14);
  CHECK(fuss_catalan(DynkinType::A, 4, 1) == 42);
  CHECK(fuss_catalan(DynkinType::D, 4, 1) == 50);
  CHECK(fuss_catalan(DynkinType::E, 6, 1) == 833);
  CHECK(fuss_catalan(DynkinType::E, 7, 1) == 4160);
  CHECK(fuss_catalan(DynkinType::E, 8, 1) == 25080);
  CHECK(fuss_catalan(DynkinType::A, 3, 2) == 55);
  for (int m = 1; m <= 6; ++m) CHECK(fuss_catalan(DynkinType::A, 1, m) == static_cast<std::uint64_t>(m + 1));
}

TEST_CASE("exponents sum to the number of positive roots") {
  CHECK(exponents(DynkinType::D, 4) == std::vector<int>{1, 3, 3, 5});
  for (int n : {6, 7, 8}) {
    int sum = 0;
    for (int e : exponents(DynkinType::E, n)) sum += e;
    CHECK(sum == n * coxeter_number(DynkinType::E, n) / 2);
  }
}

TEST_CASE("worked example checks") {
  CHECK(check_worked_example_quiver().passed);
  CHECK(check_worked_example_tracker().passed);
}

TEST_CASE("default scope passes") {
  CheckScope scope;
  scope.fz_sequences = 200;
  const CheckReport report = run_checks(scope);
  CHECK(report.passed());
  for (const auto& r : report.results) {
    CAPTURE(r.name);
    CHECK((r.passed || r.informational));
    if (r.name == "enumerate") CHECK(r.details.at("states") == 55);
  }
  const Json j = report.to_json();
  CHECK(j.at("passed") == true);
}

TEST_CASE("m=1 scope on A4") {
  CheckScope scope;
  scope.rank = 4;
  scope.m = 1;
  scope.fz_sequences = 300;
  const CheckReport report = run_checks(scope);
  CHECK(report.passed());
}

TEST_CASE("a corrupted quiver fails with its violations") {
  ColouredQuiver q(2, 2);
  q.set(0, 1, 0, 1);
  q.set(1, 0, 1, 1);
  const CheckResult r = check_quiver(q, "bad");
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failures.empty());
  CHECK(r.details.at("violations").size() == r.failures.size());
}

TEST_CASE("FZ comparison is reproducible") {
  const CheckResult a = check_fz_reduction(100, 6, 20, 7);
  const CheckResult b = check_fz_reduction(100, 6, 20, 7);
  CHECK(a.passed);
  CHECK(a.details.at("steps") == b.details.at("steps"));
}
