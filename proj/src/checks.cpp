#include "colquiver/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace colquiver {

namespace {

constexpr std::size_t kMaxFailures = 20;

using Clock = std::chrono::steady_clock;

// Runs body, recording its time and turning exceptions into failures.
CheckResult timed(std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const Error& ex) {
    r.fail(std::string(errc_name(ex.code())) + ": " + ex.what());
  } catch (const std::exception& ex) {
    r.fail(ex.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string where(const TiltingState& s, int j) {
  return key_string(s.key()) + " at vertex " + std::to_string(j);
}

std::vector<DecoratedSummand> without(std::vector<DecoratedSummand> key, const DecoratedSummand& s) {
  key.erase(std::find(key.begin(), key.end(), s));
  return key;
}

std::vector<ColouredRoot> without(std::vector<ColouredRoot> elements, const ColouredRoot& x) {
  elements.erase(std::find(elements.begin(), elements.end(), x));
  return elements;
}

std::string cluster_string(const std::vector<ColouredRoot>& xs) {
  std::string out = "{";
  for (std::size_t t = 0; t < xs.size(); ++t) out += (t ? ", " : "") + to_string(xs[t]);
  return out + "}";
}

}  // namespace

void CheckResult::fail(std::string message) {
  passed = false;
  if (failures.size() < kMaxFailures) failures.push_back(std::move(message));
}

bool CheckReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.informational; });
}

Json to_json(const CheckResult& r) {
  Json j = {{"name", r.name},    {"passed", r.passed},   {"cases", r.cases},
            {"seconds", r.seconds}, {"failures", r.failures}, {"details", r.details}};
  if (r.informational) j["informational"] = true;
  return j;
}

Json CheckReport::to_json() const {
  Json checks = Json::array();
  for (const auto& r : results) checks.push_back(colquiver::to_json(r));
  return {{"passed", passed()}, {"checks", std::move(checks)}};
}

int coxeter_number(DynkinType type, int rank) {
  switch (type) {
    case DynkinType::A:
      return rank + 1;
    case DynkinType::D:
      return 2 * rank - 2;
    case DynkinType::E:
      return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  return 0;
}

std::vector<int> exponents(DynkinType type, int rank) {
  dynkin_edges(type, rank);  // rejects unsupported ranks
  std::vector<int> e;
  switch (type) {
    case DynkinType::A:
      for (int i = 1; i <= rank; ++i) e.push_back(i);
      break;
    case DynkinType::D:
      for (int i = 1; i <= 2 * rank - 3; i += 2) e.push_back(i);
      e.push_back(rank - 1);
      break;
    case DynkinType::E:
      if (rank == 6) e = {1, 4, 5, 7, 8, 11};
      if (rank == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (rank == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::uint64_t fuss_catalan(DynkinType type, int rank, int m) {
  const unsigned __int128 h = coxeter_number(type, rank);
  unsigned __int128 num = 1;
  unsigned __int128 den = 1;
  for (int e : exponents(type, rank)) {
    num *= static_cast<unsigned __int128>(m) * h + e + 1;
    den *= static_cast<unsigned __int128>(e) + 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

TiltingState worked_example_state() {
  auto algebra = std::make_shared<const AlgebraData>(build_algebra(DynkinType::A, 3));
  TiltingState s{algebra, 2, ColouredQuiver(3, 2), {}};
  s.summands = {DecoratedSummand::from_root({1, 1, 0}, 0), DecoratedSummand::from_root({0, 1, 0}, 0),
                DecoratedSummand::from_root({0, 0, 1}, 1)};
  s.quiver.set(0, 1, 0, 1);
  s.quiver.set(1, 0, 2, 1);
  s.quiver.set(1, 2, 0, 1);
  s.quiver.set(2, 1, 2, 1);
  for (int v = 0; v < 3; ++v) s.quiver.set_label(v, summand_label(*algebra, s.summands[v]));
  validate_state(s);
  return s;
}

ColouredQuiver worked_example_mutated_quiver() {
  ColouredQuiver q(3, 2, {"I1", "I3[1]", "P3[1]"});
  q.set(0, 1, 1, 1);
  q.set(1, 0, 1, 1);
  q.set(0, 2, 0, 1);
  q.set(2, 0, 2, 1);
  q.set(1, 2, 2, 1);
  q.set(2, 1, 0, 1);
  return q;
}

CheckResult check_worked_example_quiver() {
  return timed("worked-example-quiver", [](CheckResult& r) {
    const TiltingState s = worked_example_state();
    const ColouredQuiver expected = worked_example_mutated_quiver();
    r.cases = 1;
    const auto start = Clock::now();
    const ColouredQuiver got = mutate(s.quiver, 1);
    const double micros = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
    r.details["mutateMicroseconds"] = micros;
    if (!(got == expected)) r.fail("mutate at I2 gives " + quiver_to_json(got).dump());
    if (!(mutate_alt(s.quiver, 1) == expected)) r.fail("mutate_alt at I2 disagrees");
    if (!(inverse_mutate(expected, 1) == s.quiver)) r.fail("inverse_mutate does not undo the step");
    if (micros >= 1000.0) r.fail("mutate took " + std::to_string(micros) + " us");
  });
}

CheckResult check_worked_example_tracker() {
  return timed("worked-example-tracker", [](CheckResult& r) {
    const TiltingState s = worked_example_state();
    const TiltingState next = mutate_state(s, 1);
    r.cases = 1;
    const DecoratedSummand i3_shifted = DecoratedSummand::from_root({0, 1, 1}, 1);
    r.details["newSummand"] = summand_to_json(next.summands[1]);
    r.details["label"] = summand_label(*next.algebra, next.summands[1]);
    if (!(next.summands[1] == i3_shifted)) r.fail("new summand is " + summand_label(*next.algebra, next.summands[1]));
    if (next.summands[0] != s.summands[0] || next.summands[2] != s.summands[2]) r.fail("other summands changed");
    if (!(next.quiver == worked_example_mutated_quiver())) r.fail("quiver of the new state differs");
  });
}

CheckResult check_mutate_alt(const Enumeration& e) {
  return timed("mutate-equals-mutate-alt", [&](CheckResult& r) {
    for (const auto& s : e.states) {
      for (int j = 0; j < s.n(); ++j) {
        ++r.cases;
        try {
          if (!(mutate(s.quiver, j) == mutate_alt(s.quiver, j))) r.fail(where(s, j));
        } catch (const Error& ex) {
          r.fail(where(s, j) + ": " + ex.what());
        }
      }
    }
  });
}

CheckResult check_cycle_law(const Enumeration& e) {
  return timed("cycle-law", [&](CheckResult& r) {
    for (const auto& s : e.states) {
      for (int j = 0; j < s.n(); ++j) {
        ++r.cases;
        ColouredQuiver q = s.quiver;
        TiltingState t = s;
        for (int step = 0; step <= s.m; ++step) {
          q = mutate(q, j);
          t = mutate_state(t, j);
        }
        if (!(q == s.quiver)) r.fail("quiver, " + where(s, j));
        if (t.summands != s.summands || !(t.quiver == s.quiver)) r.fail("state, " + where(s, j));
        if (!(inverse_mutate(mutate(s.quiver, j), j) == s.quiver)) r.fail("inverse, " + where(s, j));
      }
    }
  });
}

CheckResult check_conditions(const Enumeration& e) {
  return timed("quiver-conditions", [&](CheckResult& r) {
    for (const auto& s : e.states) {
      ++r.cases;
      for (const auto& v : validate(s.quiver)) r.fail(key_string(s.key()) + ": " + v.message);
      for (const auto& v : colour_restriction_violations(s.quiver)) r.fail(key_string(s.key()) + ": " + v.message);
      validate_state(s);
    }
  });
}

CheckResult check_counts(const Enumeration& e, DynkinType type, int rank, int m) {
  return timed("counts", [&](CheckResult& r) {
    const std::uint64_t expected = fuss_catalan(type, rank, m);
    r.cases = e.states.size();
    r.details["states"] = e.states.size();
    r.details["productFormula"] = expected;
    r.details["enumerationSeconds"] = e.elapsed.count();
    if (e.states.size() != expected) {
      r.fail(std::to_string(e.states.size()) + " states, product formula gives " + std::to_string(expected));
    }
    if (e.edges.size() != e.states.size() * rank) r.fail("exchange graph is not " + std::to_string(rank) + "-regular");
    if (type == DynkinType::A) {
      const auto angulations = enumerate_angulations(Polygon(rank, m)).size();
      r.details["angulations"] = angulations;
      if (angulations != e.states.size()) {
        r.fail(std::to_string(angulations) + " angulations against " + std::to_string(e.states.size()) + " states");
      }
    }
  });
}

CheckResult check_complements(const Enumeration& e) {
  return timed("complements", [&](CheckResult& r) {
    std::map<std::vector<DecoratedSummand>, std::set<std::size_t>> completions;
    for (std::size_t s = 0; s < e.states.size(); ++s)
      for (const auto& x : e.states[s].summands) completions[without(e.states[s].key(), x)].insert(s);
    r.details["almostComplete"] = completions.size();
    for (const auto& [rest, states] : completions) {
      if (static_cast<int>(states.size()) != e.states.front().m + 1) {
        r.fail(key_string(rest) + " has " + std::to_string(states.size()) + " completions");
      }
    }
    for (std::size_t s = 0; s < e.states.size(); ++s) {
      const TiltingState& state = e.states[s];
      for (int j = 0; j < state.n(); ++j) {
        ++r.cases;
        std::set<std::size_t> reached;
        TiltingState walk = state;
        for (int i = 0; i <= state.m; ++i) {
          if (auto found = e.find(walk)) reached.insert(*found);
          walk = mutate_state(walk, j);
        }
        if (reached != completions[without(state.key(), state.summands[j])]) r.fail("orbit, " + where(state, j));
        const auto cs = complements(state, j);
        if (std::set<DecoratedSummand>(cs.begin(), cs.end()).size() != cs.size()) {
          r.fail("repeated complement, " + where(state, j));
        }
      }
    }
  });
}

CheckResult check_clusters(const Enumeration& e) {
  return timed("clusters", [&](CheckResult& r) {
    std::map<std::vector<ColouredRoot>, std::set<std::vector<ColouredRoot>>> completions;
    std::vector<OrderedMCluster> clusters;
    for (const auto& s : e.states) {
      clusters.push_back(from_state(s));
      const auto sorted = clusters.back().sorted_elements();
      for (const auto& x : sorted) completions[without(sorted, x)].insert(sorted);
      if (to_state(clusters.back()).summands != s.summands) r.fail("translation round trip, " + key_string(s.key()));
    }
    for (const auto& c : clusters) {
      for (int j = 0; j < static_cast<int>(c.elements.size()); ++j) {
        ++r.cases;
        std::set<std::vector<ColouredRoot>> reached;
        OrderedMCluster walk = c;
        for (int i = 0; i <= c.m; ++i) {
          reached.insert(walk.sorted_elements());
          const OrderedMCluster next = mu_cluster(walk, j);
          if (!(next.quiver == mutate(walk.quiver, j))) r.fail("quiver of mu, " + cluster_string(walk.elements));
          walk = next;
        }
        if (walk.elements != c.elements) r.fail("mu^(m+1) is not the identity on " + cluster_string(c.elements));
        const auto rest = without(c.sorted_elements(), c.elements[j]);
        if (reached != completions[rest]) r.fail("completions of " + cluster_string(rest));
      }
    }
  });
}

CheckResult check_r_map(const AlgebraData& algebra, int m) {
  return timed("r-map-bijection", [&](CheckResult& r) {
    const auto domain = coloured_almost_positive_roots(algebra, m);
    const std::set<ColouredRoot> members(domain.begin(), domain.end());
    std::set<ColouredRoot> image;
    r.cases = domain.size();
    r.details["domain"] = domain.size();
    std::size_t longest = 0;
    for (const auto& x : domain) {
      const ColouredRoot y = r_map(algebra, m, x);
      if (!members.count(y)) r.fail(to_string(x) + " maps outside the domain");
      image.insert(y);
      ColouredRoot walk = y;
      std::size_t length = 1;
      while (!(walk == x) && length <= domain.size()) {
        walk = r_map(algebra, m, walk);
        ++length;
      }
      if (!(walk == x)) r.fail("orbit of " + to_string(x) + " does not close");
      longest = std::max(longest, length);
    }
    if (image.size() != domain.size()) r.fail("not injective");
    r.details["longestOrbit"] = longest;
  });
}

CheckResult check_direct_rule(const Enumeration& e) {
  CheckResult out = timed("direct-rule", [&](CheckResult& r) {
    for (auto reading : {DirectRuleReading::natural, DirectRuleReading::signed_}) {
      std::size_t agree = 0, disagree = 0, inapplicable = 0, undefined = 0;
      for (const auto& s : e.states) {
        const OrderedMCluster c = from_state(s);
        for (int j = 0; j < s.n(); ++j) {
          const ColouredRoot expected = mu_cluster(c, j).elements[j];
          const auto outcome = direct_rule(c, j, expected, reading);
          if (outcome.status == DirectRuleStatus::agree) ++agree;
          if (outcome.status == DirectRuleStatus::disagree) ++disagree;
          if (outcome.status == DirectRuleStatus::inapplicable) ++inapplicable;
          if (outcome.status == DirectRuleStatus::disagree && !outcome.proposed) ++undefined;
        }
      }
      r.cases += agree + disagree + inapplicable;
      r.details[reading == DirectRuleReading::natural ? "natural" : "signed"] = {
          {"agree", agree}, {"disagree", disagree}, {"inapplicable", inapplicable}, {"noCandidate", undefined}};
    }
  });
  out.informational = true;
  return out;
}

CheckResult check_polygon_commutation(int n, int m) {
  return timed("polygon-commutation", [&](CheckResult& r) {
    const Polygon p(n, m);
    const auto all = enumerate_angulations(p);
    r.details["angulations"] = all.size();
    for (const auto& a : all) {
      const ColouredQuiver q = quiver_from_angulation(p, a);
      for (const auto& v : validate(q)) r.fail(angulation_to_json(p, a).dump() + ": " + v.message);
      for (int v = 0; v < n; ++v) {
        ++r.cases;
        const Angulation b = mutate_angulation_at(p, a, v);
        if (!(quiver_from_angulation(p, b) == mutate(q, v))) {
          r.fail(angulation_to_json(p, a).dump() + " at " + a.diagonals[v].name());
        }
        const auto diameters = complements_of(p, a, a.diagonals[v]);
        if (std::set<Diagonal>(diameters.begin(), diameters.end()).size() != static_cast<std::size_t>(m + 1)) {
          r.fail("complements of " + a.diagonals[v].name() + " are not m+1 distinct diameters");
        }
      }
    }
  });
}

CheckResult check_fz_reduction(int sequences, int max_n, int max_length, std::uint64_t seed) {
  return timed("fz-reduction", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::size_t steps = 0;
    std::size_t overflowed = 0;
    Multiplicity largest = 0;
    for (int t = 0; t < sequences; ++t) {
      const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
      const int length = std::uniform_int_distribution<int>(0, max_length)(rng);
      // Random acyclic seed: arrows only go forward in a random vertex order.
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      IntQuiver b(n);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (rng() % 2) b.set(order[x], order[y], 1);

      ColouredQuiver q = encode_two_colour(b);
      ++r.cases;
      for (int step = 0; step < length; ++step) {
        const int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
        bool fz_overflow = false, coloured_overflow = false;
        try {
          b = fz_mutate(b, j);
        } catch (const Error& ex) {
          if (ex.code() != Errc::bound_exceeded) throw;
          fz_overflow = true;
        }
        try {
          q = mutate(q, j);
        } catch (const Error& ex) {
          if (ex.code() != Errc::bound_exceeded) throw;
          coloured_overflow = true;
        }
        if (fz_overflow != coloured_overflow) r.fail("sequence " + std::to_string(t) + ": only one side overflowed");
        if (fz_overflow || coloured_overflow) {
          ++overflowed;
          break;
        }
        ++steps;
        if (!(q == encode_two_colour(b))) {
          r.fail("sequence " + std::to_string(t) + " diverges at step " + std::to_string(step));
          break;
        }
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) largest = std::max(largest, b.arrows(x, y));
      }
    }
    r.details["steps"] = steps;
    r.details["overflowed"] = overflowed;
    r.details["largestMultiplicity"] = largest;
    r.details["seed"] = seed;
  });
}

CheckResult check_quiver(const ColouredQuiver& q, const std::string& name) {
  return timed("quiver-conditions:" + name, [&](CheckResult& r) {
    r.cases = 1;
    Json violations = Json::array();
    auto record = [&](const Violation& v) {
      r.fail(v.message);
      violations.push_back({{"from", v.from}, {"to", v.to}, {"colour", v.colour}, {"message", v.message}});
    };
    const auto basic = validate(q);
    for (const auto& v : basic) record(v);
    // The colour restriction presupposes (I)-(III).
    if (basic.empty())
      for (const auto& v : colour_restriction_violations(q)) record(v);
    r.details["violations"] = std::move(violations);
  });
}

CheckReport run_checks(const CheckScope& scope) {
  CheckReport report;
  if (scope.worked_example) {
    report.results.push_back(check_worked_example_quiver());
    report.results.push_back(check_worked_example_tracker());
  }

  std::shared_ptr<const AlgebraData> algebra;
  Enumeration e;
  CheckResult setup = timed("enumerate", [&](CheckResult& r) {
    algebra = std::make_shared<const AlgebraData>(
        scope.orientation.empty() ? build_algebra(scope.type, scope.rank)
                                  : build_algebra(scope.type, scope.rank, scope.orientation));
    e = enumerate_tilting_states(algebra, scope.m);
    r.cases = e.states.size();
    r.details = enumeration_report(e);
    r.details["algebra"] = algebra_to_json(*algebra);
    r.details["m"] = scope.m;
  });
  const bool enumerated = setup.passed;
  report.results.push_back(std::move(setup));
  if (enumerated) {
    report.results.push_back(check_counts(e, scope.type, scope.rank, scope.m));
    report.results.push_back(check_mutate_alt(e));
    report.results.push_back(check_cycle_law(e));
    report.results.push_back(check_conditions(e));
    report.results.push_back(check_complements(e));
    report.results.push_back(check_clusters(e));
    report.results.push_back(check_r_map(*algebra, scope.m));
    report.results.push_back(check_direct_rule(e));
  }
  if (scope.type == DynkinType::A) report.results.push_back(check_polygon_commutation(scope.rank, scope.m));
  if (scope.fz_sequences > 0) {
    report.results.push_back(check_fz_reduction(scope.fz_sequences, scope.fz_max_n, scope.fz_max_length, scope.seed));
  }
  return report;
}

}  // namespace colquiver
