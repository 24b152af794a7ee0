#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bikraw/io.hpp"
#include "bikraw/verification.hpp"

using namespace bikraw;

namespace {
RahmanParams base() { return {Rat(2), Rat(1), Rat(1), Rat(1)}; }
}  // namespace

TEST_CASE("named suites pass exactly at the spec examples") {
  auto rep = run_suite("su2", 3, base(), "exact");
  CHECK(rep.all_pass());
  for (const auto& c : rep.cases) CHECK(c.residual == "0");

  auto rep2 = run_suite("heisenberg", 2, {Rat(3), Rat(1), Rat(2), Rat(5)}, "exact");
  CHECK(rep2.all_pass());
  CHECK(rep2.cases.size() == 6);  // ha.1r, ha.1l, ha.2, ha.3, ha.4, ha.5

  auto rep3 = run_suite("orthogonality", 4, base(), "exact");
  CHECK(rep3.all_pass());
}

TEST_CASE("suite registry is complete") {
  auto all = suite_case_ids("all");
  std::set<std::string> all_set(all.begin(), all.end());
  // every registered identity appears in `all`
  for (const auto& id : identity_ids()) CHECK(all_set.count(id) == 1);
  // every named suite is a subset of the registry
  for (const auto& suite : suite_names()) {
    for (const auto& id : suite_case_ids(suite)) CHECK(all_set.count(id) == 1);
  }
  CHECK_THROWS_WITH_AS(suite_case_ids("nope"), doctest::Contains("unknown suite"), std::invalid_argument);
}

TEST_CASE("run_suite argument validation") {
  CHECK_THROWS_AS(run_suite("all", 2, base(), "decimal"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("all", 13, base(), "exact"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("all", -1, base(), "exact"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("all", 2, {Rat(1), Rat(1), Rat(1), Rat(1)}, "exact"), std::invalid_argument);
}

TEST_CASE("reports are deterministic and ordered by case id") {
  RunMeta meta{"2,1,1,1", "exact", 0, "repeat"};
  auto a = report_to_json(run_suite("all", 3, base(), "exact"), meta);
  auto b = report_to_json(run_suite("all", 3, base(), "exact"), meta);
  CHECK(a == b);
  auto rep = run_suite("all", 3, base(), "exact");
  CHECK(std::is_sorted(rep.cases.begin(), rep.cases.end(),
                       [](const CaseResult& x, const CaseResult& y) { return x.id < y.id; }));
}

TEST_CASE("randomized tuples pass the whole suite") {
  for (const auto& p : random_rahman_tuples(6, 99)) {
    CAPTURE(p.describe());
    CHECK(run_suite("all", 2, p, "exact").all_pass());
  }
}

TEST_CASE("float mode stays within tolerance away from the exact regime") {
  SuiteOptions opts;
  auto rep = run_suite("all", 14, base(), "float", opts);
  CHECK(rep.mode == "float");
  CHECK(rep.tolerance == 1e-9);
  CHECK(rep.all_pass());
  // the float report excludes the exact-only propagation contract
  for (const auto& c : rep.cases) CHECK(c.id != "rec.propagation");
}

TEST_CASE("random tuple generator respects its contract") {
  auto tuples = random_rahman_tuples(40, 5);
  CHECK(tuples.size() == 40);
  for (const auto& p : tuples) {
    for (const Rat& v : {p.p1, p.p2, p.p3, p.p4}) {
      CHECK(v >= 1);
      CHECK(v <= 9);
    }
    CHECK(p.p1 * p.p4 != p.p2 * p.p3);
  }
  // deterministic in the seed
  auto again = random_rahman_tuples(40, 5);
  for (std::size_t i = 0; i < tuples.size(); ++i) CHECK(tuples[i].describe() == again[i].describe());
}
