// Sweep driver checks: token mapping, domain sizes, thread determinism, and
// the budget gate.  The statement predicates themselves are unit-tested with
// the analysis module; here the concern is that the driver visits exactly the
// right instances and reports identically at any thread count.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "numset/enumerate.hpp"
#include "numset/sweeps.hpp"

namespace sw = numset::sweeps;

TEST_CASE("statement tokens round trip and reject strangers") {
  const auto& names = sw::statement_names();
  REQUIRE(names.size() == 12);
  for (const auto& n : names)
    CHECK(sw::statement_name(sw::statement_from_name(n)) == n);
  CHECK_THROWS_AS(sw::statement_from_name("thm5"), std::invalid_argument);
  CHECK_THROWS_AS(sw::statement_from_name(""), std::invalid_argument);
}

TEST_CASE("semigroup-domain sweeps count the tree") {
  // semigroups with Frobenius number 1..10: 1+1+2+2+5+4+11+10+21+22
  auto r = sw::run_statement(sw::Statement::kThm3, 10);
  CHECK(r.statement == "thm3");
  CHECK(r.domain_bound == 10);
  CHECK(r.instances_checked == 79);
  CHECK(r.counterexamples.empty());
  CHECK(sw::run_statement(sw::Statement::kCor42, 10).instances_checked == 79);
  CHECK(sw::run_statement(sw::Statement::kProp57, 10).instances_checked == 79);
}

TEST_CASE("all-set sweeps cover 2^(f-1) masks per Frobenius number") {
  for (auto st : {sw::Statement::kProp23, sw::Statement::kProp51,
                  sw::Statement::kCor52, sw::Statement::kHookGap}) {
    auto r = sw::run_statement(st, 10);
    CHECK(r.instances_checked == (1 << 10) - 1);
    CHECK(r.counterexamples.empty());
  }
  // thm4 only sees sets whose complement is closed
  auto gated = sw::run_statement(sw::Statement::kThm4, 10);
  CHECK(gated.instances_checked > 0);
  CHECK(gated.instances_checked < (1 << 10) - 1);
  CHECK(gated.counterexamples.empty());
}

TEST_CASE("gated sweeps stay inside their domains") {
  auto graded = sw::run_statement(sw::Statement::kProp53, 10);
  CHECK(graded.instances_checked > 0);
  CHECK(graded.instances_checked < (1 << 10) - 1);  // c1 >= 2 cuts rectangles
  CHECK(graded.counterexamples.empty());

  auto closed = sw::run_statement(sw::Statement::kProp55, 12);
  auto maxed = sw::run_statement(sw::Statement::kCor56, 12);
  CHECK(closed.instances_checked > 0);
  CHECK(maxed.instances_checked > 0);
  CHECK(maxed.instances_checked <= closed.instances_checked);
  CHECK(closed.counterexamples.empty());
  CHECK(maxed.counterexamples.empty());
}

TEST_CASE("preimage sweep runs over every set with a larger semigroup pool") {
  auto r = sw::run_statement(sw::Statement::kProp24, 8);
  CHECK(r.instances_checked == (1 << 8) - 1);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("dual complement paths agree everywhere") {
  auto r = sw::dual_path_report(12);
  CHECK(r.statement == "dualpath");
  CHECK(r.instances_checked == (1 << 12) - 1);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("thread count changes nothing but timing") {
  auto one = sw::run_statement(sw::Statement::kHookGap, 13, 1);
  auto four = sw::run_statement(sw::Statement::kHookGap, 13, 4);
  CHECK(one.instances_checked == four.instances_checked);
  CHECK(one.counterexamples == four.counterexamples);
  CHECK(one.statement == four.statement);
  CHECK(one.domain_bound == four.domain_bound);
}

TEST_CASE("bounds and budget are enforced") {
  CHECK_THROWS_AS(sw::run_statement(sw::Statement::kProp23, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sw::run_statement(sw::Statement::kProp23, 27),
                  numset::enumerate::BudgetError);
  CHECK_THROWS_AS(sw::dual_path_report(27), numset::enumerate::BudgetError);
  CHECK_THROWS_AS(sw::run_statement(sw::Statement::kProp23, 63, 1, true),
                  std::invalid_argument);
}
