// Enumeration and census machinery against definitional oracles.
//
// The bit-mask membership tests, the semigroup tree, and the shape census are
// all performance-tuned, so each one is checked here against a slow version
// that works straight from the definitions: filtering all 2^(f-1) masks for
// closure, classifying A(S) with the plain associated_semigroup call, and
// counting semigroups two independent ways.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "numset/enumerate.hpp"
#include "numset/numerical_set.hpp"

using numset::NumericalSet;
namespace en = numset::enumerate;

namespace {

NumericalSet set_from_mask(std::uint64_t small, int f) {
  std::vector<int> gaps;
  for (int e = 1; e < f; ++e)
    if (!(small >> (e - 1) & 1)) gaps.push_back(e);
  gaps.push_back(f);
  return NumericalSet::from_gaps(std::move(gaps));
}

// Census classification done the obvious way: materialize A(S) and look at
// its small elements.
struct SlowCensus {
  std::int64_t no_small = 0;
  std::int64_t other = 0;
  std::map<int, std::int64_t> one_element_by_l;
  std::map<int, std::int64_t> one_atom_by_m;
};

SlowCensus slow_census(int f) {
  SlowCensus out;
  for (std::uint64_t mask = 0; mask < (1ull << (f - 1)); ++mask) {
    NumericalSet s = set_from_mask(mask, f);
    std::vector<int> small = numset::associated_semigroup(s).small_elements();
    if (small.empty()) {
      ++out.no_small;
    } else if (small.size() == 1) {
      ++out.one_element_by_l[f - small[0]];
    } else {
      int m = small[0];
      bool multiples = std::all_of(small.begin(), small.end(),
                                   [m](int e) { return e % m == 0; });
      if (multiples)
        ++out.one_atom_by_m[m];
      else
        ++out.other;
    }
  }
  return out;
}

std::set<NumericalSet> filtered_semigroups_frobenius(int f) {
  std::set<NumericalSet> out;
  for (std::uint64_t mask = 0; mask < (1ull << (f - 1)); ++mask) {
    NumericalSet s = set_from_mask(mask, f);
    if (numset::is_semigroup(s)) out.insert(s);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// mask primitives
// ---------------------------------------------------------------------------

TEST_CASE("member_word mirrors the mask layout") {
  // f = 5, small elements {2, 4} -> mask bits 1 and 3
  std::uint64_t m = en::member_word(0b1010, 5);
  CHECK(m == 0b10101);  // members 0, 2, 4; bit 5 clear
}

TEST_CASE("word_is_semigroup agrees with is_semigroup for every set, F <= 12") {
  for (int f = 1; f <= 12; ++f)
    for (std::uint64_t mask = 0; mask < (1ull << (f - 1)); ++mask) {
      NumericalSet s = set_from_mask(mask, f);
      CHECK(en::word_is_semigroup(en::member_word(mask, f), f) ==
            numset::is_semigroup(s));
    }
}

TEST_CASE("word_assoc_small agrees with associated_semigroup, F <= 11") {
  for (int f = 1; f <= 11; ++f)
    for (std::uint64_t mask = 0; mask < (1ull << (f - 1)); ++mask) {
      NumericalSet s = set_from_mask(mask, f);
      std::uint64_t asc = en::word_assoc_small(en::member_word(mask, f), f);
      std::uint64_t want = 0;
      for (int e : numset::associated_semigroup(s).small_elements())
        want |= 1ull << e;
      CHECK(asc == want);
    }
}

TEST_CASE("set_from_small_mask covers every set exactly once") {
  for (int f = 1; f <= 10; ++f) {
    std::set<NumericalSet> seen;
    en::for_each_numerical_set(f, [&](const NumericalSet& s) {
      CHECK(s.frobenius() == f);
      seen.insert(s);
    });
    CHECK(seen.size() == (1ull << (f - 1)));
  }
}

TEST_CASE("for_each_numerical_set rejects out-of-range Frobenius") {
  CHECK_THROWS_AS(en::for_each_numerical_set(0, [](const NumericalSet&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(en::for_each_numerical_set(63, [](const NumericalSet&) {}),
                  std::invalid_argument);
}

// ---------------------------------------------------------------------------
// semigroup tree
// ---------------------------------------------------------------------------

TEST_CASE("semigroup counts by genus match the removal tree") {
  // counts of numerical semigroups with genus 0, 1, 2, ...
  const std::int64_t known[] = {1, 1, 2, 4, 7, 12, 23, 39, 67, 118};
  for (int g = 0; g < 10; ++g)
    CHECK(en::semigroups_with_genus(g).size() ==
          static_cast<std::size_t>(known[g]));
}

TEST_CASE("genus tree output is exactly the closed sets with that many gaps") {
  for (int g = 0; g <= 9; ++g) {
    std::set<NumericalSet> tree;
    for (const auto& s : en::semigroups_with_genus(g)) {
      CHECK(s.genus() == g);
      CHECK(numset::is_semigroup(s));
      CHECK(tree.insert(s).second);  // no duplicates
    }
    // independent filter: F(S) <= 2g - 1 for every semigroup of genus g >= 1
    if (g == 0) {
      CHECK(tree == std::set<NumericalSet>{NumericalSet::nat()});
      continue;
    }
    std::set<NumericalSet> filter;
    for (int f = 1; f <= 2 * g - 1; ++f)
      for (const auto& s : filtered_semigroups_frobenius(f))
        if (s.genus() == g) filter.insert(s);
    CHECK(tree == filter);
  }
}

TEST_CASE("Frobenius tree output is exactly the closed sets with that F") {
  for (int f = 1; f <= 12; ++f) {
    std::set<NumericalSet> tree;
    for (const auto& s : en::semigroups_with_frobenius(f)) {
      CHECK(s.frobenius() == f);
      CHECK(numset::is_semigroup(s));
      CHECK(tree.insert(s).second);
    }
    CHECK(tree == filtered_semigroups_frobenius(f));
  }
}

TEST_CASE("the two semigroups with Frobenius number 3") {
  auto got = en::semigroups_with_frobenius(3);
  std::set<std::vector<int>> gaps;
  for (const auto& s : got) gaps.insert(s.gaps());
  CHECK(gaps == std::set<std::vector<int>>{{1, 3}, {1, 2, 3}});
}

TEST_CASE("semigroup tree rejects out-of-range parameters") {
  auto ignore = [](const NumericalSet&) {};
  CHECK_THROWS_AS(en::for_each_semigroup_frobenius(0, ignore),
                  std::invalid_argument);
  CHECK_THROWS_AS(en::for_each_semigroup_genus(-1, ignore),
                  std::invalid_argument);
  CHECK_THROWS_AS(en::for_each_semigroup_genus(31, ignore),
                  std::invalid_argument);
}

// ---------------------------------------------------------------------------
// shape census
// ---------------------------------------------------------------------------

TEST_CASE("census at F = 4, counted by hand") {
  // Of the 8 sets: {0,3,5->} and {0,2,3,5->} have A(S) = {0,3,5->}, the rest
  // keep nothing below F.
  auto r = en::shape_census(4);
  CHECK(r.total_sets == 8);
  CHECK(r.no_small == 6);
  CHECK(r.other == 0);
  CHECK(r.one_atom_by_m.empty());
  REQUIRE(r.one_element_by_l.size() == 1);
  CHECK(r.one_element_by_l.at(1) == 2);
}

TEST_CASE("census classes agree with the definitional scan, F <= 9") {
  for (int f = 1; f <= 9; ++f) {
    auto fast = en::shape_census(f);
    auto slow = slow_census(f);
    CHECK(fast.no_small == slow.no_small);
    CHECK(fast.other == slow.other);
    CHECK(fast.one_element_by_l == slow.one_element_by_l);
    CHECK(fast.one_atom_by_m == slow.one_atom_by_m);
  }
}

TEST_CASE("census classes partition all 2^(F-1) sets") {
  for (int f : {6, 10, 14}) {
    auto r = en::shape_census(f);
    std::int64_t sum = r.no_small + r.other;
    for (auto [l, v] : r.one_element_by_l) sum += v;
    for (auto [m, v] : r.one_atom_by_m) sum += v;
    CHECK(sum == std::int64_t{1} << (f - 1));
    CHECK(r.total_sets == std::int64_t{1} << (f - 1));
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("parallel census merges to the sequential result") {
  auto one = en::shape_census(16, 1);
  auto four = en::shape_census(16, 4);
  CHECK(one.total_sets == four.total_sets);
  CHECK(one.no_small == four.no_small);
  CHECK(one.other == four.other);
  CHECK(one.one_element_by_l == four.one_element_by_l);
  CHECK(one.one_atom_by_m == four.one_atom_by_m);
}

TEST_CASE("NUMSET_THREADS overrides the requested thread count") {
  setenv("NUMSET_THREADS", "3", 1);
  CHECK(en::resolve_threads(8) == 3);
  CHECK(en::resolve_threads(0) == 3);
  setenv("NUMSET_THREADS", "garbage", 1);
  CHECK(en::resolve_threads(5) == 5);
  unsetenv("NUMSET_THREADS");
  CHECK(en::resolve_threads(2) == 2);
  CHECK(en::resolve_threads(0) >= 1);
}

// ---------------------------------------------------------------------------
// density table
// ---------------------------------------------------------------------------

TEST_CASE("density rows restate the census") {
  auto table = en::density_table(4, 8, 2);
  REQUIRE(table.rows.size() == 5);
  for (const auto& row : table.rows) {
    auto r = en::shape_census(row.f);
    CHECK(row.total == r.total_sets);
    CHECK(row.count_gamma == r.no_small);
    REQUIRE(row.count_l.size() == 2);
    for (int l = 1; l <= 2; ++l) {
      auto it = r.one_element_by_l.find(l);
      CHECK(row.count_l[l - 1] ==
            (it == r.one_element_by_l.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("density CSV layout") {
  auto table = en::density_table(4, 4, 1);
  CHECK(en::density_csv(table) ==
        "f,total,count_gamma,ratio_gamma,count_l1,ratio_l1\n"
        "4,8,6,0.750000,2,0.250000\n");
}

TEST_CASE("oversized density sweeps need the explicit override") {
  CHECK_THROWS_AS(en::density_table(1, 27, 1), en::BudgetError);
  CHECK_THROWS_AS(en::density_table(0, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(en::density_table(5, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(en::density_table(1, 63, 1, 1, true), std::invalid_argument);
}

TEST_CASE("gamma_stability reports the largest recent jump") {
  en::DensityTable t;
  t.l_max = 0;
  for (int f = 1; f <= 4; ++f) {
    en::DensityRow row;
    row.f = f;
    row.total = 100;
    t.rows.push_back(row);
  }
  t.rows[0].count_gamma = 90;  // outside the window of 2 below
  t.rows[1].count_gamma = 50;
  t.rows[2].count_gamma = 56;
  t.rows[3].count_gamma = 53;
  CHECK(en::gamma_stability(t, 2) == doctest::Approx(0.06));
  CHECK(en::gamma_stability(t, 10) == doctest::Approx(0.40));
  en::DensityTable empty;
  CHECK(en::gamma_stability(empty, 3) == 0.0);
}
