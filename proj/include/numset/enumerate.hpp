// Exhaustive enumeration of numerical sets and semigroups, plus the census
// of associated-semigroup shapes.
//
// A numerical set with Frobenius number f is encoded as an (f-1)-bit mask of
// its elements in [1, f-1]: 2^(f-1) masks, each visited exactly once, in
// increasing mask order.  The closure and A(S) tests run on a full membership
// word (bit i = membership of i), so "does s + S stay inside S" is one shift
// and one AND per small element:
//
//     violations(s) = (M << s) & ~M & [0, f]
//
// Sums past f never violate anything, hence the window mask.  At f = 24 the
// census touches 8.4M sets at a few dozen word ops each.
//
// Semigroups are generated from the tree rooted at N in which a node S has
// children S minus {a} for each atom a > F(S); each semigroup sits at depth
// g(S) and is produced exactly once.  Enumeration by genus and by Frobenius
// number both walk this tree (with F-pruning), independent of the mask
// filter, so the two strategies can be cross-checked against each other.
//
// Multi-threaded sweeps split the mask range into contiguous blocks, one
// worker per block, and merge block results in block order; counts are
// identical to the single-threaded sweep.  NUMSET_THREADS overrides any
// requested thread count.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "numset/numerical_set.hpp"

namespace numset::enumerate {

// Masks use one 64-bit word for membership of [0, 2f-2]; shifts stay in the
// word for f up to 62.
inline constexpr int kMaxMaskFrobenius = 62;

// Soft cost ceiling: sweeps beyond 2^25 sets (f_max > 26) must be requested
// explicitly.
inline constexpr int kBudgetFrobenius = 26;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int resolve_threads(int requested);  // NUMSET_THREADS > requested > hardware

// membership word over [0, f] for the small-element mask (bit j <-> j+1)
std::uint64_t member_word(std::uint64_t small_mask, int f);
bool word_is_semigroup(std::uint64_t member, int f);
// elements of A(S) in [1, f-1], as a membership word bit set
std::uint64_t word_assoc_small(std::uint64_t member, int f);

NumericalSet set_from_small_mask(std::uint64_t small_mask, int f);

template <class Fn>
void for_each_numerical_set(int f, Fn&& fn) {
  if (f < 1 || f > kMaxMaskFrobenius)
    throw std::invalid_argument("for_each_numerical_set: bad Frobenius");
  const std::uint64_t total = 1ull << (f - 1);
  for (std::uint64_t m = 0; m < total; ++m) fn(set_from_small_mask(m, f));
}

// Tree-based; yields in the tree's deterministic DFS order.
void for_each_semigroup_frobenius(
    int f, const std::function<void(const NumericalSet&)>& fn);
void for_each_semigroup_genus(
    int g, const std::function<void(const NumericalSet&)>& fn);

std::vector<NumericalSet> semigroups_with_frobenius(int f);
std::vector<NumericalSet> semigroups_with_genus(int g);

// ---------------------------------------------------------------------------
// shape census
// ---------------------------------------------------------------------------

// Classifies every S with Frobenius f by the shape of A(S); the four classes
// partition the 2^(f-1) sets:
//   no_small:            A(S) = {0, f+1 ->}
//   one_element_by_l:    A(S) = {0, f-l, f+1 ->}, keyed by l
//   one_atom_by_m:       A(S) = mN union [f+1, oo) with >= 2 multiples of m
//                        below f, keyed by m (a single multiple lands in the
//                        one-element class instead)
//   other:               A(S) has >= 2 small atoms
struct SweepResult {
  int frobenius = 0;
  std::int64_t total_sets = 0;
  std::int64_t no_small = 0;
  std::int64_t other = 0;
  std::map<int, std::int64_t> one_element_by_l;
  std::map<int, std::int64_t> one_atom_by_m;
  std::vector<std::string> counterexamples;  // always empty for the census
  double wall_ms = 0.0;
};

SweepResult shape_census(int f, int threads = 1);

// ---------------------------------------------------------------------------
// density table
// ---------------------------------------------------------------------------

struct DensityRow {
  int f = 0;
  std::int64_t total = 0;
  std::int64_t count_gamma = 0;               // no-small-element sets
  std::vector<std::int64_t> count_l;          // count_l[i] for l = i+1
};

struct DensityTable {
  int l_max = 0;
  std::vector<DensityRow> rows;  // ordered by f
};

// Throws BudgetError when f_max > kBudgetFrobenius and the override is not
// set.
DensityTable density_table(int f_min, int f_max, int l_max, int threads = 1,
                           bool allow_over_budget = false);

// "f,total,count_gamma,ratio_gamma,count_l1,ratio_l1,..." with ratios to six
// decimal places.
std::string density_csv(const DensityTable& table);

// Largest |ratio_gamma(f) - ratio_gamma(f-1)| over the final `window` row
// pairs; NaN-free summary of how settled the gamma column is.
double gamma_stability(const DensityTable& table, int window = 3);

}  // namespace numset::enumerate
