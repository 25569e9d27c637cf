#include "numset/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <utility>

namespace numset::enumerate {

namespace {

std::uint64_t below(int n) {  // bits [0, n)
  return n >= 64 ? ~0ull : (1ull << n) - 1;
}

}  // namespace

int resolve_threads(int requested) {
  if (const char* env = std::getenv("NUMSET_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  if (requested >= 1) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::uint64_t member_word(std::uint64_t small_mask, int f) {
  (void)f;  // bit f stays clear: small_mask < 2^(f-1)
  return (small_mask << 1) | 1ull;
}

bool word_is_semigroup(std::uint64_t member, int f) {
  const std::uint64_t window = below(f + 1);
  // only sums of two small elements can land on a gap <= f
  for (std::uint64_t t = member >> 1 << 1; t; t &= t - 1) {
    int s = std::countr_zero(t);
    if (s >= f) break;
    if ((member << s) & ~member & window) return false;
  }
  return true;
}

std::uint64_t word_assoc_small(std::uint64_t member, int f) {
  const std::uint64_t window = below(f + 1);
  std::uint64_t out = 0;
  for (int n = 1; n < f; ++n)
    if ((member >> n & 1) && !((member << n) & ~member & window))
      out |= 1ull << n;
  return out;
}

NumericalSet set_from_small_mask(std::uint64_t small_mask, int f) {
  std::vector<int> gaps;
  for (int j = 1; j < f; ++j)
    if (!(small_mask >> (j - 1) & 1)) gaps.push_back(j);
  gaps.push_back(f);
  return NumericalSet::from_gaps(std::move(gaps));
}

// ---------------------------------------------------------------------------
// semigroup tree
// ---------------------------------------------------------------------------
// Root N; the children of S are S \ {a} for each atom a > F(S), so F strictly
// increases down every edge and genus counts depth.  Every semigroup other
// than N shows up exactly once.  Both walks below prune atoms above a bound
// that no surviving descendant could keep as an element.

namespace {

NumericalSet set_from_member_word(std::uint64_t member, int f_cur) {
  std::vector<int> gaps;
  for (int j = 1; j <= f_cur; ++j)
    if (!(member >> j & 1)) gaps.push_back(j);
  return NumericalSet::from_gaps(std::move(gaps));
}

// atoms of the semigroup encoded by `member` that lie in (f_cur, bound]
std::uint64_t word_atoms_in(std::uint64_t member, int f_cur, int bound) {
  const std::uint64_t cand = member & below(bound + 1) & ~1ull;
  std::uint64_t decomposable = 0;
  for (std::uint64_t t = cand; t; t &= t - 1)
    decomposable |= cand << std::countr_zero(t);
  return cand & ~decomposable & ~below(f_cur + 1);
}

void frobenius_dfs(std::uint64_t member, int f_cur, int f_target,
                   const std::function<void(const NumericalSet&)>& fn) {
  std::uint64_t at = word_atoms_in(member, f_cur, f_target);
  for (std::uint64_t t = at; t; t &= t - 1) {
    int a = std::countr_zero(t);
    std::uint64_t child = member & ~(1ull << a);
    if (a == f_target)
      fn(set_from_member_word(child, a));
    else
      frobenius_dfs(child, a, f_target, fn);
  }
}

void genus_dfs(std::uint64_t member, int f_cur, int depth, int g_target,
               const std::function<void(const NumericalSet&)>& fn) {
  if (depth == g_target) {
    fn(set_from_member_word(member, f_cur));
    return;
  }
  std::uint64_t at = word_atoms_in(member, f_cur, 2 * g_target - 1);
  for (std::uint64_t t = at; t; t &= t - 1) {
    int a = std::countr_zero(t);
    genus_dfs(member & ~(1ull << a), a, depth + 1, g_target, fn);
  }
}

}  // namespace

void for_each_semigroup_frobenius(
    int f, const std::function<void(const NumericalSet&)>& fn) {
  if (f < 1 || f > 60)
    throw std::invalid_argument("for_each_semigroup_frobenius: bad Frobenius");
  frobenius_dfs(below(f + 2), -1, f, fn);
}

void for_each_semigroup_genus(
    int g, const std::function<void(const NumericalSet&)>& fn) {
  if (g < 0 || g > 30)
    throw std::invalid_argument("for_each_semigroup_genus: bad genus");
  if (g == 0) {
    fn(NumericalSet::nat());
    return;
  }
  genus_dfs(below(2 * g + 1), -1, 0, g, fn);
}

std::vector<NumericalSet> semigroups_with_frobenius(int f) {
  std::vector<NumericalSet> out;
  for_each_semigroup_frobenius(f, [&](const NumericalSet& s) { out.push_back(s); });
  return out;
}

std::vector<NumericalSet> semigroups_with_genus(int g) {
  std::vector<NumericalSet> out;
  for_each_semigroup_genus(g, [&](const NumericalSet& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------
// shape census
// ---------------------------------------------------------------------------

namespace {

// Classify one set by the small part of A(S).  A(S) is closed, so when every
// small element is a multiple of the least one m they form an unbroken run
// m, 2m, ..., km and m is the only small atom; any non-multiple means a
// second atom.
void census_block(int f, std::uint64_t lo, std::uint64_t hi, SweepResult& out) {
  out.frobenius = f;
  out.total_sets = static_cast<std::int64_t>(hi - lo);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    std::uint64_t asc = word_assoc_small(member_word(mask, f), f);
    int pc = std::popcount(asc);
    if (pc == 0) {
      ++out.no_small;
    } else if (pc == 1) {
      ++out.one_element_by_l[f - std::countr_zero(asc)];
    } else {
      int m = std::countr_zero(asc);
      bool run = true;
      for (std::uint64_t t = asc; t; t &= t - 1)
        if (std::countr_zero(t) % m != 0) {
          run = false;
          break;
        }
      if (run)
        ++out.one_atom_by_m[m];
      else
        ++out.other;
    }
  }
}

void merge_into(SweepResult& acc, const SweepResult& part) {
  acc.total_sets += part.total_sets;
  acc.no_small += part.no_small;
  acc.other += part.other;
  for (auto [k, v] : part.one_element_by_l) acc.one_element_by_l[k] += v;
  for (auto [k, v] : part.one_atom_by_m) acc.one_atom_by_m[k] += v;
  acc.counterexamples.insert(acc.counterexamples.end(),
                             part.counterexamples.begin(),
                             part.counterexamples.end());
}

}  // namespace

SweepResult shape_census(int f, int threads) {
  if (f < 1 || f > kMaxMaskFrobenius)
    throw std::invalid_argument("shape_census: bad Frobenius");
  auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t total = 1ull << (f - 1);
  int nt = resolve_threads(threads);
  if (static_cast<std::uint64_t>(nt) > total) nt = static_cast<int>(total);

  SweepResult result;
  result.frobenius = f;
  if (nt <= 1) {
    census_block(f, 0, total, result);
  } else {
    std::vector<SweepResult> parts(nt);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) {
      std::uint64_t lo = total / nt * i + std::min<std::uint64_t>(i, total % nt);
      std::uint64_t hi =
          total / nt * (i + 1) + std::min<std::uint64_t>(i + 1, total % nt);
      pool.emplace_back(census_block, f, lo, hi, std::ref(parts[i]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) merge_into(result, part);
  }

  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return result;
}

// ---------------------------------------------------------------------------
// density table
// ---------------------------------------------------------------------------

DensityTable density_table(int f_min, int f_max, int l_max, int threads,
                           bool allow_over_budget) {
  if (f_min < 1 || f_min > f_max || l_max < 0)
    throw std::invalid_argument("density_table: bad range");
  if (f_max > kMaxMaskFrobenius)
    throw std::invalid_argument("density_table: Frobenius beyond mask width");
  if (f_max > kBudgetFrobenius && !allow_over_budget)
    throw BudgetError("density_table: f_max " + std::to_string(f_max) +
                      " exceeds the default budget of " +
                      std::to_string(kBudgetFrobenius) +
                      " (2^25 sets); pass the override to proceed");

  DensityTable table;
  table.l_max = l_max;
  for (int f = f_min; f <= f_max; ++f) {
    SweepResult sweep = shape_census(f, threads);
    DensityRow row;
    row.f = f;
    row.total = sweep.total_sets;
    row.count_gamma = sweep.no_small;
    row.count_l.assign(l_max, 0);
    for (auto [l, v] : sweep.one_element_by_l)
      if (l >= 1 && l <= l_max) row.count_l[l - 1] = v;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string density_csv(const DensityTable& table) {
  std::string out = "f,total,count_gamma,ratio_gamma";
  for (int l = 1; l <= table.l_max; ++l) {
    out += ",count_l" + std::to_string(l);
    out += ",ratio_l" + std::to_string(l);
  }
  out += '\n';
  char buf[32];
  auto ratio = [&](std::int64_t count, std::int64_t total) {
    std::snprintf(buf, sizeof buf, "%.6f",
                  total ? static_cast<double>(count) / total : 0.0);
    return std::string(buf);
  };
  for (const auto& row : table.rows) {
    out += std::to_string(row.f) + ',' + std::to_string(row.total) + ',' +
           std::to_string(row.count_gamma) + ',' +
           ratio(row.count_gamma, row.total);
    for (std::int64_t c : row.count_l)
      out += ',' + std::to_string(c) + ',' + ratio(c, row.total);
    out += '\n';
  }
  return out;
}

double gamma_stability(const DensityTable& table, int window) {
  const auto& rows = table.rows;
  if (rows.size() < 2 || window < 1) return 0.0;
  size_t first = rows.size() > static_cast<size_t>(window) + 1
                     ? rows.size() - window - 1
                     : 0;
  double worst = 0.0;
  for (size_t i = first + 1; i < rows.size(); ++i) {
    double a = static_cast<double>(rows[i - 1].count_gamma) / rows[i - 1].total;
    double b = static_cast<double>(rows[i].count_gamma) / rows[i].total;
    double d = b > a ? b - a : a - b;
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace numset::enumerate
