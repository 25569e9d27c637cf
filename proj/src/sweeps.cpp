#include "numset/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "numset/analysis.hpp"
#include "numset/enumerate.hpp"
#include "numset/numerical_set.hpp"
#include "numset/young.hpp"

namespace numset::sweeps {

namespace {

constexpr std::size_t kMaxCounterexamples = 100;

// gate: restricts the domain (null = everything); check: the property itself
struct Descriptor {
  bool semigroup_domain = false;
  std::function<bool(const NumericalSet&)> gate;
  std::function<bool(const NumericalSet&)> check;
};

bool c1_at_least_two(const NumericalSet& s) {
  return c1(diagram_of(s)) >= 2;
}

struct Part {
  std::int64_t checked = 0;
  std::vector<std::string> bad;
};

void run_instance(const NumericalSet& s, const Descriptor& d, Part& out) {
  if (d.gate && !d.gate(s)) return;
  ++out.checked;
  if (!d.check(s) && out.bad.size() < kMaxCounterexamples)
    out.bad.push_back(format_set(s));
}

void scan_block(int f, std::uint64_t lo, std::uint64_t hi, const Descriptor* d,
                Part* out) {
  for (std::uint64_t mask = lo; mask < hi; ++mask)
    run_instance(enumerate::set_from_small_mask(mask, f), *d, *out);
}

void merge_part(VerifyReport& report, const Part& part) {
  report.instances_checked += part.checked;
  for (const auto& text : part.bad)
    if (report.counterexamples.size() < kMaxCounterexamples)
      report.counterexamples.push_back(text);
}

// Contiguous mask blocks per Frobenius number, merged in block order: the
// report is byte-identical at every thread count.
void sweep_all_sets(const Descriptor& d, int max_f, int threads,
                    VerifyReport& report) {
  for (int f = 1; f <= max_f; ++f) {
    const std::uint64_t total = 1ull << (f - 1);
    int nt = threads;
    if (static_cast<std::uint64_t>(nt) * 1024 > total)
      nt = static_cast<int>(std::max<std::uint64_t>(total / 1024, 1));
    if (nt <= 1) {
      Part part;
      scan_block(f, 0, total, &d, &part);
      merge_part(report, part);
      continue;
    }
    std::vector<Part> parts(nt);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) {
      std::uint64_t lo = total / nt * i + std::min<std::uint64_t>(i, total % nt);
      std::uint64_t hi =
          total / nt * (i + 1) + std::min<std::uint64_t>(i + 1, total % nt);
      pool.emplace_back(scan_block, f, lo, hi, &d, &parts[i]);
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) merge_part(report, part);
  }
}

void sweep_semigroups(const Descriptor& d, int max_f, VerifyReport& report) {
  Part part;
  for (int f = 1; f <= max_f; ++f)
    enumerate::for_each_semigroup_frobenius(
        f, [&](const NumericalSet& s) { run_instance(s, d, part); });
  merge_part(report, part);
}

VerifyReport run_descriptor(const Descriptor& d, const std::string& name,
                            int max_f, int threads, bool allow_over_budget) {
  if (max_f < 1) throw std::invalid_argument("verify: max_f must be >= 1");
  int cap = d.semigroup_domain ? 60 : enumerate::kMaxMaskFrobenius;
  if (max_f > cap)
    throw std::invalid_argument("verify: max_f beyond the mask width");
  if (max_f > enumerate::kBudgetFrobenius && !allow_over_budget)
    throw enumerate::BudgetError(
        "verify: max_f " + std::to_string(max_f) +
        " exceeds the default budget of " +
        std::to_string(enumerate::kBudgetFrobenius) +
        "; pass the override to proceed");

  auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.statement = name;
  report.domain_bound = max_f;
  if (d.semigroup_domain)
    sweep_semigroups(d, max_f, report);
  else
    sweep_all_sets(d, max_f, enumerate::resolve_threads(threads), report);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace

const std::vector<std::string>& statement_names() {
  static const std::vector<std::string> names = {
      "thm3",   "thm4",   "cor42",  "prop23", "prop24", "prop51",
      "cor52",  "prop53", "prop55", "cor56",  "prop57", "hookgap"};
  return names;
}

std::string statement_name(Statement st) {
  return statement_names().at(static_cast<std::size_t>(st));
}

Statement statement_from_name(std::string_view name) {
  const auto& names = statement_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Statement>(i);
  throw std::invalid_argument("unknown statement '" + std::string(name) + "'");
}

VerifyReport run_statement(Statement st, int max_f, int threads,
                           bool allow_over_budget) {
  Descriptor d;
  std::vector<NumericalSet> pool;  // prop24 preimage search space
  switch (st) {
    case Statement::kThm3:
      d.semigroup_domain = true;
      d.check = [](const NumericalSet& s) { return check_complement_atoms(s); };
      break;
    case Statement::kThm4:
      d.gate = [](const NumericalSet& s) {
        return numset::is_semigroup(complement(s));
      };
      d.check = [](const NumericalSet& s) { return check_preimage_atoms(s); };
      break;
    case Statement::kCor42:
      d.semigroup_domain = true;
      d.check = [](const NumericalSet& s) {
        return check_complement_closure_iff(s);
      };
      break;
    case Statement::kProp23:
      d.check = [](const NumericalSet& s) { return scalar_identities_hold(s); };
      break;
    case Statement::kProp24:
      if (max_f >= 1 && max_f <= 58)
        for (int f = 1; f <= max_f + 2; ++f)
          enumerate::for_each_semigroup_frobenius(
              f, [&](const NumericalSet& s) { pool.push_back(s); });
      d.check = [p = &pool](const NumericalSet& t) {
        return check_preimage_test(t, *p);
      };
      break;
    case Statement::kProp51:
      d.check = [](const NumericalSet& s) { return check_c1_step(s); };
      break;
    case Statement::kCor52:
      d.check = [](const NumericalSet& s) { return check_sequence_length(s); };
      break;
    case Statement::kProp53:
      d.gate = c1_at_least_two;
      d.check = [](const NumericalSet& s) { return check_assoc_grows(s); };
      break;
    case Statement::kProp55:
      d.semigroup_domain = true;
      d.gate = c1_at_least_two;
      d.check = [](const NumericalSet& s) {
        return check_double_step_closure_iff(s);
      };
      break;
    case Statement::kCor56:
      d.semigroup_domain = true;
      d.gate = [](const NumericalSet& s) {
        return max_embedding_dimension(s) && c1_at_least_two(s);
      };
      d.check = [](const NumericalSet& s) {
        return check_max_ed_double_step(s);
      };
      break;
    case Statement::kProp57:
      d.semigroup_domain = true;
      d.check = [](const NumericalSet& s) { return check_lift_round_trip(s); };
      break;
    case Statement::kHookGap:
      d.check = [](const NumericalSet& s) { return check_hook_gaps(s); };
      break;
  }
  if (st == Statement::kProp24 && max_f > 58)
    throw std::invalid_argument("verify: max_f beyond the mask width");
  return run_descriptor(d, statement_name(st), max_f, threads,
                        allow_over_budget);
}

VerifyReport dual_path_report(int max_f, int threads, bool allow_over_budget) {
  Descriptor d;
  d.check = [](const NumericalSet& s) {
    return complement(s) == complement_via_diagram(s);
  };
  return run_descriptor(d, "dualpath", max_f, threads, allow_over_budget);
}

}  // namespace numset::sweeps
