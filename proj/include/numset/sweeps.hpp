// Named verification sweeps: each statement is a property of a single
// numerical set (or semigroup) that is expected to hold everywhere, checked
// here instance by instance over every set with Frobenius number up to a
// bound.  A sweep reports how many instances it covered and lists any
// counterexamples it found; an empty list over the full domain is the point.
//
// Statements and their domains:
//
//   thm3     semigroups           A(comp(S)) has at most one small atom,
//                                 none when S has two or more
//   thm4     sets with comp(S)    A(S) follows the two-shape classification
//            closed               (at most one small atom when S is closed)
//   cor42    semigroups           comp(S) closed iff S has <= 1 small atom
//   prop23   all sets             scalar identities tying F, g, B of comp(S)
//                                 to those of S
//   prop24   all sets             two-condition membership test for the image
//                                 of comp on semigroups, vs exhaustive search
//   prop51   all sets             c1 drops by exactly one under comp
//   cor52    all sets             comp iterates to N in exactly c1(S) steps
//   prop53   all sets, c1 >= 2    A(S) contained in A(S after two steps)
//   prop55   semigroups, c1 >= 2  two steps closed iff S union [B, oo) has
//                                 max embedding dimension
//   cor56    max-ED semigroups,   two steps stay closed
//            c1 >= 2
//   prop57   semigroups           lift scalars and the 2n-step round trip
//   hookgap  all sets             distinct hook lengths = gaps of A(S)
//
// Semigroup domains walk the removal tree sequentially; all-set domains scan
// the 2^(f-1) masks per Frobenius number in contiguous blocks, one thread per
// block, merged in block order, so results are identical at any thread count.
// Sweeps past the 2^25-set budget throw enumerate::BudgetError unless
// explicitly allowed.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace numset::sweeps {

enum class Statement {
  kThm3,
  kThm4,
  kCor42,
  kProp23,
  kProp24,
  kProp51,
  kCor52,
  kProp53,
  kProp55,
  kCor56,
  kProp57,
  kHookGap,
};

// Closed list, in enum order; these are the only tokens the CLI accepts.
const std::vector<std::string>& statement_names();
std::string statement_name(Statement st);
Statement statement_from_name(std::string_view name);  // throws on bad token

struct VerifyReport {
  std::string statement;
  int domain_bound = 0;  // largest Frobenius number swept
  std::int64_t instances_checked = 0;
  std::vector<std::string> counterexamples;  // element notation, scan order,
                                             // capped at 100
  double wall_ms = 0.0;
};

VerifyReport run_statement(Statement st, int max_f, int threads = 1,
                           bool allow_over_budget = false);

// Complement computed by the closed gap formula vs through the diagram, over
// every set with F <= max_f; not a CLI statement, but the acceptance gate
// leans on it.
VerifyReport dual_path_report(int max_f, int threads = 1,
                              bool allow_over_budget = false);

}  // namespace numset::sweeps
