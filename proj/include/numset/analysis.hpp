// The complement of a numerical set and the structural statements about it.
//
// Rotating the complement of a Young diagram inside its bounding rectangle by
// 180 degrees yields another Young diagram; pulled through the diagram
// bijection this becomes an operation on numerical sets with a closed form:
//
//   comp(S) = { B(S) - s : s in S, s <= B(S) } union [B(S), oo).
//
// comp(N) is undefined (N has no base) and throws std::domain_error.
//
// Facts verified here, each with an exhaustive sweep counterpart in
// sweeps.hpp:
//
//   * scalar identities:  F(comp) <= B-1 <= F-2 with F(comp) = B-1 iff
//     1 is not in S;  g(comp) = g + B - F;  B(comp) <= B - m with equality
//     iff 1 is not in S (the base clause is vacuous when comp(S) = N).
//   * T is the complement of some semigroup iff F(T) is not a sum of two
//     elements of T and every pair x,y <= F(T) in T with x+y > F(T) has
//     x+y-F(T)-1 in T; in that case an explicit witness with F = F(T)+2 and
//     B = F(T)+1 works.
//   * if S is a semigroup, A(comp(S)) has at most one small atom, and none
//     when S has more than one small atom.
//   * if comp(S) is a semigroup, A(S) has at most one small atom; when S is
//     not itself a semigroup, A(S) is {0, F+1 ->} if S meets [1, F-B] and
//     {0, B, F+1 ->} otherwise.
//   * for a semigroup S, comp(S) is a semigroup iff S has at most one small
//     atom.
//   * iterating comp reaches N in exactly c1(S) steps, losing one distinct
//     row length per step; A(S) sits inside A(S after two steps); for a
//     semigroup, two steps stay a semigroup iff S union [B, oo) has maximal
//     embedding dimension; lifting inverts two steps.

#pragma once

#include <vector>

#include "numset/numerical_set.hpp"
#include "numset/young.hpp"

namespace numset {

NumericalSet complement(const NumericalSet& s);

// Same value via diagram_of / complement_diagram / set_of; used to cross
// check the closed form.
NumericalSet complement_via_diagram(const NumericalSet& s);

struct ComplementReport {
  NumericalSet original;
  NumericalSet comp;
  SetScalars original_scalars;
  SetScalars comp_scalars;
  int delta_genus;        // g(comp) - g(S), always B - F
  bool base_bound_tight;  // F(comp) == B(S) - 1
};

// Computes the report and asserts the scalar identities (std::logic_error on
// violation, which would mean a library bug).
ComplementReport complement_report(const NumericalSet& s);
bool scalar_identities_hold(const NumericalSet& s);  // the prop23 check

// The two-condition test for "T = comp(some semigroup)"; throws
// std::domain_error for N.
bool is_semigroup_complement(const NumericalSet& t);

// Explicit preimage semigroup with F = F(T)+2, B = F(T)+1; throws
// std::invalid_argument unless is_semigroup_complement(t).
NumericalSet witness_semigroup(const NumericalSet& t);

// -- statement checkers (used by the sweeps; each returns true when the
//    statement holds for the given instance) --------------------------------

// S a semigroup != N: A(comp(S)) has <= 1 small atom, and 0 when S has > 1.
bool check_complement_atoms(const NumericalSet& s);

// comp(S) a semigroup: A(S) has <= 1 small atom; if S is not a semigroup,
// A(S) matches the two-shape classification above.
bool check_preimage_atoms(const NumericalSet& s);

// S a semigroup != N: comp(S) closed iff S has <= 1 small atom.
bool check_complement_closure_iff(const NumericalSet& s);

// S != N: c1 drops by exactly one under comp.
bool check_c1_step(const NumericalSet& s);

// any S: iterating comp hits N after exactly c1(S) steps.
bool check_sequence_length(const NumericalSet& s);

// c1(S) >= 2: A(S) is contained in A(S after two steps).
bool check_assoc_grows(const NumericalSet& s);

// S a semigroup with c1 >= 2: two steps closed iff S union [B, oo) has
// maximal embedding dimension.
bool check_double_step_closure_iff(const NumericalSet& s);

// S a max-embedding-dimension semigroup with c1 >= 2: two steps stay closed.
bool check_max_ed_double_step(const NumericalSet& s);

// S a semigroup != N: lift identities and the 2n-step round trip, n = 1, 2.
bool check_lift_round_trip(const NumericalSet& s);

// any S: distinct hooks of diagram_of(S) = gaps of A(S).
bool check_hook_gaps(const NumericalSet& s);

// exhaustive search counterpart of is_semigroup_complement: scans all
// semigroups with F <= F(T)+2 (any preimage forces B = F(T)+1, so larger F
// never adds preimages the standard witness would miss).
bool check_preimage_test(const NumericalSet& t,
                         const std::vector<NumericalSet>& semigroup_pool);

// ---------------------------------------------------------------------------

struct ComplementSequence {
  std::vector<NumericalSet> terms;  // S, comp(S), ..., N
  int length;                       // number of comp applications = c1(S)
};

// Iterates comp until N; asserts the c1 countdown and strict genus descent.
ComplementSequence complement_sequence(const NumericalSet& s);

// One lift step maps a semigroup S != N to
//   {0} union (m + S) minus {F + 2m},    m = m(S), F = F(S),
// again a semigroup, with m(T) = m, F(T) = F + 2m, B(T) = F + 2m - 1 and
// T back to S after two complement steps.  lift(s, n) applies n steps.
NumericalSet lift(const NumericalSet& s, int n = 1);

// How a set sits relative to its associated semigroup: counts of small
// elements of S and of small atoms of A(S), plus a coarse shape tag.
enum class AtomShape {
  kNoSmall,               // S has no elements strictly between 0 and F
  kOneSmallAtom,          // A(S) = mN union [F+1, oo)
  kZeroAtomsOneElement,   // lone small element of S, absorbed away in A(S)
  kOther,
};

struct AtomProfile {
  int small_element_count;  // of S
  int small_atom_count;     // of A(S)
  AtomShape shape;
};

AtomProfile atom_profile(const NumericalSet& s);
const char* atom_shape_name(AtomShape shape);

}  // namespace numset
