#include "numset/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace numset {

namespace {

[[noreturn]] void bug(const char* what) {
  throw std::logic_error(std::string("internal invariant violated: ") + what);
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int count_small_atoms(const NumericalSet& semigroup) {
  return static_cast<int>(small_atoms(semigroup).size());
}

}  // namespace

NumericalSet complement(const NumericalSet& s) {
  if (s.is_nat())
    throw std::domain_error("complement: N has no base, complement undefined");
  int b = *s.base();
  // n < B lies in comp(S) iff B - n lies in S, so the gaps of comp(S) are
  // B - g for the gaps g of S below B.
  std::vector<int> gaps;
  const auto& sg = s.gaps();
  for (size_t i = sg.size(); i-- > 0;)
    if (sg[i] < b) gaps.push_back(b - sg[i]);
  return NumericalSet::from_gaps(std::move(gaps));
}

NumericalSet complement_via_diagram(const NumericalSet& s) {
  return set_of(complement_diagram(diagram_of(s)));
}

bool scalar_identities_hold(const NumericalSet& s) {
  auto comp = complement(s);
  int f = s.frobenius();
  int b = *s.base();
  int m = s.multiplicity();
  bool one_absent = !s.contains(1);

  if (!(comp.frobenius() <= b - 1 && b - 1 <= f - 2)) return false;
  if ((comp.frobenius() == b - 1) != one_absent) return false;
  if (comp.genus() != s.genus() + b - f) return false;
  if (!comp.is_nat()) {
    int bc = *comp.base();
    if (!(bc <= b - m)) return false;
    if ((bc == b - m) != one_absent) return false;
  }
  return true;
}

ComplementReport complement_report(const NumericalSet& s) {
  auto comp = complement(s);
  if (!scalar_identities_hold(s)) bug("complement scalar identities");
  ComplementReport r;
  r.original = s;
  r.comp = comp;
  r.original_scalars = scalars(s);
  r.comp_scalars = scalars(comp);
  r.delta_genus = comp.genus() - s.genus();
  r.base_bound_tight = comp.frobenius() == *s.base() - 1;
  return r;
}

bool is_semigroup_complement(const NumericalSet& t) {
  if (t.is_nat())
    throw std::domain_error("is_semigroup_complement: undefined for N");
  int f = t.frobenius();
  auto elems = t.elements_upto(f);  // T intersect [0, F], includes 0

  // (a) F(T) must not split as x + y with x, y in T.
  for (int x : elems)
    if (x + x <= f && t.contains(f - x)) return false;

  // (b) pairs that overshoot F must land back in T after the F+1 shift.
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i; j < elems.size(); ++j) {
      int sum = elems[i] + elems[j];
      if (sum > f && !t.contains(sum - f - 1)) return false;
    }
  return true;
}

NumericalSet witness_semigroup(const NumericalSet& t) {
  require(is_semigroup_complement(t),
          "witness_semigroup: set fails the complement test");
  int f = t.frobenius();
  // S = { F+1-x : x in T, x <= F+1 } union [F+3, oo); reflecting T's head
  // across (F+1)/2 makes B(S) = F+1 and leaves F+2 as the Frobenius number.
  std::vector<int> gaps;
  for (int n = 1; n <= f + 2; ++n)
    if (n == f + 2 || !t.contains(f + 1 - n)) gaps.push_back(n);
  auto s = NumericalSet::from_gaps(std::move(gaps));

  if (!is_semigroup(s)) bug("witness is not closed");
  if (s.frobenius() != f + 2) bug("witness Frobenius");
  if (*s.base() != f + 1) bug("witness base");
  if (complement(s) != t) bug("witness complement");
  return s;
}

// ---------------------------------------------------------------------------
// statement checkers
// ---------------------------------------------------------------------------

bool check_complement_atoms(const NumericalSet& s) {
  require(is_semigroup(s) && !s.is_nat(),
          "check_complement_atoms: needs a semigroup != N");
  int own = count_small_atoms(s);
  int comp_atoms = count_small_atoms(associated_semigroup(complement(s)));
  if (comp_atoms > 1) return false;
  if (own > 1 && comp_atoms != 0) return false;
  return true;
}

bool check_preimage_atoms(const NumericalSet& s) {
  require(!s.is_nat(), "check_preimage_atoms: needs S != N");
  require(is_semigroup(complement(s)),
          "check_preimage_atoms: needs comp(S) closed");
  auto assoc = associated_semigroup(s);
  if (count_small_atoms(assoc) > 1) return false;
  if (is_semigroup(s)) return true;

  // S not closed: A(S) collapses to one of two shapes, decided by whether S
  // meets [1, F-B] (any such element pushes B out of A(S)).
  if (static_cast<int>(assoc.small_elements().size()) > 1) return false;
  int f = s.frobenius();
  int b = *s.base();
  bool meets = false;
  for (int e = 1; e <= f - b && !meets; ++e)
    if (s.contains(e)) meets = true;

  std::vector<int> want;  // expected gap list of A(S)
  for (int n = 1; n <= f; ++n)
    if (meets || n != b) want.push_back(n);
  return assoc.gaps() == want;
}

bool check_complement_closure_iff(const NumericalSet& s) {
  require(is_semigroup(s) && !s.is_nat(),
          "check_complement_closure_iff: needs a semigroup != N");
  return is_semigroup(complement(s)) == (count_small_atoms(s) <= 1);
}

bool check_c1_step(const NumericalSet& s) {
  require(!s.is_nat(), "check_c1_step: needs S != N");
  return c1(diagram_of(complement(s))) == c1(diagram_of(s)) - 1;
}

bool check_sequence_length(const NumericalSet& s) {
  int steps = 0;
  NumericalSet cur = s;
  while (!cur.is_nat()) {
    if (steps > s.genus()) return false;  // genus strictly descends
    cur = complement(cur);
    ++steps;
  }
  return steps == c1(diagram_of(s));
}

bool check_assoc_grows(const NumericalSet& s) {
  require(c1(diagram_of(s)) >= 2, "check_assoc_grows: needs c1 >= 2");
  // A(S) inside A(S'') <=> gaps of A(S'') inside gaps of A(S)
  auto assoc = associated_semigroup(s);
  auto assoc_twice = associated_semigroup(complement(complement(s)));
  const auto& big = assoc.gaps();
  for (int g : assoc_twice.gaps())
    if (!std::binary_search(big.begin(), big.end(), g)) return false;
  return true;
}

bool check_double_step_closure_iff(const NumericalSet& s) {
  require(is_semigroup(s), "check_double_step_closure_iff: needs a semigroup");
  require(c1(diagram_of(s)) >= 2, "check_double_step_closure_iff: needs c1 >= 2");
  bool closed_twice = is_semigroup(complement(complement(s)));
  return closed_twice == max_embedding_dimension(with_tail(s, *s.base()));
}

bool check_max_ed_double_step(const NumericalSet& s) {
  require(is_semigroup(s) && max_embedding_dimension(s),
          "check_max_ed_double_step: needs a max-e.d. semigroup");
  require(c1(diagram_of(s)) >= 2, "check_max_ed_double_step: needs c1 >= 2");
  return is_semigroup(complement(complement(s)));
}

bool check_lift_round_trip(const NumericalSet& s) {
  require(is_semigroup(s) && !s.is_nat(),
          "check_lift_round_trip: needs a semigroup != N");
  for (int n = 1; n <= 2; ++n) {
    NumericalSet cur = lift(s, n);
    for (int step = 0; step < 2 * n; ++step) {
      if (cur.is_nat()) return false;  // ran out before 2n steps
      cur = complement(cur);
    }
    if (cur != s) return false;
  }
  return true;
}

bool check_hook_gaps(const NumericalSet& s) {
  return hook_set(diagram_of(s)) == associated_semigroup(s).gaps();
}

bool check_preimage_test(const NumericalSet& t,
                         const std::vector<NumericalSet>& semigroup_pool) {
  bool predicted = is_semigroup_complement(t);
  bool found = false;
  for (const auto& sg : semigroup_pool) {
    if (sg.frobenius() > t.frobenius() + 2) continue;
    if (complement(sg) == t) {
      found = true;
      break;
    }
  }
  if (predicted != found) return false;
  if (predicted) (void)witness_semigroup(t);  // runs its own postcondition checks
  return true;
}

// ---------------------------------------------------------------------------
// sequences, lift, atom profile
// ---------------------------------------------------------------------------

ComplementSequence complement_sequence(const NumericalSet& s) {
  ComplementSequence seq;
  seq.terms.push_back(s);
  while (!seq.terms.back().is_nat()) {
    if (static_cast<int>(seq.terms.size()) > s.genus() + 1)
      bug("complement sequence failed to terminate");
    seq.terms.push_back(complement(seq.terms.back()));
  }
  seq.length = static_cast<int>(seq.terms.size()) - 1;

  if (seq.length != c1(diagram_of(s))) bug("sequence length != c1");
  for (size_t i = 0; i + 1 < seq.terms.size(); ++i) {
    if (c1(diagram_of(seq.terms[i + 1])) != c1(diagram_of(seq.terms[i])) - 1)
      bug("c1 did not step down");
    if (seq.terms[i + 1].genus() >= seq.terms[i].genus())
      bug("genus did not descend");
  }
  return seq;
}

NumericalSet lift(const NumericalSet& s, int n) {
  require(n >= 1, "lift: n must be >= 1");
  require(is_semigroup(s) && !s.is_nat(), "lift: needs a semigroup != N");

  NumericalSet cur = s;
  for (int step = 0; step < n; ++step) {
    int m = cur.multiplicity();
    int f = cur.frobenius();
    // T = {0} union (m + S) minus {F + 2m}: new gaps are the slots below m,
    // every old gap shifted up by m, and the removed element.
    std::vector<int> gaps;
    for (int i = 1; i < m; ++i) gaps.push_back(i);
    for (int g : cur.gaps()) gaps.push_back(g + m);
    gaps.push_back(f + 2 * m);
    auto lifted = NumericalSet::from_gaps(std::move(gaps));

    if (!is_semigroup(lifted)) bug("lift left the semigroup world");
    if (lifted.multiplicity() != m) bug("lift multiplicity");
    if (lifted.frobenius() != f + 2 * m) bug("lift Frobenius");
    if (*lifted.base() != f + 2 * m - 1) bug("lift base");
    cur = lifted;
  }
  return cur;
}

AtomProfile atom_profile(const NumericalSet& s) {
  AtomProfile p;
  p.small_element_count = static_cast<int>(s.small_elements().size());
  p.small_atom_count = count_small_atoms(associated_semigroup(s));
  if (p.small_element_count == 0)
    p.shape = AtomShape::kNoSmall;
  else if (p.small_atom_count == 0 && p.small_element_count == 1)
    p.shape = AtomShape::kZeroAtomsOneElement;
  else if (p.small_atom_count == 1)
    p.shape = AtomShape::kOneSmallAtom;
  else
    p.shape = AtomShape::kOther;
  return p;
}

const char* atom_shape_name(AtomShape shape) {
  switch (shape) {
    case AtomShape::kNoSmall: return "no_small";
    case AtomShape::kOneSmallAtom: return "one_small_atom";
    case AtomShape::kZeroAtomsOneElement: return "zero_atoms_one_element";
    case AtomShape::kOther: return "other";
  }
  return "?";
}

}  // namespace numset
