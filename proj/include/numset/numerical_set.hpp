// Numerical sets: cofinite subsets of N that contain 0.
//
// A numerical set is stored canonically by its gap set, the finite list of
// positive integers missing from it.  Everything else reads off the gaps:
//
//   frobenius F(S)  largest gap, -1 when S = N
//   genus g(S)      number of gaps
//   multiplicity    smallest nonzero element of S
//   base B(S)       largest element below F(S); only defined when F(S) >= 1
//
// A numerical set closed under addition is a numerical semigroup.  Inside an
// arbitrary numerical set sits its associated semigroup
//
//   A(S) = { s in S : s + S is contained in S },
//
// the largest semigroup contained in S with the same Frobenius number.  Atoms
// (minimal generators) are the positive elements of a semigroup that are not
// sums of two positive elements; "small" atoms/elements are those below F(S).

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace numset {

class NumericalSet {
 public:
  NumericalSet() = default;  // N itself: no gaps

  // Throws std::invalid_argument unless gaps is strictly increasing and >= 1.
  static NumericalSet from_gaps(std::vector<int> gaps);
  static NumericalSet nat() { return NumericalSet{}; }

  const std::vector<int>& gaps() const { return gaps_; }
  bool is_nat() const { return gaps_.empty(); }

  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  int genus() const { return static_cast<int>(gaps_.size()); }
  int multiplicity() const;
  std::optional<int> base() const;

  bool contains(long long n) const;
  std::vector<int> elements_upto(int limit) const;  // S intersect [0, limit]
  std::vector<int> small_elements() const;          // S intersect [1, F-1]

  friend bool operator==(const NumericalSet&, const NumericalSet&) = default;
  friend auto operator<=>(const NumericalSet&, const NumericalSet&) = default;

 private:
  std::vector<int> gaps_;  // sorted, distinct, all >= 1
};

struct SetScalars {
  int frobenius;
  int genus;
  int multiplicity;
  std::optional<int> base;  // absent when F(S) <= 0
};

SetScalars scalars(const NumericalSet& s);

// True iff s + t lands in S for all positive s, t in S (only sums <= F(S)
// can fail).  N and {0, F+1 ->} are trivially closed.
bool is_semigroup(const NumericalSet& s);

// A(S); shares the Frobenius number of S, and A(S) = S iff S is a semigroup.
NumericalSet associated_semigroup(const NumericalSet& s);

// Minimal generators of a numerical semigroup, sorted.  Every atom lies in
// [m(S), F(S)+m(S)].  Throws std::invalid_argument if s is not a semigroup.
std::vector<int> atoms(const NumericalSet& s);
std::vector<int> small_atoms(const NumericalSet& s);  // atoms below F(S)
int embedding_dimension(const NumericalSet& s);       // = atoms(s).size()

// True iff the embedding dimension reaches its ceiling m(S).  Equivalent to
// shift_down(s) being a semigroup.
bool max_embedding_dimension(const NumericalSet& s);

// { x - m(S) : x in S, x > 0 }; maps N to N.
NumericalSet shift_down(const NumericalSet& s);

// S union [t, oo); keeps only the gaps below t.
NumericalSet with_tail(const NumericalSet& s, int t);

// Text forms.  Element notation lists S up to F(S)+1 and ends with "->",
// e.g. "0,2,4,7,8,10,12->"; the final listed element must be F(S)+1 and the
// arrow is mandatory (N is "0->").  Gap notation is "gaps:1,3,5,6,9,11"
// ("gaps:" alone is N).  parse_set accepts both; errors throw
// std::invalid_argument.
NumericalSet parse_set(std::string_view text);
std::string format_set(const NumericalSet& s);
std::string format_gap_list(const NumericalSet& s);

}  // namespace numset
