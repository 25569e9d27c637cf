// Young diagrams and the bijection with numerical sets.
//
// Walk the profile of a numerical set from its Frobenius number down to 0,
// one unit step per integer: a step for each gap, a step for each element.
// Reading the staircase as a Young diagram gives, for the j-th smallest gap
// g_j, a row of length g_j - (j-1) = #{ s in S : s < g_j }; rows are listed
// top to bottom for gaps in decreasing order, so they weakly decrease.  The
// map is a bijection between numerical sets and partitions ({} <-> N).
//
// Hook lengths are the usual hook(i,j) = r_i + c_j - i - j + 1 with c the
// conjugate partition.  The set of distinct hook lengths of diagram_of(S)
// equals the gap set of A(S).
//
// The complement diagram is the 180-degree rotation of what is left of the
// bounding r_1 x k rectangle after removing the diagram.

#pragma once

#include <compare>
#include <vector>

#include "numset/numerical_set.hpp"

namespace numset {

class YoungDiagram {
 public:
  YoungDiagram() = default;  // empty diagram

  // Throws std::invalid_argument unless rows weakly decrease and are >= 1.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int width() const { return rows_.empty() ? 0 : rows_.front(); }
  long long boxes() const;
  std::vector<int> conjugate() const;  // column lengths

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

YoungDiagram diagram_of(const NumericalSet& s);
NumericalSet set_of(const YoungDiagram& d);

// hooks[i][j] for box (i,j), zero-based, row-major.
struct HookField {
  std::vector<std::vector<int>> hooks;
};

HookField hook_field(const YoungDiagram& d);
std::vector<int> hook_set(const YoungDiagram& d);       // distinct, sorted
std::vector<int> hook_multiset(const YoungDiagram& d);  // sorted

// Number of boxes with hook length 1 = number of distinct row lengths.
int c1(const YoungDiagram& d);

// Rows r_1 - r_k, r_1 - r_{k-1}, ..., with zeros dropped; empty input maps
// to empty output.
YoungDiagram complement_diagram(const YoungDiagram& d);

}  // namespace numset
