#include "numset/young.hpp"

#include <algorithm>
#include <stdexcept>

namespace numset {

YoungDiagram::YoungDiagram(std::vector<int> rows) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) throw std::invalid_argument("row lengths must be >= 1");
    if (i > 0 && rows[i] > rows[i - 1])
      throw std::invalid_argument("rows must weakly decrease");
  }
  rows_ = std::move(rows);
}

long long YoungDiagram::boxes() const {
  long long n = 0;
  for (int r : rows_) n += r;
  return n;
}

std::vector<int> YoungDiagram::conjugate() const {
  std::vector<int> cols(static_cast<size_t>(width()), 0);
  for (int r : rows_)
    for (int j = 0; j < r; ++j) ++cols[j];
  return cols;
}

YoungDiagram diagram_of(const NumericalSet& s) {
  // Row for the j-th smallest gap (j = 1..g) has length g_j - (j-1); emit in
  // decreasing gap order.
  const auto& gaps = s.gaps();
  std::vector<int> rows;
  rows.reserve(gaps.size());
  for (size_t j = gaps.size(); j-- > 0;)
    rows.push_back(gaps[j] - static_cast<int>(j));
  return YoungDiagram(std::move(rows));
}

NumericalSet set_of(const YoungDiagram& d) {
  // Inverse of diagram_of: gap g_j = row_{k+1-j} + (j-1).
  const auto& rows = d.rows();
  int k = d.row_count();
  std::vector<int> gaps(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) gaps[j - 1] = rows[k - j] + (j - 1);
  return NumericalSet::from_gaps(std::move(gaps));
}

HookField hook_field(const YoungDiagram& d) {
  auto cols = d.conjugate();
  HookField hf;
  hf.hooks.reserve(d.rows().size());
  for (size_t i = 0; i < d.rows().size(); ++i) {
    std::vector<int> row(static_cast<size_t>(d.rows()[i]));
    for (size_t j = 0; j < row.size(); ++j)
      row[j] = d.rows()[i] + cols[j] - static_cast<int>(i) -
               static_cast<int>(j) - 1;
    hf.hooks.push_back(std::move(row));
  }
  return hf;
}

std::vector<int> hook_multiset(const YoungDiagram& d) {
  std::vector<int> out;
  for (const auto& row : hook_field(d).hooks)
    out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> hook_set(const YoungDiagram& d) {
  auto out = hook_multiset(d);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int c1(const YoungDiagram& d) {
  int distinct = 0;
  const auto& rows = d.rows();
  for (size_t i = 0; i < rows.size(); ++i)
    if (i == 0 || rows[i] != rows[i - 1]) ++distinct;
  return distinct;
}

YoungDiagram complement_diagram(const YoungDiagram& d) {
  const auto& rows = d.rows();
  int w = d.width();
  std::vector<int> out;
  for (size_t i = rows.size(); i-- > 0;) {
    int len = w - rows[i];
    if (len > 0) out.push_back(len);
  }
  return YoungDiagram(std::move(out));
}

}  // namespace numset
