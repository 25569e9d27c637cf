#include "numset/numerical_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace numset {

namespace {

// Largest value a gap or listed element may take.  Keeps the dense scratch
// bitmaps below a few hundred kB even for adversarial CLI input.
constexpr int kMaxValue = 1'000'000;

// Membership bitmap for [0, limit].
std::vector<char> membership(const NumericalSet& s, int limit) {
  std::vector<char> in(static_cast<size_t>(limit) + 1, 1);
  for (int g : s.gaps()) {
    if (g > limit) break;
    in[g] = 0;
  }
  return in;
}

[[noreturn]] void parse_fail(const std::string& why) {
  throw std::invalid_argument("parse_set: " + why);
}

int parse_int(std::string_view tok) {
  size_t a = tok.find_first_not_of(" \t");
  size_t b = tok.find_last_not_of(" \t");
  if (a == std::string_view::npos) parse_fail("empty item in list");
  tok = tok.substr(a, b - a + 1);
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    parse_fail("not an integer: '" + std::string(tok) + "'");
  if (v > kMaxValue) parse_fail("value out of range");
  return v;
}

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    out.push_back(parse_int(body.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == body.size()) break;
  }
  return out;
}

}  // namespace

NumericalSet NumericalSet::from_gaps(std::vector<int> gaps) {
  for (size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < 1) throw std::invalid_argument("gap must be positive");
    if (i > 0 && gaps[i] <= gaps[i - 1])
      throw std::invalid_argument("gaps must be strictly increasing");
  }
  NumericalSet s;
  s.gaps_ = std::move(gaps);
  return s;
}

int NumericalSet::multiplicity() const {
  // First positive integer that is not a gap; gaps_ is sorted so the initial
  // run 1,2,...,k of gaps pushes the multiplicity to k+1.
  int m = 1;
  for (int g : gaps_) {
    if (g != m) break;
    ++m;
  }
  return m;
}

std::optional<int> NumericalSet::base() const {
  int f = frobenius();
  if (f < 1) return std::nullopt;
  for (int n = f - 1; n >= 0; --n)
    if (contains(n)) return n;
  return std::nullopt;  // unreachable: 0 is always in S
}

bool NumericalSet::contains(long long n) const {
  if (n < 0) return false;
  if (n > frobenius()) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(n));
}

std::vector<int> NumericalSet::elements_upto(int limit) const {
  std::vector<int> out;
  size_t gi = 0;
  for (int n = 0; n <= limit; ++n) {
    if (gi < gaps_.size() && gaps_[gi] == n) {
      ++gi;
      continue;
    }
    out.push_back(n);
  }
  return out;
}

std::vector<int> NumericalSet::small_elements() const {
  std::vector<int> out;
  for (int e : elements_upto(frobenius() - 1))
    if (e > 0) out.push_back(e);
  return out;
}

SetScalars scalars(const NumericalSet& s) {
  return SetScalars{s.frobenius(), s.genus(), s.multiplicity(), s.base()};
}

bool is_semigroup(const NumericalSet& s) {
  int f = s.frobenius();
  if (f < 1) return true;
  auto in = membership(s, f);
  std::vector<int> elems;
  for (int n = 1; n < f; ++n)
    if (in[n]) elems.push_back(n);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i; j < elems.size(); ++j) {
      int sum = elems[i] + elems[j];
      if (sum > f) break;
      if (!in[sum]) return false;
    }
  return true;
}

NumericalSet associated_semigroup(const NumericalSet& s) {
  int f = s.frobenius();
  if (f < 1) return s;
  auto in = membership(s, f);
  std::vector<int> elems;  // positive elements below f
  for (int n = 1; n < f; ++n)
    if (in[n]) elems.push_back(n);

  // s stays iff every sum s+t with t in S lands back in S; only sums <= f
  // can fail, and elements above f survive automatically.
  std::vector<int> gaps;
  for (int n = 1; n <= f; ++n) {
    if (!in[n]) {
      gaps.push_back(n);
      continue;
    }
    bool keep = true;
    for (int t : elems) {
      if (n + t > f) break;
      if (!in[n + t]) {
        keep = false;
        break;
      }
    }
    if (!keep) gaps.push_back(n);
  }
  return NumericalSet::from_gaps(std::move(gaps));
}

std::vector<int> atoms(const NumericalSet& s) {
  if (!is_semigroup(s))
    throw std::invalid_argument("atoms: set is not a numerical semigroup");
  if (s.is_nat()) return {1};

  // Atoms live in [m, F+m]: anything larger is m plus another element.
  int f = s.frobenius();
  int bound = f + s.multiplicity();
  auto in = membership(s, bound);
  std::vector<int> elems;
  for (int n = 1; n <= bound; ++n)
    if (in[n]) elems.push_back(n);

  std::vector<char> decomposable(static_cast<size_t>(bound) + 1, 0);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i; j < elems.size(); ++j) {
      long long sum = static_cast<long long>(elems[i]) + elems[j];
      if (sum > bound) break;
      decomposable[static_cast<size_t>(sum)] = 1;
    }

  std::vector<int> out;
  for (int e : elems)
    if (!decomposable[e]) out.push_back(e);
  return out;
}

std::vector<int> small_atoms(const NumericalSet& s) {
  std::vector<int> out;
  int f = s.frobenius();
  for (int a : atoms(s))
    if (a < f) out.push_back(a);
  return out;
}

int embedding_dimension(const NumericalSet& s) {
  return static_cast<int>(atoms(s).size());
}

bool max_embedding_dimension(const NumericalSet& s) {
  return embedding_dimension(s) == s.multiplicity();
}

NumericalSet shift_down(const NumericalSet& s) {
  int m = s.multiplicity();
  std::vector<int> gaps;
  for (int g : s.gaps())
    if (g > m) gaps.push_back(g - m);
  return NumericalSet::from_gaps(std::move(gaps));
}

NumericalSet with_tail(const NumericalSet& s, int t) {
  std::vector<int> gaps;
  for (int g : s.gaps())
    if (g < t) gaps.push_back(g);
  return NumericalSet::from_gaps(std::move(gaps));
}

NumericalSet parse_set(std::string_view text) {
  size_t a = text.find_first_not_of(" \t\r\n");
  size_t b = text.find_last_not_of(" \t\r\n");
  if (a == std::string_view::npos) parse_fail("empty input");
  text = text.substr(a, b - a + 1);

  if (text.starts_with("gaps:")) {
    std::string_view body = text.substr(5);
    if (body.find_first_not_of(" \t") == std::string_view::npos)
      return NumericalSet::nat();
    auto gaps = parse_int_list(body);
    for (size_t i = 0; i < gaps.size(); ++i) {
      if (gaps[i] < 1) parse_fail("gaps must be positive");
      if (i > 0 && gaps[i] <= gaps[i - 1])
        parse_fail("gaps must be strictly increasing");
    }
    return NumericalSet::from_gaps(std::move(gaps));
  }

  if (!text.ends_with("->")) parse_fail("element notation must end with '->'");
  auto listed = parse_int_list(text.substr(0, text.size() - 2));
  if (listed.empty() || listed.front() != 0)
    parse_fail("element list must start at 0");
  for (size_t i = 1; i < listed.size(); ++i)
    if (listed[i] <= listed[i - 1])
      parse_fail("elements must be strictly increasing");

  // Gaps are whatever [1, last-1] skips; canonical form then demands that the
  // final listed element is exactly F+1.
  int last = listed.back();
  std::vector<int> gaps;
  size_t li = 0;
  for (int n = 0; n < last; ++n) {
    if (li < listed.size() && listed[li] == n) {
      ++li;
      continue;
    }
    gaps.push_back(n);
  }
  int f = gaps.empty() ? -1 : gaps.back();
  if (last != f + 1)
    parse_fail("last listed element must be F+1 (got " +
               std::to_string(last) + ", expected " + std::to_string(f + 1) +
               ")");
  return NumericalSet::from_gaps(std::move(gaps));
}

std::string format_set(const NumericalSet& s) {
  std::string out;
  for (int e : s.elements_upto(s.frobenius() + 1)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out + "->";
}

std::string format_gap_list(const NumericalSet& s) {
  std::string out = "gaps:";
  bool first = true;
  for (int g : s.gaps()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  return out;
}

}  // namespace numset
