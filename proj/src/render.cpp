#include "numset/render.hpp"

#include <string>

namespace numset {

namespace {

constexpr int kCell = 20;  // px per unit square
constexpr const char* kPink = "#FFC0CB";

int digits(int n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

std::string pad_left(const std::string& s, size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

}  // namespace

std::string render_ascii(const YoungDiagram& d, RenderOptions opts) {
  if (d.empty()) return "(empty diagram)\n";

  const auto& rows = d.rows();
  int w = d.width();
  HookField hf;
  size_t cell_w = 1;
  if (opts.hooks) {
    hf = hook_field(d);
    cell_w = static_cast<size_t>(digits(hf.hooks[0][0]));  // max hook is at (0,0)
  }

  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    int len = rows[i];
    int cols = opts.overlay ? w : len;
    for (int j = 0; j < cols; ++j) {
      if (opts.hooks) {
        if (j) out += ' ';
        out += pad_left(j < len ? std::to_string(hf.hooks[i][j]) : ".", cell_w);
      } else {
        out += j < len ? '#' : '.';
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const YoungDiagram& d, RenderOptions opts) {
  const auto& rows = d.rows();
  int w = d.width();
  int k = d.row_count();

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(w * kCell) + "\" height=\"" +
                    std::to_string(k * kCell) + "\">\n";

  auto rect = [&](int i, int j, const char* fill) {
    out += "<rect x=\"" + std::to_string(j * kCell) + "\" y=\"" +
           std::to_string(i * kCell) + "\" width=\"" + std::to_string(kCell) +
           "\" height=\"" + std::to_string(kCell) + "\" fill=\"" + fill +
           "\" stroke=\"#000000\"/>\n";
  };

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < rows[i]; ++j) rect(i, j, "#ffffff");
  if (opts.overlay)
    for (int i = 0; i < k; ++i)
      for (int j = rows[i]; j < w; ++j) rect(i, j, kPink);

  if (opts.hooks) {
    auto hf = hook_field(d);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < rows[i]; ++j)
        out += "<text x=\"" + std::to_string(j * kCell + kCell / 2) +
               "\" y=\"" + std::to_string(i * kCell + 14) +
               "\" font-family=\"monospace\" font-size=\"10\" "
               "text-anchor=\"middle\">" +
               std::to_string(hf.hooks[i][j]) + "</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace numset
