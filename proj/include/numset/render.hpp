// Fixed-layout renderings of Young diagrams: ASCII for terminals, SVG with
// 20px unit squares.  With `overlay` the full bounding rectangle is drawn and
// the complement region is marked (pink in SVG, dots in ASCII); rotating the
// marked region 180 degrees gives the complement diagram.  Output is
// byte-stable for a given diagram and options.

#pragma once

#include <string>

#include "numset/young.hpp"

namespace numset {

struct RenderOptions {
  bool hooks = false;    // label each box with its hook length
  bool overlay = false;  // draw the bounding rectangle complement as well
};

std::string render_ascii(const YoungDiagram& d, RenderOptions opts = {});
std::string render_svg(const YoungDiagram& d, RenderOptions opts = {});

}  // namespace numset
