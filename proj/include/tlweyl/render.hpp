#ifndef TLWEYL_RENDER_HPP
#define TLWEYL_RENDER_HPP

#include <string>

#include "tlweyl/diagram.hpp"

namespace tlweyl {

// Plain-text picture: labeled points on two rows, box-drawing arcs, vertical
// or jogged through-strands.
std::string render_text(const TLDiagram& d);

// Standalone SVG: points on two horizontal rows with 40-unit spacing, arcs as
// semicircles, through-strands as straight segments.
std::string render_svg(const TLDiagram& d);

// TikZ picture with the same layout.
std::string render_tikz(const TLDiagram& d);

}  // namespace tlweyl

#endif
