#include "tlweyl/render.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace tlweyl {

namespace {

// Nesting depth of arcs: innermost arcs are 1, an arc is one deeper than the
// deepest arc it encloses.  Endpoint labels 1..m.
std::vector<int> arc_depths(const std::vector<Reflection>& arcs) {
  std::vector<int> depth(arcs.size(), 1);
  // Relax until stable; nesting chains are at most (points)/2 long.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t x = 0; x < arcs.size(); ++x)
      for (size_t y = 0; y < arcs.size(); ++y)
        if (arcs[y].a < arcs[x].a && arcs[x].b < arcs[y].b &&
            depth[y] < depth[x] + 1) {
          depth[y] = depth[x] + 1;
          changed = true;
        }
  }
  return depth;
}

struct Jog {
  int from_col;  // top column
  int to_col;    // bottom column
  int row = 0;   // assigned middle row, 1-based
};

}  // namespace

std::string render_text(const TLDiagram& d) {
  const int m = d.points();
  const int spacing = 4;
  auto col = [&](int label) { return (label - 1) * spacing; };
  const int width = col(m) + 2;

  std::vector<Reflection> tops = d.top_arcs(), bottoms = d.bottom_arcs();
  std::vector<int> top_depth = arc_depths(tops), bottom_depth = arc_depths(bottoms);
  int dt = 0, db = 0;
  for (int v : top_depth) dt = std::max(dt, v);
  for (int v : bottom_depth) db = std::max(db, v);

  std::vector<Jog> jogs;
  std::vector<int> straight;  // columns of vertical through strands
  for (auto [t, b] : d.through_strands()) {
    if (t == b) straight.push_back(col(t));
    else jogs.push_back({col(t), col(b), 0});
  }
  // Left-moving jogs from the left inward, then right-moving from the right
  // inward: this keeps every horizontal clear of every other strand's
  // vertical (same-direction spans nest with the travel order, opposite
  // directions never overlap in a planar diagram).
  std::stable_sort(jogs.begin(), jogs.end(), [](const Jog& x, const Jog& y) {
    bool xl = x.to_col < x.from_col, yl = y.to_col < y.from_col;
    if (xl != yl) return xl;
    return xl ? x.from_col < y.from_col : x.from_col > y.from_col;
  });
  for (size_t i = 0; i < jogs.size(); ++i) jogs[i].row = static_cast<int>(i) + 1;
  const int mid = std::max<int>(1, static_cast<int>(jogs.size()));

  const int rows = 1 + dt + mid + db + 1;
  std::vector<std::vector<std::string>> grid(rows,
                                             std::vector<std::string>(width, " "));
  auto put = [&](int r, int c, const char* s) { grid[r][c] = s; };
  auto hline = [&](int r, int c1, int c2) {
    for (int c = c1 + 1; c < c2; ++c) put(r, c, "─");
  };

  for (int k = 1; k <= m; ++k) {
    std::string lbl = std::to_string(k);
    for (size_t i = 0; i < lbl.size(); ++i) {
      grid[0][col(k) + i] = std::string(1, lbl[i]);
      grid[rows - 1][col(k) + i] = std::string(1, lbl[i]);
    }
  }

  const int top0 = 1;             // first row of the top arc region
  const int mid0 = 1 + dt;        // first middle row
  const int bot0 = 1 + dt + mid;  // first bottom-region row

  for (size_t i = 0; i < tops.size(); ++i) {
    int r = top0 + top_depth[i] - 1;
    int ca = col(tops[i].a), cb = col(tops[i].b);
    for (int rr = top0; rr < r; ++rr) {
      put(rr, ca, "│");
      put(rr, cb, "│");
    }
    put(r, ca, "╰");
    put(r, cb, "╯");
    hline(r, ca, cb);
  }
  for (size_t i = 0; i < bottoms.size(); ++i) {
    // Depth grows upward from the bottom labels.
    int r = bot0 + db - bottom_depth[i];
    int ca = col(bottoms[i].a), cb = col(bottoms[i].b);
    put(r, ca, "╭");
    put(r, cb, "╮");
    hline(r, ca, cb);
    for (int rr = r + 1; rr < rows - 1; ++rr) {
      put(rr, ca, "│");
      put(rr, cb, "│");
    }
  }
  for (int c : straight)
    for (int rr = top0; rr < rows - 1; ++rr) put(rr, c, "│");
  for (const Jog& j : jogs) {
    int r = mid0 + j.row - 1;
    for (int rr = top0; rr < r; ++rr) put(rr, j.from_col, "│");
    for (int rr = r + 1; rr < rows - 1; ++rr) put(rr, j.to_col, "│");
    if (j.from_col < j.to_col) {
      put(r, j.from_col, "╰");
      put(r, j.to_col, "╮");
      hline(r, j.from_col, j.to_col);
    } else {
      put(r, j.to_col, "╭");
      put(r, j.from_col, "╯");
      hline(r, j.to_col, j.from_col);
    }
  }

  std::string out;
  for (int r = 0; r < rows; ++r) {
    std::string line;
    for (int c = 0; c < width; ++c) line += grid[r][c];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_svg(const TLDiagram& d) {
  const int m = d.points();
  const int spacing = 40, margin = 20, height = 120;
  auto x = [&](int label) { return margin + (label - 1) * spacing; };
  const int y_top = margin, y_bot = margin + height;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << 2 * margin + (m - 1) * spacing << "\" height=\"" << y_bot + margin
      << "\">\n";
  svg << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const Reflection& arc : d.top_arcs()) {
    int r = (x(arc.b) - x(arc.a)) / 2;
    // sweep flag 0 bulges toward positive y (downward, into the box)
    svg << "    <path d=\"M " << x(arc.a) << " " << y_top << " A " << r << " "
        << r << " 0 0 0 " << x(arc.b) << " " << y_top << "\"/>\n";
  }
  for (const Reflection& arc : d.bottom_arcs()) {
    int r = (x(arc.b) - x(arc.a)) / 2;
    svg << "    <path d=\"M " << x(arc.a) << " " << y_bot << " A " << r << " "
        << r << " 0 0 1 " << x(arc.b) << " " << y_bot << "\"/>\n";
  }
  for (auto [t, b] : d.through_strands())
    svg << "    <line x1=\"" << x(t) << "\" y1=\"" << y_top << "\" x2=\""
        << x(b) << "\" y2=\"" << y_bot << "\"/>\n";
  svg << "  </g>\n  <g fill=\"black\">\n";
  for (int k = 1; k <= m; ++k) {
    svg << "    <circle cx=\"" << x(k) << "\" cy=\"" << y_top << "\" r=\"3\"/>\n";
    svg << "    <circle cx=\"" << x(k) << "\" cy=\"" << y_bot << "\" r=\"3\"/>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

std::string render_tikz(const TLDiagram& d) {
  const int m = d.points();
  auto x = [&](int label) { return (label - 1); };
  std::ostringstream tikz;
  tikz << "\\begin{tikzpicture}[scale=0.8, every node/.style={font=\\small}]\n";
  for (int k = 1; k <= m; ++k) {
    tikz << "  \\filldraw (" << x(k) << ",3) circle (2pt) node[above=2pt] {"
         << k << "};\n";
    tikz << "  \\filldraw (" << x(k) << ",0) circle (2pt) node[below=2pt] {"
         << k << "};\n";
  }
  for (const Reflection& arc : d.top_arcs())
    tikz << "  \\draw (" << x(arc.a) << ",3) to[out=-90,in=-90] (" << x(arc.b)
         << ",3);\n";
  for (const Reflection& arc : d.bottom_arcs())
    tikz << "  \\draw (" << x(arc.a) << ",0) to[out=90,in=90] (" << x(arc.b)
         << ",0);\n";
  for (auto [t, b] : d.through_strands())
    tikz << "  \\draw (" << x(t) << ",3) -- (" << x(b) << ",0);\n";
  tikz << "\\end{tikzpicture}\n";
  return tikz.str();
}

}  // namespace tlweyl
