#ifndef TLWEYL_DIAGRAM_HPP
#define TLWEYL_DIAGRAM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tlweyl/reflection.hpp"

namespace tlweyl {

// A planar strand diagram of rank n: a perfect matching of the 2(n+1) points
// T_1..T_{n+1} (top edge, left to right) and B_1..B_{n+1} (bottom edge) that
// can be drawn inside the rectangle without crossings.  Equivalently the
// matching is noncrossing in the boundary cycle T_1..T_{n+1} B_{n+1}..B_1.
//
// Internal encoding: point index p in [0, 2n+1]; top k is p = k-1, bottom k
// is p = n+1 + (k-1).  partner[p] is the matched point.  Comparison is
// lexicographic on the partner vector, giving a canonical total order.
class TLDiagram {
 public:
  // Validates: involution, no fixed point, planar.
  explicit TLDiagram(std::vector<std::uint8_t> partner);

  int rank() const { return static_cast<int>(partner_.size()) / 2 - 1; }
  int points() const { return rank() + 1; }  // per edge

  int top_index(int k) const { return k - 1; }
  int bottom_index(int k) const { return points() + k - 1; }
  bool is_top(int p) const { return p < points(); }
  int label(int p) const { return is_top(p) ? p + 1 : p - points() + 1; }

  int partner(int p) const { return partner_[p]; }
  const std::vector<std::uint8_t>& encoding() const { return partner_; }

  // Arcs with both ends on one edge, as (smaller label, larger label).
  std::vector<Reflection> top_arcs() const;
  std::vector<Reflection> bottom_arcs() const;
  // (top label, bottom label) pairs, sorted by top label.
  std::vector<std::pair<int, int>> through_strands() const;

  std::string to_string() const;  // "T1-T2 T3-B1 B2-B3"

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;

 private:
  std::vector<std::uint8_t> partner_;
};

TLDiagram identity_diagram(int n);
TLDiagram generator_diagram(int i, int n);  // cup/cap at i, i+1

struct DiagramProduct {
  int circles = 0;  // closed loops removed, each worth 1 + tau^{-2}
  TLDiagram diagram;
};

// Concatenation with the LEFT factor drawn on top: bottom edge of `top` is
// glued to the top edge of `bottom`.
DiagramProduct multiply_diagrams(const TLDiagram& top, const TLDiagram& bottom);

// All rank-n diagrams, sorted by canonical encoding.  Catalan(n+1) of them.
std::vector<TLDiagram> enumerate_diagrams(int n);

}  // namespace tlweyl

#endif
