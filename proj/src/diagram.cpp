#include "tlweyl/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "tlweyl/errors.hpp"

namespace tlweyl {

namespace {

// Boundary cycle: top 1..n+1 left to right, then bottom n+1..1 right to
// left.  A matching is planar iff it is noncrossing in this cyclic order.
int circle_position(int p, int n) { return p <= n ? p : 3 * n + 2 - p; }
int point_at_position(int pos, int n) { return pos <= n ? pos : 3 * n + 2 - pos; }

bool planar(const std::vector<std::uint8_t>& partner, int n) {
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * (n + 1); ++pos) {
    int p = point_at_position(pos, n);
    int q = partner[p];
    if (circle_position(q, n) > pos) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace

TLDiagram::TLDiagram(std::vector<std::uint8_t> partner)
    : partner_(std::move(partner)) {
  int sz = static_cast<int>(partner_.size());
  if (sz < 4 || sz % 2 != 0) throw InputError("diagram needs 2(n+1) points");
  check_rank(sz / 2 - 1);
  for (int p = 0; p < sz; ++p) {
    int q = partner_[p];
    if (q < 0 || q >= sz || q == p || partner_[q] != p)
      throw InputError("matching is not a fixed-point-free involution");
  }
  if (!planar(partner_, rank()))
    throw InputError("matching cannot be drawn without crossings");
}

std::vector<Reflection> TLDiagram::top_arcs() const {
  std::vector<Reflection> r;
  for (int p = 0; p < points(); ++p)
    if (partner_[p] > p && is_top(partner_[p])) r.emplace_back(p + 1, partner_[p] + 1);
  return r;
}

std::vector<Reflection> TLDiagram::bottom_arcs() const {
  std::vector<Reflection> r;
  for (int p = points(); p < 2 * points(); ++p)
    if (partner_[p] > p) r.emplace_back(label(p), label(partner_[p]));
  return r;
}

std::vector<std::pair<int, int>> TLDiagram::through_strands() const {
  std::vector<std::pair<int, int>> r;
  for (int p = 0; p < points(); ++p)
    if (!is_top(partner_[p])) r.emplace_back(label(p), label(partner_[p]));
  return r;
}

std::string TLDiagram::to_string() const {
  std::string s;
  for (int p = 0; p < 2 * points(); ++p) {
    int q = partner_[p];
    if (q < p) continue;
    if (!s.empty()) s += ' ';
    s += (is_top(p) ? "T" : "B") + std::to_string(label(p)) + "-" +
         (is_top(q) ? "T" : "B") + std::to_string(label(q));
  }
  return s;
}

TLDiagram identity_diagram(int n) {
  check_rank(n);
  std::vector<std::uint8_t> partner(2 * (n + 1));
  for (int k = 0; k <= n; ++k) {
    partner[k] = static_cast<std::uint8_t>(k + n + 1);
    partner[k + n + 1] = static_cast<std::uint8_t>(k);
  }
  return TLDiagram(std::move(partner));
}

TLDiagram generator_diagram(int i, int n) {
  check_rank(n);
  if (i < 1 || i > n) throw InputError("generator index out of range");
  std::vector<std::uint8_t> partner(2 * (n + 1));
  for (int k = 0; k <= n; ++k) {
    partner[k] = static_cast<std::uint8_t>(k + n + 1);
    partner[k + n + 1] = static_cast<std::uint8_t>(k);
  }
  partner[i - 1] = static_cast<std::uint8_t>(i);
  partner[i] = static_cast<std::uint8_t>(i - 1);
  partner[n + i] = static_cast<std::uint8_t>(n + i + 1);
  partner[n + i + 1] = static_cast<std::uint8_t>(n + i);
  return TLDiagram(std::move(partner));
}

DiagramProduct multiply_diagrams(const TLDiagram& top, const TLDiagram& bottom) {
  if (top.rank() != bottom.rank()) throw InputError("rank mismatch in product");
  const int n = top.rank();
  const int m = n + 1;  // points per edge

  // Interface junction k (1..m) glues top's bottom point k to bottom's top
  // point k.  Every junction lies on exactly one strand or circle.
  std::vector<bool> junction_used(m + 1, false);
  auto use_junction = [&](int k) {
    assert(!junction_used[k]);
    junction_used[k] = true;
  };

  std::vector<std::uint8_t> partner(2 * m, 0);
  std::vector<bool> assigned(2 * m, false);

  // Walks from a result boundary point to the far end of its strand,
  // consuming every junction it passes.  Result indexing: 0..m-1 top,
  // m..2m-1 bottom.
  auto trace_from = [&](int start_result) {
    bool in_top = start_result < m;
    int p = in_top ? start_result : n + 1 + (start_result - m);
    for (;;) {
      const TLDiagram& d = in_top ? top : bottom;
      int q = d.partner(p);
      if (in_top && d.is_top(q)) return q;          // result top index q
      if (!in_top && !d.is_top(q)) return m + d.label(q) - 1;  // result bottom
      int k = d.label(q);  // strand hits the interface at junction k
      use_junction(k);
      if (in_top) {
        in_top = false;
        p = k - 1;       // continue at bottom factor's top point k
      } else {
        in_top = true;
        p = n + k;       // continue at top factor's bottom point k
      }
    }
  };

  for (int r = 0; r < 2 * m; ++r) {
    if (assigned[r]) continue;
    int mate = trace_from(r);
    assert(!assigned[mate] && mate != r);
    partner[r] = static_cast<std::uint8_t>(mate);
    partner[mate] = static_cast<std::uint8_t>(r);
    assigned[r] = assigned[mate] = true;
  }

  // Unused junctions belong to closed loops trapped in the interface.
  int circles = 0;
  for (int k = 1; k <= m; ++k) {
    if (junction_used[k]) continue;
    ++circles;
    // Follow the loop: down through the bottom factor, up through the top
    // factor, until back at the starting junction.
    int cur = k;
    do {
      use_junction(cur);
      int down = bottom.partner(cur - 1);   // another top point of `bottom`
      assert(bottom.is_top(down));
      int k2 = bottom.label(down);
      use_junction(k2);
      int up = top.partner(n + k2);         // another bottom point of `top`
      assert(!top.is_top(up));
      cur = top.label(up);
    } while (cur != k);
  }
  for (int k = 1; k <= m; ++k) assert(junction_used[k]);

  return DiagramProduct{circles, TLDiagram(std::move(partner))};
}

std::vector<TLDiagram> enumerate_diagrams(int n) {
  check_rank(n);
  const int m = n + 1;
  std::vector<TLDiagram> out;
  // Noncrossing perfect matchings of the boundary cycle correspond to
  // balanced bracket sequences over its 2m positions via stack matching.
  std::vector<char> word(2 * m);
  std::function<void(int, int)> rec = [&](int open, int close) {
    int at = open + close;
    if (at == 2 * m) {
      std::vector<std::uint8_t> partner(2 * m);
      std::vector<int> stack;
      for (int pos = 0; pos < 2 * m; ++pos) {
        if (word[pos]) {
          stack.push_back(pos);
        } else {
          int a = point_at_position(stack.back(), n);
          int b = point_at_position(pos, n);
          stack.pop_back();
          partner[a] = static_cast<std::uint8_t>(b);
          partner[b] = static_cast<std::uint8_t>(a);
        }
      }
      out.emplace_back(std::move(partner));
      return;
    }
    if (open < m) {
      word[at] = 1;
      rec(open + 1, close);
    }
    if (close < open) {
      word[at] = 0;
      rec(open, close + 1);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tlweyl
