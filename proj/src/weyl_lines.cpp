#include "tlweyl/weyl_lines.hpp"

#include <bit>

#include "tlweyl/errors.hpp"

namespace tlweyl {

namespace {
std::uint32_t full_mask(int n) { return (std::uint32_t{1} << (n + 1)) - 1; }
}  // namespace

WeylLine::WeylLine(std::uint32_t part, int rank) : n(rank) {
  check_rank(rank);
  std::uint32_t full = full_mask(rank);
  if (part == 0 || (part & ~full) != 0 || part == full)
    throw InputError("line parts must be nonempty and proper");
  part_one = (part & 1u) ? part : (full ^ part);
}

std::uint32_t WeylLine::part_two() const { return full_mask(n) ^ part_one; }

bool WeylLine::separates(int a, int b) const {
  return (((part_one >> (a - 1)) ^ (part_one >> (b - 1))) & 1u) != 0;
}

WeylLine WeylLine::from_index(int idx, int n) {
  check_rank(n);
  if (idx < 0 || idx >= (1 << n) - 1) throw InputError("line index out of range");
  return WeylLine((static_cast<std::uint32_t>(idx) << 1) | 1u, n);
}

std::string WeylLine::to_string() const {
  auto side = [&](std::uint32_t mask) {
    std::string s;
    for (int x = 1; x <= n + 1; ++x)
      if ((mask >> (x - 1)) & 1u) {
        if (!s.empty() && n + 1 > 9) s += ',';
        s += std::to_string(x);
      }
    return s;
  };
  return side(part_one) + "|" + side(part_two());
}

LineSet::LineSet(int n) : n_(n) {
  check_rank(n);
  bits_.assign((universe_size() + 63) / 64, 0);
}

int LineSet::size() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

bool LineSet::contains(const WeylLine& l) const {
  int i = l.index();
  return (bits_[i >> 6] >> (i & 63)) & 1u;
}

void LineSet::insert(const WeylLine& l) {
  if (l.n != n_) throw InputError("rank mismatch in LineSet");
  int i = l.index();
  bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

void LineSet::remove(const WeylLine& l) {
  int i = l.index();
  bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

LineSet LineSet::intersect(const LineSet& o) const {
  if (n_ != o.n_) throw InputError("rank mismatch in LineSet");
  LineSet r(n_);
  for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = bits_[k] & o.bits_[k];
  return r;
}

LineSet LineSet::unite(const LineSet& o) const {
  if (n_ != o.n_) throw InputError("rank mismatch in LineSet");
  LineSet r(n_);
  for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] = bits_[k] | o.bits_[k];
  return r;
}

bool LineSet::is_subset_of(const LineSet& o) const {
  if (n_ != o.n_) throw InputError("rank mismatch in LineSet");
  for (size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~o.bits_[k]) return false;
  return true;
}

std::vector<WeylLine> LineSet::members() const {
  std::vector<WeylLine> r;
  for (int i = 0; i < universe_size(); ++i) {
    if ((bits_[i >> 6] >> (i & 63)) & 1u) r.push_back(WeylLine::from_index(i, n_));
  }
  return r;
}

LineSet all_lines(int n) {
  LineSet s(n);
  for (int i = 0; i < s.universe_size(); ++i) s.insert(WeylLine::from_index(i, n));
  return s;
}

LineSet transverse_lines(const Reflection& t, int n) {
  check_rank(n);
  if (t.b > n + 1) throw InputError("reflection out of range for rank");
  LineSet s(n);
  for (int i = 0; i < s.universe_size(); ++i) {
    WeylLine l = WeylLine::from_index(i, n);
    if (l.separates(t.a, t.b)) s.insert(l);
  }
  return s;
}

LineSet hyperplane_lines(const Reflection& t, int n) {
  check_rank(n);
  if (t.b > n + 1) throw InputError("reflection out of range for rank");
  LineSet s(n);
  for (int i = 0; i < s.universe_size(); ++i) {
    WeylLine l = WeylLine::from_index(i, n);
    if (!l.separates(t.a, t.b)) s.insert(l);
  }
  return s;
}

WeylLine act(const Permutation& g, const WeylLine& l) {
  if (g.rank() != l.n) throw InputError("rank mismatch in act");
  std::uint32_t part = 0;
  for (int x = 1; x <= l.n + 1; ++x)
    if (l.contains_in_part_one(x)) part |= std::uint32_t{1} << (g.image(x) - 1);
  return WeylLine(part, l.n);
}

LineSet act(const Permutation& g, const LineSet& s) {
  LineSet r(s.rank());
  for (const WeylLine& l : s.members()) r.insert(act(g, l));
  return r;
}

LineSet dot_extend(int i, const LineSet& w) {
  int n = w.rank();
  if (i < 1 || i > n) throw InputError("generator index out of range");
  Permutation si = simple_transposition(i, n);
  return transverse_lines(simple_reflection(i), n).intersect(w.unite(act(si, w)));
}

LineSet sequence_variety(const Word& seq, int n) {
  check_word(seq, n);
  if (seq.empty()) throw InputError("sequence_variety needs a nonempty word");
  LineSet w = transverse_lines(simple_reflection(seq.back()), n);
  for (int k = static_cast<int>(seq.size()) - 2; k >= 0; --k)
    w = dot_extend(seq[k], w);
  return w;
}

std::vector<Reflection> reflections_of(const LineSet& w) {
  if (w.empty()) throw InputError("reflections_of needs a nonempty line set");
  std::vector<Reflection> out;
  for (const Reflection& t : all_reflections(w.rank()))
    if (w.is_subset_of(transverse_lines(t, w.rank()))) out.push_back(t);
  return out;
}

}  // namespace tlweyl
