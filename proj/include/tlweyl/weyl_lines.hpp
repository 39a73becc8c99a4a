#ifndef TLWEYL_WEYL_LINES_HPP
#define TLWEYL_WEYL_LINES_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tlweyl/coxeter.hpp"
#include "tlweyl/reflection.hpp"

namespace tlweyl {

// A Weyl line of rank n corresponds to an unordered splitting of the letters
// {1, ..., n+1} into two nonempty parts.  Canonical form stores the part
// containing the letter 1 as a bitmask (bit x-1 = letter x).  There are
// 2^n - 1 lines; index(line) enumerates them 0 .. 2^n - 2.
struct WeylLine {
  std::uint32_t part_one = 1;  // always contains bit 0 (letter 1)
  int n = 1;

  WeylLine() = default;
  WeylLine(std::uint32_t part, int rank);  // canonicalizes + validates

  std::uint32_t part_two() const;
  bool contains_in_part_one(int letter) const {
    return (part_one >> (letter - 1)) & 1u;
  }
  // True iff letters a and b land in different parts.
  bool separates(int a, int b) const;

  int index() const { return static_cast<int>(part_one >> 1); }
  static WeylLine from_index(int idx, int n);

  std::string to_string() const;  // "13|2"

  friend auto operator<=>(const WeylLine&, const WeylLine&) = default;
};

// A set of Weyl lines of a fixed rank, stored as a membership bitmask over
// all 2^n - 1 lines.  Equality is extensional.
class LineSet {
 public:
  explicit LineSet(int n);  // empty set

  int rank() const { return n_; }
  int universe_size() const { return (1 << n_) - 1; }
  int size() const;
  bool empty() const { return size() == 0; }

  bool contains(const WeylLine& l) const;
  void insert(const WeylLine& l);
  void remove(const WeylLine& l);

  LineSet intersect(const LineSet& o) const;
  LineSet unite(const LineSet& o) const;
  bool is_subset_of(const LineSet& o) const;

  std::vector<WeylLine> members() const;  // sorted by index

  friend bool operator==(const LineSet&, const LineSet&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

// The 2^n - 1 lines of rank n.
LineSet all_lines(int n);

// V_t: lines whose splitting separates the two letters moved by t.
LineSet transverse_lines(const Reflection& t, int n);

// Lines fixed by t (both letters of t in the same part): the complement of
// transverse_lines(t) in all_lines.
LineSet hyperplane_lines(const Reflection& t, int n);

// g . {lines} applied letterwise; a bijection of all_lines.
WeylLine act(const Permutation& g, const WeylLine& l);
LineSet act(const Permutation& g, const LineSet& s);

// s_i . W = V_i ∩ (W ∪ s_i W).
LineSet dot_extend(int i, const LineSet& w);

// W_seq for a nonempty word: start from V of the LAST letter, then apply
// dot_extend with each earlier letter moving leftward.
LineSet sequence_variety(const Word& seq, int n);

// T_W = { t | W ⊆ V_t } for nonempty W (else InputError).
std::vector<Reflection> reflections_of(const LineSet& w);

}  // namespace tlweyl

#endif
