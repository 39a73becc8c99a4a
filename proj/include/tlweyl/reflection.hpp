#ifndef TLWEYL_REFLECTION_HPP
#define TLWEYL_REFLECTION_HPP

#include <compare>
#include <string>
#include <vector>

#include "tlweyl/permutation.hpp"

namespace tlweyl {

// A reflection of the symmetric group on n+1 letters is the transposition
// (a, b); canonical form keeps a < b.  The simple reflection s_i is (i, i+1).
struct Reflection {
  int a = 0;
  int b = 0;

  Reflection() = default;
  Reflection(int a_, int b_);  // validates 1 <= a < b

  bool is_simple() const { return b == a + 1; }

  // Two transpositions commute iff their supports are equal or disjoint;
  // for distinct reflections that means {a,b} ∩ {a',b'} = ∅.
  bool commutes_with(const Reflection& o) const;

  // g t g^{-1} = (g(a), g(b)).
  Reflection conjugate_by(const Permutation& g) const;

  std::string to_string() const;  // "(2,5)"

  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

inline Reflection simple_reflection(int i) { return Reflection(i, i + 1); }

// All n(n+1)/2 reflections of rank n, sorted.
std::vector<Reflection> all_reflections(int n);

}  // namespace tlweyl

#endif
