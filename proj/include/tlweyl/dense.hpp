#ifndef TLWEYL_DENSE_HPP
#define TLWEYL_DENSE_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tlweyl/coxeter.hpp"
#include "tlweyl/reflection.hpp"

namespace tlweyl {

// A set of pairwise commuting reflections, kept sorted by (a, b).
// Construction rejects non-commuting input.
class ReflectionSet {
 public:
  ReflectionSet() = default;
  explicit ReflectionSet(std::vector<Reflection> members);

  const std::vector<Reflection>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(const Reflection& t) const;

  std::string to_string() const;  // "{(1,4),(2,3)}"

  friend auto operator<=>(const ReflectionSet&, const ReflectionSet&) = default;

 private:
  std::vector<Reflection> members_;  // sorted, pairwise commuting
};

// Arcs (a, b), (c, d) cross when a < c < b < d or c < a < d < b.
bool is_noncrossing(const ReflectionSet& q);

// A commuting set Q is dense when it is noncrossing and its support is a
// disjoint union of intervals [m_q, j_q] with (m_q, j_q) ∈ Q.  The intervals
// are the blocks; each length j_q - m_q is odd.
// Returns the blocks left to right, or false if Q is not dense.
bool is_dense(const ReflectionSet& q,
              std::vector<std::pair<int, int>>* blocks_out = nullptr);

// A dense set together with its block decomposition.
class DenseSet {
 public:
  explicit DenseSet(ReflectionSet q);  // InputError if q is not dense

  const ReflectionSet& reflections() const { return set_; }
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }

  friend bool operator==(const DenseSet& x, const DenseSet& y) {
    return x.set_ == y.set_;
  }

 private:
  ReflectionSet set_;
  std::vector<std::pair<int, int>> blocks_;
};

// One step of the left dot action on reflection sets: Q' from Q and s = s_i.
// Let N = members of Q not commuting with s (|N| <= 2 is forced for a
// commuting set and asserted):
//   |N| = 0:  Q ∪ {s}
//   |N| = 1:  (Q \ N) ∪ {s}
//   |N| = 2:  (Q \ {t,t'}) ∪ {s, (g(i), g(i+1))} with g = t t'
ReflectionSet update(const ReflectionSet& q, int i, int n);

// T of a nonempty word: start from {s_last}, then update with each earlier
// letter moving leftward (same fold direction as sequence_variety).
ReflectionSet dense_of_sequence(const Word& seq, int n);

// Inverse construction: a word whose dense_of_sequence is exactly Q.
// Blocks are processed left to right; inside a block the big arc (m, j) is
// peeled off, the remainder handled recursively, then the ascending run of
// simple-reflection positions m, m+2, ..., j-1 is appended.
Word dense_to_sequence(const DenseSet& q);

// Every pairwise commuting noncrossing set over rank n (partial matchings of
// n+1 points with noncrossing arcs), and the dense ones among them.
std::vector<ReflectionSet> enumerate_noncrossing_commuting(int n);
std::vector<DenseSet> enumerate_dense(int n);

}  // namespace tlweyl

#endif
