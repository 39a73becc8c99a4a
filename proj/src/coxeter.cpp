#include "tlweyl/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>

#include "tlweyl/errors.hpp"

namespace tlweyl {

void check_word(const Word& w, int n) {
  check_rank(n);
  for (int letter : w)
    if (letter < 1 || letter > n)
      throw InputError("word letter " + std::to_string(letter) +
                       " out of range 1.." + std::to_string(n));
}

Permutation word_to_permutation(const Word& w, int n) {
  check_word(w, n);
  Permutation p(n);
  // Multiplying on the right by s_i swaps the entries at positions i, i+1,
  // so a left-to-right pass builds s_{i_1} s_{i_2} ... s_{i_k}.
  for (int letter : w) p = p.right_mul_simple(letter);
  return p;
}

bool is_reduced(const Word& w, int n) {
  return static_cast<int>(w.size()) == word_to_permutation(w, n).length();
}

bool is_fully_commutative(const Permutation& p) {
  // A braid factor in some reduced word is equivalent to a descending
  // subsequence of length 3 in one-line notation.  Scan each middle position
  // against the running prefix maximum and suffix minimum.
  const auto& img = p.one_line();
  int d = p.degree();
  std::vector<int> suffix_min(d + 1, d + 1);
  for (int j = d - 1; j >= 0; --j)
    suffix_min[j] = std::min<int>(suffix_min[j + 1], img[j]);
  int prefix_max = 0;
  for (int j = 0; j < d; ++j) {
    if (prefix_max > img[j] && img[j] > suffix_min[j + 1]) return false;
    prefix_max = std::max<int>(prefix_max, img[j]);
  }
  return true;
}

std::set<Word> commutation_class(const Word& w, int n) {
  if (!is_reduced(w, n)) throw InputError("commutation_class needs a reduced word");
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (std::abs(cur[i] - cur[i + 1]) < 2) continue;
      std::swap(cur[i], cur[i + 1]);
      if (seen.insert(cur).second) queue.push_back(cur);
      std::swap(cur[i], cur[i + 1]);
    }
  }
  return seen;
}

std::vector<Word> reduced_words(const Permutation& p) {
  std::vector<Word> out;
  Word prefix;
  // Peel left descents: every reduced word starts with one, and stripping it
  // recurses on a shorter element.
  std::function<void(const Permutation&)> rec = [&](const Permutation& q) {
    if (q.is_identity()) {
      out.push_back(prefix);
      return;
    }
    for (int i = 1; i <= q.rank(); ++i) {
      if (!q.has_left_descent(i)) continue;
      prefix.push_back(i);
      rec(q.left_mul_simple(i));
      prefix.pop_back();
    }
  };
  rec(p);
  return out;
}

Word lex_min_reduced_word(const Permutation& p) {
  Word w;
  Permutation q = p;
  while (!q.is_identity()) {
    int i = 1;
    while (!q.has_left_descent(i)) ++i;
    w.push_back(i);
    q = q.left_mul_simple(i);
  }
  return w;
}

std::vector<Permutation> enumerate_fully_commutative(int n) {
  check_rank(n);
  int d = n + 1;
  std::vector<Permutation> out;
  std::vector<int> img;
  std::vector<bool> used(d + 1, false);
  // Grow one-line notation left to right.  A new value x completes a
  // descending triple iff x < (largest value that already sits below some
  // earlier larger value); tracking that bound prunes the search to the
  // Catalan-many viable prefixes.
  std::function<void(int, int, int)> rec = [&](int pos, int prefix_max,
                                               int inv_floor) {
    if (pos == d) {
      out.emplace_back(img);
      return;
    }
    for (int x = 1; x <= d; ++x) {
      if (used[x] || x < inv_floor) continue;
      used[x] = true;
      img.push_back(x);
      rec(pos + 1, std::max(prefix_max, x),
          x < prefix_max ? std::max(inv_floor, x) : inv_floor);
      img.pop_back();
      used[x] = false;
    }
  };
  rec(0, 0, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const Permutation& a, const Permutation& b) {
                     int la = a.length(), lb = b.length();
                     if (la != lb) return la < lb;
                     return a.one_line() < b.one_line();
                   });
  return out;
}

unsigned long long catalan(int m) {
  unsigned long long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace tlweyl
