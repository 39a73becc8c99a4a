#ifndef TLWEYL_COXETER_HPP
#define TLWEYL_COXETER_HPP

#include <set>
#include <vector>

#include "tlweyl/permutation.hpp"

namespace tlweyl {

// A word is a finite sequence of 1-indexed generator letters i, standing for
// the product s_{i_1} s_{i_2} ... s_{i_k} read left to right.
using Word = std::vector<int>;

void check_word(const Word& w, int n);  // letters in [1, n]; throws InputError

// Evaluates the product of simple transpositions.  Empty word -> identity.
Permutation word_to_permutation(const Word& w, int n);

// A word is reduced iff its length equals the inversion count of its product.
bool is_reduced(const Word& w, int n);

// Fully commutative = no reduced word contains a braid factor s_i s_j s_i.
// In type A this is equivalent to the one-line notation avoiding the pattern
// 321; the equivalence is oracle-tested against commutation classes.
bool is_fully_commutative(const Permutation& p);

// All words obtainable from w by swapping adjacent distant letters
// (|i - j| >= 2).  Requires w reduced (else InputError).  For a fully
// commutative element this is the set of all its reduced words.
std::set<Word> commutation_class(const Word& w, int n);

// Every reduced word of p, generated by peeling left descents.
std::vector<Word> reduced_words(const Permutation& p);

// Lexicographically least reduced word of p (greedy smallest left descent).
Word lex_min_reduced_word(const Permutation& p);

// All fully commutative elements of rank n, ordered by length then by
// lexicographic one-line notation.  Count is the Catalan number C_{n+1}.
std::vector<Permutation> enumerate_fully_commutative(int n);

unsigned long long catalan(int m);  // C_m = binomial(2m, m)/(m+1)

}  // namespace tlweyl

#endif
