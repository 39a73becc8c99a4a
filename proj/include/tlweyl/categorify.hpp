#ifndef TLWEYL_CATEGORIFY_HPP
#define TLWEYL_CATEGORIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tlweyl/coxeter.hpp"
#include "tlweyl/dense.hpp"
#include "tlweyl/laurent.hpp"
#include "tlweyl/permutation.hpp"

namespace tlweyl {

// Left and right annihilator data of the product along seq: the dense set of
// the sequence and of the reversed sequence.  These equal the top and bottom
// boundary arcs of the product diagram.
struct AnnihilatorPair {
  DenseSet left;
  DenseSet right;
};
AnnihilatorPair annihilator_varieties(const Word& seq, int n);

// Product of generators b_{i_1} ... b_{i_k} expanded in the diagram basis
// with grading shifts: the product equals loop^circles times the basis
// element of `element`, and loop^circles expands into summands
// (element, shift) with multiplicity binomial(circles, -shift/2).
struct DecompositionRecord {
  Permutation element;
  int circles = 0;
  LaurentPoly scalar;  // loop^circles
  // (shift, multiplicity), shift = 0, -2, ..., -2*circles.
  std::vector<std::pair<int, std::int64_t>> summands;
};
DecompositionRecord decompose_product(const Word& seq, int n);

// Factorization of a fully commutative element into descending runs
// b_i b_{i-1} ... b_j.  runs are listed left factor first; reading the list
// left to right both tops i and bottoms j strictly increase, and j <= i in
// every run.  The concatenated word is reduced and multiplies back to the
// element.
class StaircaseForm {
 public:
  StaircaseForm(std::vector<std::pair<int, int>> runs, int n);  // validates

  const std::vector<std::pair<int, int>>& runs() const { return runs_; }
  int rank() const { return n_; }
  int run_count() const { return static_cast<int>(runs_.size()); }
  Word word() const;           // concatenation of the runs
  Permutation element() const;

 private:
  std::vector<std::pair<int, int>> runs_;
  int n_;
};

// Computes the staircase form of a fully commutative, non-identity element
// (identity -> empty run list is represented by throwing for classify but
// factorization returns an empty form).  Non-fc -> DomainError.
StaircaseForm staircase_factorization(const Permutation& p);

// Interlocking pattern of a staircase form.  Indexing follows the product
// read right to left: run 1 is the LAST run in the stored list, run k the
// first.  With i_1 the top of run 1:
//   intertwined:  for 1 < m <= k the interval [j_m, i_m] contains both
//                 i_1 - 2(m-1) and i_1 - 2(m-1) + 1.
//   generalized:  S_1 = {i_1}; given n = min S_l, run l+1 must contain
//                 n - 1; S_{l+1} = {n-1} if n-1 = j_{l+1}, else {n-2, n-1}.
// Every intertwined form is generalized.
struct IntertwinedClass {
  enum class Kind { neither, generalized, intertwined };
  Kind kind = Kind::neither;
  // S_1, ..., S_k when kind != neither (each of size 1 or 2, ascending).
  std::vector<std::vector<int>> sets;
};
IntertwinedClass classify_intertwined(const StaircaseForm& form);

// One row of the annihilator table: an element (as its lexicographically
// minimal reduced word) with its left/right dense sets.
struct TableRecord {
  Word element;
  ReflectionSet left;
  ReflectionSet right;
};
std::vector<TableRecord> build_annihilator_table(int n);

// Sweep over every fully commutative element of rank n and ALL of its
// reduced words, checking that the update-rule path and the diagram path
// agree (and, for n <= oracle_cap, the line-set oracle too).
struct CorrespondenceReport {
  int rank = 0;
  long elements = 0;
  long words = 0;
  long oracle_words = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
CorrespondenceReport verify_correspondence(int n, int oracle_cap = 6);

}  // namespace tlweyl

#endif
