#include "tlweyl/categorify.hpp"

#include <algorithm>
#include <cassert>

#include "tlweyl/errors.hpp"
#include "tlweyl/tl_element.hpp"
#include "tlweyl/weyl_lines.hpp"

namespace tlweyl {

AnnihilatorPair annihilator_varieties(const Word& seq, int n) {
  check_word(seq, n);
  if (seq.empty()) throw InputError("annihilator_varieties needs a nonempty word");
  Word rev(seq.rbegin(), seq.rend());
  return AnnihilatorPair{DenseSet(dense_of_sequence(seq, n)),
                         DenseSet(dense_of_sequence(rev, n))};
}

namespace {

std::int64_t binomial(int k, int j) {
  std::int64_t c = 1;
  for (int t = 1; t <= j; ++t) c = c * (k - t + 1) / t;
  return c;
}

}  // namespace

DecompositionRecord decompose_product(const Word& seq, int n) {
  GeneratorProduct gp = generator_product(seq, n);
  if (gp.circles > 62)
    throw CapacityError("loop count too large to expand exactly");
  DecompositionRecord r{fc_element_of_diagram(gp.diagram),
                        gp.circles,
                        LaurentPoly::loop().pow(gp.circles),
                        {}};
  // loop^c = sum_j binomial(c, j) tau^{-2j}: one shift class per power.
  for (int j = 0; j <= gp.circles; ++j)
    r.summands.emplace_back(-2 * j, binomial(gp.circles, j));
  return r;
}

StaircaseForm::StaircaseForm(std::vector<std::pair<int, int>> runs, int n)
    : runs_(std::move(runs)), n_(n) {
  check_rank(n);
  for (size_t m = 0; m < runs_.size(); ++m) {
    auto [i, j] = runs_[m];
    if (j < 1 || i > n || j > i)
      throw InputError("run must satisfy 1 <= j <= i <= n");
    if (m > 0 && (runs_[m - 1].first >= i || runs_[m - 1].second >= j))
      throw InputError("run tops and bottoms must increase left to right");
  }
  if (!is_reduced(word(), n))
    throw InputError("staircase runs do not concatenate to a reduced word");
}

Word StaircaseForm::word() const {
  Word w;
  for (auto [i, j] : runs_)
    for (int letter = i; letter >= j; --letter) w.push_back(letter);
  return w;
}

Permutation StaircaseForm::element() const { return word_to_permutation(word(), n_); }

StaircaseForm staircase_factorization(const Permutation& p) {
  if (!is_fully_commutative(p))
    throw DomainError("element " + p.to_string() + " is not fully commutative");
  Word w = lex_min_reduced_word(p);
  // The lexicographically least reduced word of a fully commutative element
  // splits into maximal descending runs whose tops and bottoms both increase;
  // the constructor validates this shape.
  std::vector<std::pair<int, int>> runs;
  for (size_t a = 0; a < w.size();) {
    size_t b = a + 1;
    while (b < w.size() && w[b] == w[b - 1] - 1) ++b;
    runs.emplace_back(w[a], w[b - 1]);
    a = b;
  }
  StaircaseForm form(std::move(runs), p.rank());
  assert(form.element() == p);
  return form;
}

IntertwinedClass classify_intertwined(const StaircaseForm& form) {
  const auto& runs = form.runs();
  const int k = form.run_count();
  if (k == 0) throw InputError("classification needs a nonempty staircase form");
  // Runs are indexed 1..k from the RIGHT end of the product here.
  auto run = [&](int m) { return runs[k - m]; };
  const int i1 = run(1).first;

  bool intertwined = true;
  for (int m = 2; m <= k && intertwined; ++m) {
    auto [i, j] = run(m);
    int lo = i1 - 2 * (m - 1);
    intertwined = j <= lo && lo + 1 <= i;
  }

  bool generalized = true;
  std::vector<std::vector<int>> sets{{i1}};
  for (int l = 1; l < k && generalized; ++l) {
    int want = sets.back().front() - 1;  // n(l) - 1 must sit in run l+1
    auto [i, j] = run(l + 1);
    if (want < j || want > i) {
      generalized = false;
    } else if (want == j) {
      sets.push_back({want});
    } else {
      sets.push_back({want - 1, want});
    }
  }

  IntertwinedClass out;
  if (intertwined) {
    assert(generalized);
    out.kind = IntertwinedClass::Kind::intertwined;
  } else if (generalized) {
    out.kind = IntertwinedClass::Kind::generalized;
  }
  if (generalized) out.sets = std::move(sets);
  return out;
}

std::vector<TableRecord> build_annihilator_table(int n) {
  std::vector<TableRecord> records;
  for (const Permutation& p : enumerate_fully_commutative(n)) {
    Word w = lex_min_reduced_word(p);
    if (w.empty()) {
      records.push_back({w, ReflectionSet(), ReflectionSet()});
    } else {
      Word rev(w.rbegin(), w.rend());
      records.push_back(
          {w, dense_of_sequence(w, n), dense_of_sequence(rev, n)});
    }
  }
  return records;
}

CorrespondenceReport verify_correspondence(int n, int oracle_cap) {
  check_rank(n);
  CorrespondenceReport report;
  report.rank = n;
  const bool use_oracle = n <= oracle_cap;

  auto describe = [](const Permutation& p, const Word& w) {
    std::string s = p.to_string() + " via [";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(w[i]);
    }
    return s + "]";
  };

  for (const Permutation& p : enumerate_fully_commutative(n)) {
    ++report.elements;
    TLDiagram expected = kl_basis_of_fc(p);
    ReflectionSet top(expected.top_arcs());
    ReflectionSet bottom(expected.bottom_arcs());
    for (const Word& w : reduced_words(p)) {
      ++report.words;
      GeneratorProduct gp = generator_product(w, n);
      if (gp.circles != 0 || gp.diagram != expected) {
        report.failures.push_back("diagram mismatch for " + describe(p, w));
        continue;
      }
      if (w.empty()) continue;  // identity: nothing further to compare
      Word rev(w.rbegin(), w.rend());
      ReflectionSet left = dense_of_sequence(w, n);
      ReflectionSet right = dense_of_sequence(rev, n);
      if (left != top || right != bottom) {
        report.failures.push_back("boundary arcs differ from update rule for " +
                                  describe(p, w));
        continue;
      }
      if (use_oracle) {
        ++report.oracle_words;
        ReflectionSet oracle_left(reflections_of(sequence_variety(w, n)));
        ReflectionSet oracle_right(reflections_of(sequence_variety(rev, n)));
        if (oracle_left != left || oracle_right != right)
          report.failures.push_back("line-set oracle differs for " +
                                    describe(p, w));
      }
    }
  }
  return report;
}

}  // namespace tlweyl
