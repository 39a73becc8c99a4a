#include <doctest.h>

#include <set>

#include "tlweyl/dense.hpp"
#include "tlweyl/errors.hpp"
#include "tlweyl/weyl_lines.hpp"

using namespace tlweyl;

namespace {

ReflectionSet refs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Reflection> v;
  for (auto [a, b] : pairs) v.emplace_back(a, b);
  return ReflectionSet(std::move(v));
}

}  // namespace

TEST_CASE("reflection sets must commute pairwise") {
  ReflectionSet q = refs({{2, 3}, {1, 4}});
  CHECK(q.size() == 2);
  CHECK(q.members().front() == Reflection(1, 4));  // sorted
  CHECK(q.contains(Reflection(2, 3)));
  CHECK_FALSE(q.contains(Reflection(1, 2)));
  CHECK(q.to_string() == "{(1,4),(2,3)}");

  CHECK_THROWS_AS(refs({{1, 2}, {2, 3}}), InputError);  // share one letter
  CHECK(refs({{1, 2}, {1, 2}}).size() == 1);            // duplicates collapse
}

TEST_CASE("noncrossing and dense recognition") {
  CHECK(is_noncrossing(refs({{1, 2}, {3, 4}})));
  CHECK(is_noncrossing(refs({{1, 4}, {2, 3}})));
  CHECK_FALSE(is_noncrossing(refs({{1, 3}, {2, 4}})));

  std::vector<std::pair<int, int>> blocks;
  CHECK(is_dense(refs({{1, 2}, {3, 4}}), &blocks));
  CHECK(blocks == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  CHECK(is_dense(refs({{1, 4}, {2, 3}}), &blocks));
  CHECK(blocks == std::vector<std::pair<int, int>>{{1, 4}});

  CHECK_FALSE(is_dense(refs({{1, 4}})));        // hole at 2, 3
  CHECK_FALSE(is_dense(refs({{1, 3}, {2, 4}})));  // crossing
  CHECK_FALSE(is_dense(refs({{2, 5}})));        // no arc spanning the block

  CHECK(is_dense(ReflectionSet(), &blocks));    // empty set, no blocks
  CHECK(blocks.empty());

  CHECK_THROWS_AS(DenseSet(refs({{1, 4}})), InputError);
  CHECK(DenseSet(refs({{2, 5}, {3, 4}})).blocks() ==
        std::vector<std::pair<int, int>>{{2, 5}});
}

TEST_CASE("update rule three cases") {
  int n = 4;
  // No neighbour: adjoin the simple reflection.
  CHECK(update(refs({{3, 4}}), 1, n) == refs({{1, 2}, {3, 4}}));
  // One non-commuting member: it is replaced.
  CHECK(update(refs({{2, 3}}), 1, n) == refs({{1, 2}}));
  // Two non-commuting members: both endpoints get rewired.
  CHECK(update(refs({{1, 2}, {3, 4}}), 2, n) == refs({{1, 4}, {2, 3}}));
  CHECK(update(refs({{1, 4}, {2, 3}}), 2, n) == refs({{1, 4}, {2, 3}}));

  CHECK(update(ReflectionSet(), 2, n) == refs({{2, 3}}));
  CHECK_THROWS_AS(update(refs({{1, 2}}), 5, 4), InputError);
}

TEST_CASE("update preserves commutativity, noncrossing, and size bounds") {
  for (int n = 2; n <= 5; ++n)
    for (const ReflectionSet& q : enumerate_noncrossing_commuting(n))
      for (int i = 1; i <= n; ++i) {
        ReflectionSet r = update(q, i, n);  // constructor re-validates
        CHECK(is_noncrossing(r));
        CHECK(r.contains(simple_reflection(i)));
        CHECK(r.size() >= q.size());
        CHECK(r.size() <= q.size() + 1);
        CHECK(r.size() <= (n + 1) / 2);
      }
}

TEST_CASE("dense set of a sequence") {
  CHECK(dense_of_sequence({1}, 2) == refs({{1, 2}}));
  CHECK(dense_of_sequence({1, 2}, 2) == refs({{1, 2}}));
  CHECK(dense_of_sequence({2, 1}, 2) == refs({{2, 3}}));

  // Left and right dense sets of the same word differ in general.
  CHECK(dense_of_sequence({3, 4, 2, 3, 1, 2}, 4) == refs({{2, 5}, {3, 4}}));
  CHECK(dense_of_sequence({2, 1, 3, 2, 4, 3}, 4) == refs({{1, 4}, {2, 3}}));

  CHECK_THROWS_AS(dense_of_sequence({}, 2), InputError);
  CHECK_THROWS_AS(dense_of_sequence({3}, 2), InputError);
}

TEST_CASE("sequence from a dense set") {
  CHECK(dense_to_sequence(DenseSet(refs({{1, 2}}))) == Word{1});
  CHECK(dense_to_sequence(DenseSet(refs({{1, 2}, {3, 4}}))) == Word{1, 3});
  CHECK(dense_to_sequence(DenseSet(refs({{1, 4}, {2, 3}}))) == Word{2, 1, 3});
  // The empty set is dense but no nonempty word produces it.
  CHECK_THROWS_AS(dense_to_sequence(DenseSet(ReflectionSet())), InputError);

  DenseSet q(refs({{1, 6}, {2, 3}, {4, 5}}));
  Word w = dense_to_sequence(q);
  CHECK(w == Word{2, 4, 1, 3, 5});
  CHECK(dense_of_sequence(w, 5) == q.reflections());
}

TEST_CASE("round trip over every dense set") {
  for (int n = 1; n <= 6; ++n) {
    long dense_count = 0;
    for (const DenseSet& q : enumerate_dense(n)) {
      if (q.reflections().empty()) continue;  // no nonempty word maps to it
      ++dense_count;
      Word w = dense_to_sequence(q);
      CHECK_FALSE(w.empty());
      CHECK(dense_of_sequence(w, n) == q.reflections());
    }
    CHECK(dense_count > 0);
  }
}

TEST_CASE("triple oracle: update rule vs line-set calculus") {
  // dense_of_sequence must agree with the reflection set of the sequence
  // variety for every word; exhaustive here for short words and small rank.
  for (int n = 1; n <= 4; ++n) {
    Word w;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (!w.empty()) {
        ReflectionSet fast = dense_of_sequence(w, n);
        ReflectionSet slow(reflections_of(sequence_variety(w, n)));
        CHECK(fast == slow);
        std::vector<std::pair<int, int>> blocks;
        CHECK(is_dense(fast, &blocks));
      }
      if (remaining == 0) return;
      for (int i = 1; i <= n; ++i) {
        w.push_back(i);
        self(self, remaining - 1);
        w.pop_back();
      }
    };
    rec(rec, 5);
  }
}

TEST_CASE("dense enumeration sizes") {
  // Noncrossing partial matchings of n+1 points are counted by the Motzkin
  // numbers: 1, 2, 4, 9, 21, 51, 127 for 0..6 points.
  CHECK(enumerate_noncrossing_commuting(1).size() == 2);
  CHECK(enumerate_noncrossing_commuting(2).size() == 4);
  CHECK(enumerate_noncrossing_commuting(3).size() == 9);
  CHECK(enumerate_noncrossing_commuting(4).size() == 21);
  CHECK(enumerate_noncrossing_commuting(5).size() == 51);

  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_noncrossing_commuting(n);
    std::set<ReflectionSet> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    long dense = 0;
    for (const ReflectionSet& q : all)
      if (is_dense(q)) ++dense;
    CHECK((size_t)dense == enumerate_dense(n).size());
    for (const ReflectionSet& q : all)
      CHECK((int)q.members().size() <= (n + 1) / 2);
  }
}
