#include <doctest.h>

#include <algorithm>
#include <set>

#include "tlweyl/errors.hpp"
#include "tlweyl/weyl_lines.hpp"

using namespace tlweyl;

namespace {

// Line from an explicit letter set (bit x-1 = letter x), canonicalized.
WeylLine line(std::uint32_t part, int n) { return WeylLine(part, n); }

LineSet make_set(std::initializer_list<std::uint32_t> parts, int n) {
  LineSet s(n);
  for (std::uint32_t m : parts) s.insert(line(m, n));
  return s;
}

}  // namespace

TEST_CASE("lines canonicalize to the part containing letter 1") {
  WeylLine l = line(0b010, 2);  // {2} vs {1,3} -> stored as {1,3}
  CHECK(l.part_one == 0b101);
  CHECK(l.to_string() == "13|2");
  CHECK(l.separates(1, 2));
  CHECK(l.separates(2, 3));
  CHECK_FALSE(l.separates(1, 3));

  CHECK(line(0b001, 2).to_string() == "1|23");
  CHECK_THROWS_AS(line(0b000, 2), InputError);
  CHECK_THROWS_AS(line(0b111, 2), InputError);  // no empty second part

  for (int idx = 0; idx < 7; ++idx)
    CHECK(WeylLine::from_index(idx, 3).index() == idx);
}

TEST_CASE("line counts are 2^n - 1") {
  CHECK(all_lines(1).size() == 1);
  CHECK(all_lines(2).size() == 3);
  CHECK(all_lines(4).size() == 15);
  for (int n = 1; n <= 12; ++n)
    CHECK(all_lines(n).size() == (1 << n) - 1);
}

TEST_CASE("transverse and hyperplane lines split by separation") {
  CHECK(transverse_lines(Reflection(1, 2), 2) == make_set({0b001, 0b101}, 2));
  CHECK(transverse_lines(Reflection(2, 3), 2) == make_set({0b011, 0b101}, 2));
  CHECK(transverse_lines(Reflection(1, 2), 1) == all_lines(1));

  CHECK(hyperplane_lines(Reflection(1, 3), 2) == make_set({0b101}, 2));
  CHECK(hyperplane_lines(Reflection(1, 2), 2) == make_set({0b011}, 2));
  CHECK(hyperplane_lines(Reflection(1, 2), 1).empty());

  for (int n = 1; n <= 6; ++n)
    for (const Reflection& t : all_reflections(n)) {
      LineSet v = transverse_lines(t, n), h = hyperplane_lines(t, n);
      CHECK(v.intersect(h).empty());
      CHECK(v.unite(h) == all_lines(n));
      CHECK(v.size() == 1 << (n - 1));
    }
}

TEST_CASE("permutations act on lines letterwise") {
  Permutation s1 = simple_transposition(1, 2);
  CHECK(act(s1, line(0b001, 2)) == line(0b010, 2));  // 1|23 -> 2|13
  CHECK(act(s1, transverse_lines(Reflection(2, 3), 2)) ==
        transverse_lines(Reflection(1, 3), 2));
  CHECK(act(Permutation(2), all_lines(2)) == all_lines(2));

  // act(g, .) permutes all_lines, and conjugation moves transverse sets.
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> img(n + 1);
    for (int i = 0; i <= n; ++i) img[i] = i + 1;
    do {
      Permutation g{img};
      LineSet image(n);
      for (const WeylLine& l : all_lines(n).members()) image.insert(act(g, l));
      CHECK(image == all_lines(n));
      for (const Reflection& t : all_reflections(n))
        CHECK(act(g, transverse_lines(t, n)) ==
              transverse_lines(t.conjugate_by(g), n));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("dot_extend base cases") {
  auto V = [](int i, int n) { return transverse_lines(simple_reflection(i), n); };
  CHECK(dot_extend(1, V(2, 2)) == V(1, 2));
  CHECK(dot_extend(1, V(3, 3)) == V(1, 3).intersect(V(3, 3)));
  CHECK(dot_extend(1, V(1, 3)) == V(1, 3));
}

TEST_CASE("sequence varieties fold from the last letter") {
  auto V = [](int i, int n) { return transverse_lines(simple_reflection(i), n); };
  CHECK(sequence_variety({2}, 2) == V(2, 2));
  CHECK(sequence_variety({1, 2}, 2) == V(1, 2));

  LineSet w = sequence_variety({2, 1, 3}, 3);
  CHECK(w == transverse_lines(Reflection(1, 4), 3)
                 .intersect(transverse_lines(Reflection(2, 3), 3)));

  CHECK_THROWS_AS(sequence_variety({}, 3), InputError);
  CHECK_THROWS_AS(sequence_variety({4}, 3), InputError);
}

TEST_CASE("reflections_of recovers the transverse reflections") {
  auto got = reflections_of(transverse_lines(simple_reflection(1), 2));
  CHECK(got == std::vector<Reflection>{Reflection(1, 2)});

  auto pair = reflections_of(sequence_variety({2, 1, 3}, 3));
  CHECK(pair == std::vector<Reflection>{Reflection(1, 4), Reflection(2, 3)});

  CHECK(reflections_of(all_lines(3)).empty());
  CHECK_THROWS_AS(reflections_of(LineSet(3)), InputError);
}

TEST_CASE("varieties are intersections of their transverse sets") {
  // Every sequence variety is nonempty and is cut out by its reflection set.
  for (int n = 1; n <= 4; ++n) {
    Word w;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (!w.empty()) {
        LineSet v = sequence_variety(w, n);
        CHECK_FALSE(v.empty());
        LineSet cut = all_lines(n);
        for (const Reflection& t : reflections_of(v))
          cut = cut.intersect(transverse_lines(t, n));
        CHECK(v == cut);
      }
      if (remaining == 0) return;
      for (int i = 1; i <= n; ++i) {
        w.push_back(i);
        self(self, remaining - 1);
        w.pop_back();
      }
    };
    rec(rec, 4);
  }
}

TEST_CASE("variety meets every V_i, with matching stability") {
  for (int n = 2; n <= 4; ++n) {
    Word w;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (!w.empty()) {
        LineSet v = sequence_variety(w, n);
        for (int i = 1; i <= n; ++i) {
          LineSet vi = transverse_lines(simple_reflection(i), n);
          LineSet meet = v.intersect(vi);
          CHECK_FALSE(meet.empty());
          Permutation si = simple_transposition(i, n);
          CHECK((act(si, meet) == meet) == (act(si, v) == v));
        }
      }
      if (remaining == 0) return;
      for (int i = 1; i <= n; ++i) {
        w.push_back(i);
        self(self, remaining - 1);
        w.pop_back();
      }
    };
    rec(rec, 3);
  }
}

TEST_CASE("non-commuting triples share transverse lines through one hyperplane") {
  // For t, t' sharing exactly one letter and t'' = t' t t': V_t ∩ V_{t'}
  // consists of lines inside H_{t''}, symmetrically in t and t', and the
  // union of V_{t'} and V_{t''} absorbs V_t.
  auto as_permutation = [](const Reflection& t, int n) {
    std::vector<int> img(n + 1);
    for (int x = 1; x <= n + 1; ++x) img[x - 1] = x;
    std::swap(img[t.a - 1], img[t.b - 1]);
    return Permutation(img);
  };
  for (int n = 2; n <= 4; ++n)
    for (const Reflection& t : all_reflections(n))
      for (const Reflection& tp : all_reflections(n)) {
        if (t == tp || t.commutes_with(tp)) continue;
        Reflection tpp = t.conjugate_by(as_permutation(tp, n));
        LineSet vt = transverse_lines(t, n), vtp = transverse_lines(tp, n);
        LineSet vtpp = transverse_lines(tpp, n);
        LineSet h = hyperplane_lines(tpp, n);
        CHECK(vt.intersect(vtp) == vt.intersect(h));
        CHECK(vt.intersect(vtp) == vtp.intersect(h));
        CHECK(vt.intersect(vtp.unite(vtpp)) == vt);
      }
}

TEST_CASE("ascending and descending runs collapse to the first letter") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      LineSet vm = transverse_lines(simple_reflection(m), n);
      for (int j = 1; j <= m; ++j) {
        Word down;
        for (int v = m; v >= j; --v) down.push_back(v);
        CHECK(sequence_variety(down, n) == vm);
      }
      for (int i = m; i <= n; ++i) {
        Word up;
        for (int v = m; v <= i; ++v) up.push_back(v);
        CHECK(sequence_variety(up, n) == vm);
      }
    }
}
