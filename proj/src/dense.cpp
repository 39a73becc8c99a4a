#include "tlweyl/dense.hpp"

#include <algorithm>
#include <cassert>

#include "tlweyl/errors.hpp"

namespace tlweyl {

ReflectionSet::ReflectionSet(std::vector<Reflection> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (size_t i = 0; i < members_.size(); ++i)
    for (size_t j = i + 1; j < members_.size(); ++j)
      if (!members_[i].commutes_with(members_[j]))
        throw InputError("reflections " + members_[i].to_string() + " and " +
                         members_[j].to_string() + " do not commute");
}

bool ReflectionSet::contains(const Reflection& t) const {
  return std::binary_search(members_.begin(), members_.end(), t);
}

std::string ReflectionSet::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += members_[i].to_string();
  }
  return s + "}";
}

bool is_noncrossing(const ReflectionSet& q) {
  const auto& m = q.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) {
      // Sorted order gives m[i].a < m[j].a (equal a is impossible for
      // commuting members), so a crossing is a < c < b < d exactly.
      if (m[i].a < m[j].a && m[j].a < m[i].b && m[i].b < m[j].b) return false;
    }
  return true;
}

bool is_dense(const ReflectionSet& q, std::vector<std::pair<int, int>>* blocks_out) {
  if (blocks_out) blocks_out->clear();
  if (q.empty()) return true;  // no blocks
  if (!is_noncrossing(q)) return false;
  int limit = 0;
  for (const Reflection& t : q.members()) limit = std::max(limit, t.b);
  std::vector<bool> in_supp(limit + 1, false);
  for (const Reflection& t : q.members()) in_supp[t.a] = in_supp[t.b] = true;
  int m = 1;
  while (m <= limit) {
    if (!in_supp[m]) {
      ++m;
      continue;
    }
    // The block starting at m must be closed by an arc (m, j) of Q and be
    // entirely inside the support.
    int j = -1;
    for (const Reflection& t : q.members())
      if (t.a == m) {
        j = t.b;
        break;
      }
    if (j < 0) return false;
    for (int x = m; x <= j; ++x)
      if (!in_supp[x]) return false;
    assert((j - m) % 2 == 1);  // blocks pair up their letters
    if (blocks_out) blocks_out->emplace_back(m, j);
    m = j + 1;
  }
  return true;
}

DenseSet::DenseSet(ReflectionSet q) : set_(std::move(q)) {
  if (!is_dense(set_, &blocks_))
    throw InputError("set is not dense: " + set_.to_string());
}

ReflectionSet update(const ReflectionSet& q, int i, int n) {
  check_rank(n);
  if (i < 1 || i > n) throw InputError("generator index out of range");
  for (const Reflection& t : q.members())
    if (t.b > n + 1) throw InputError("reflection out of range for rank");
  Reflection s = simple_reflection(i);
  std::vector<Reflection> kept, clash;
  for (const Reflection& t : q.members())
    (t.commutes_with(s) ? kept : clash).push_back(t);
  // Members are disjoint, so at most one touches i and one touches i+1.
  assert(clash.size() <= 2);
  kept.push_back(s);
  if (clash.size() == 2) {
    // Conjugate s by the product of the two clashing transpositions: the
    // free endpoints pair up into a new (usually long) reflection.
    const Reflection& t = (clash[0].a == i || clash[0].b == i) ? clash[0] : clash[1];
    const Reflection& u = (&t == &clash[0]) ? clash[1] : clash[0];
    assert(u.a == i + 1 || u.b == i + 1);
    int x = t.a == i ? t.b : t.a;
    int y = u.a == i + 1 ? u.b : u.a;
    kept.emplace_back(std::min(x, y), std::max(x, y));
  }
  return ReflectionSet(std::move(kept));
}

ReflectionSet dense_of_sequence(const Word& seq, int n) {
  check_word(seq, n);
  if (seq.empty()) throw InputError("dense_of_sequence needs a nonempty word");
  ReflectionSet q({simple_reflection(seq.back())});
  for (int k = static_cast<int>(seq.size()) - 2; k >= 0; --k)
    q = update(q, seq[k], n);
  return q;
}

namespace {

// Reflections of q lying inside [lo, hi].
std::vector<Reflection> restrict_to(const ReflectionSet& q, int lo, int hi) {
  std::vector<Reflection> r;
  for (const Reflection& t : q.members())
    if (t.a >= lo && t.b <= hi) r.push_back(t);
  return r;
}

void emit_sequence(const ReflectionSet& q, Word& out);

// Single block [m, j]: peel the closing arc (m, j), emit the interior
// recursively, then the ascending run of simple positions m, m+2, ..., j-1.
void emit_block(const ReflectionSet& sub, int m, int j, Word& out) {
  if (j == m + 1) {
    assert(sub.size() == 1);
    out.push_back(m);
    return;
  }
  assert(sub.contains(Reflection(m, j)));
  std::vector<Reflection> inner = restrict_to(sub, m + 1, j - 1);
  assert(static_cast<int>(inner.size()) == sub.size() - 1);
  emit_sequence(ReflectionSet(std::move(inner)), out);
  for (int k = m; k < j; k += 2) out.push_back(k);
}

void emit_sequence(const ReflectionSet& q, Word& out) {
  std::vector<std::pair<int, int>> blocks;
  bool dense = is_dense(q, &blocks);
  assert(dense);
  (void)dense;
  for (auto [m, j] : blocks) emit_block(ReflectionSet(restrict_to(q, m, j)), m, j, out);
}

}  // namespace

Word dense_to_sequence(const DenseSet& q) {
  if (q.reflections().empty())
    throw InputError("dense_to_sequence needs a nonempty set");
  Word out;
  emit_sequence(q.reflections(), out);
  return out;
}

std::vector<ReflectionSet> enumerate_noncrossing_commuting(int n) {
  check_rank(n);
  std::vector<ReflectionSet> out;
  std::vector<Reflection> cur;
  std::vector<bool> used(n + 2, false);
  // Walk the letters left to right; each is skipped or paired with a later
  // free letter.  This yields every partial matching exactly once.
  auto rec = [&](auto&& self, int p) -> void {
    if (p > n + 1) {
      ReflectionSet q(cur);
      if (is_noncrossing(q)) out.push_back(std::move(q));
      return;
    }
    if (used[p]) {
      self(self, p + 1);
      return;
    }
    self(self, p + 1);  // p unmatched
    for (int qq = p + 1; qq <= n + 1; ++qq) {
      if (used[qq]) continue;
      used[qq] = true;
      cur.emplace_back(p, qq);
      self(self, p + 1);
      cur.pop_back();
      used[qq] = false;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DenseSet> enumerate_dense(int n) {
  std::vector<DenseSet> out;
  for (ReflectionSet& q : enumerate_noncrossing_commuting(n))
    if (is_dense(q)) out.emplace_back(std::move(q));
  return out;
}

}  // namespace tlweyl
