#include "tlweyl/permutation.hpp"

#include <numeric>

#include "tlweyl/errors.hpp"

namespace tlweyl {

Permutation::Permutation(int n) {
  check_rank(n);
  img_.resize(n + 1);
  std::iota(img_.begin(), img_.end(), std::uint8_t{1});
}

Permutation::Permutation(std::vector<int> one_line) {
  int deg = static_cast<int>(one_line.size());
  check_rank(deg - 1);
  std::vector<bool> seen(deg, false);
  img_.reserve(deg);
  for (int v : one_line) {
    if (v < 1 || v > deg || seen[v - 1])
      throw InputError("one-line notation is not a bijection on 1..n+1");
    seen[v - 1] = true;
    img_.push_back(static_cast<std::uint8_t>(v));
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw InputError("rank mismatch in product");
  Permutation r(rank());
  for (int x = 1; x <= degree(); ++x)
    r.img_[x - 1] = img_[rhs.img_[x - 1] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(rank());
  for (int x = 1; x <= degree(); ++x) r.img_[img_[x - 1] - 1] = x;
  return r;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (img_[x - 1] != x) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

Permutation Permutation::left_mul_simple(int i) const {
  if (i < 1 || i > rank()) throw InputError("generator index out of range");
  Permutation r = *this;
  for (auto& v : r.img_) {
    if (v == i) v = static_cast<std::uint8_t>(i + 1);
    else if (v == i + 1) v = static_cast<std::uint8_t>(i);
  }
  return r;
}

Permutation Permutation::right_mul_simple(int i) const {
  if (i < 1 || i > rank()) throw InputError("generator index out of range");
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

bool Permutation::has_left_descent(int i) const {
  // length(s_i w) < length(w) iff i appears after i+1 in the one-line word.
  int pos_i = 0, pos_i1 = 0;
  for (int p = 0; p < degree(); ++p) {
    if (img_[p] == i) pos_i = p;
    else if (img_[p] == i + 1) pos_i1 = p;
  }
  return pos_i > pos_i1;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (int p = 0; p < degree(); ++p) {
    if (p) s += ',';
    s += std::to_string(img_[p]);
  }
  return s + ")";
}

Permutation simple_transposition(int i, int n) {
  check_rank(n);
  if (i < 1 || i > n) throw InputError("generator index out of range");
  return Permutation(n).right_mul_simple(i);
}

}  // namespace tlweyl
