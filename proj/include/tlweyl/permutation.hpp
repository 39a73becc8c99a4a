#ifndef TLWEYL_PERMUTATION_HPP
#define TLWEYL_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tlweyl {

// Permutation of {1, ..., n+1} in one-line notation: image(x) is the image of
// the letter x.  Products compose as functions, (u * v)(x) = u(v(x)).
class Permutation {
 public:
  explicit Permutation(int n);                       // identity on n+1 letters
  explicit Permutation(std::vector<int> one_line);   // validates a bijection

  int rank() const { return static_cast<int>(img_.size()) - 1; }
  int degree() const { return static_cast<int>(img_.size()); }  // n+1
  int image(int x) const { return img_[x - 1]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Coxeter length = number of inversions (i < j with image(i) > image(j)).
  int length() const;

  // Left/right multiplication by the simple transposition s_i = (i, i+1):
  // left swaps the *values* i, i+1; right swaps positions i, i+1.
  Permutation left_mul_simple(int i) const;
  Permutation right_mul_simple(int i) const;
  bool has_left_descent(int i) const;   // length(s_i * w) < length(w)

  const std::vector<std::uint8_t>& one_line() const { return img_; }
  std::string to_string() const;  // "(3,1,4,2)"

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;  // img_[x-1] = image of x, values 1..n+1
};

Permutation simple_transposition(int i, int n);

}  // namespace tlweyl

#endif
