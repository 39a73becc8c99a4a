#ifndef TLWEYL_LAURENT_HPP
#define TLWEYL_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace tlweyl {

// Integer Laurent polynomial in one variable tau, stored as a sparse
// exponent -> coefficient map with no zero entries.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);
  static LaurentPoly one() { return monomial(0); }
  // 1 + tau^{-2}, the loop value.
  static LaurentPoly loop();

  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly times(std::int64_t c) const;
  LaurentPoly pow(int k) const;  // k >= 0

  std::string to_string() const;  // "1 + 2*t^-2 + t^-4"

  friend auto operator<=>(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace tlweyl

#endif
