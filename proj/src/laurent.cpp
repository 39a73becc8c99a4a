#include "tlweyl/laurent.hpp"

namespace tlweyl {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

LaurentPoly LaurentPoly::loop() {
  return monomial(0) + monomial(-2);
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_[e] = c;
    } else if ((it->second += c) == 0) {
      r.terms_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) {
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end()) {
        r.terms_[e1 + e2] = c1 * c2;
      } else if ((it->second += c1 * c2) == 0) {
        r.terms_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::times(std::int64_t c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (auto [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  LaurentPoly r = one();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest exponent first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || e == 0) s += std::to_string(a);
    if (e != 0) {
      if (a != 1) s += "*";
      s += "t^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace tlweyl
