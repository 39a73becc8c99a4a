#include "tlweyl/reflection.hpp"

#include <algorithm>

#include "tlweyl/errors.hpp"

namespace tlweyl {

Reflection::Reflection(int a_, int b_) : a(a_), b(b_) {
  if (a_ < 1 || b_ <= a_) throw InputError("reflection needs 1 <= a < b");
}

bool Reflection::commutes_with(const Reflection& o) const {
  if (*this == o) return true;
  return a != o.a && a != o.b && b != o.a && b != o.b;
}

Reflection Reflection::conjugate_by(const Permutation& g) const {
  int x = g.image(a), y = g.image(b);
  return Reflection(std::min(x, y), std::max(x, y));
}

std::string Reflection::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<Reflection> all_reflections(int n) {
  check_rank(n);
  std::vector<Reflection> r;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n + 1; ++b) r.emplace_back(a, b);
  return r;
}

}  // namespace tlweyl
