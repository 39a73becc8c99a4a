#include "tlweyl/tl_element.hpp"

#include <cassert>
#include <map>

#include "tlweyl/errors.hpp"

namespace tlweyl {

TLElement::TLElement(int n) : n_(n) { check_rank(n); }

TLElement TLElement::unit(int n) { return from_diagram(identity_diagram(n)); }

TLElement TLElement::generator(int i, int n) {
  return from_diagram(generator_diagram(i, n));
}

TLElement TLElement::from_diagram(const TLDiagram& d, const LaurentPoly& c) {
  TLElement e(d.rank());
  if (!c.is_zero()) e.coeffs_.emplace(d, c);
  return e;
}

LaurentPoly TLElement::coeff(const TLDiagram& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

TLElement TLElement::operator+(const TLElement& o) const {
  if (n_ != o.n_) throw InputError("rank mismatch in sum");
  TLElement r = *this;
  for (const auto& [d, c] : o.coeffs_) {
    auto it = r.coeffs_.find(d);
    if (it == r.coeffs_.end()) {
      r.coeffs_.emplace(d, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

TLElement TLElement::operator*(const TLElement& o) const {
  if (n_ != o.n_) throw InputError("rank mismatch in product");
  TLElement r(n_);
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_) {
      DiagramProduct p = multiply_diagrams(d1, d2);
      LaurentPoly c = c1 * c2 * LaurentPoly::loop().pow(p.circles);
      auto it = r.coeffs_.find(p.diagram);
      if (it == r.coeffs_.end()) {
        r.coeffs_.emplace(p.diagram, c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  return r;
}

TLElement TLElement::scale(const LaurentPoly& c) const {
  TLElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : coeffs_) r.coeffs_.emplace(d, v * c);
  return r;
}

GeneratorProduct generator_product(const Word& seq, int n) {
  check_word(seq, n);
  GeneratorProduct acc{0, identity_diagram(n)};
  for (int i : seq) {
    DiagramProduct p = multiply_diagrams(acc.diagram, generator_diagram(i, n));
    acc.circles += p.circles;
    acc.diagram = p.diagram;
  }
  return acc;
}

TLDiagram kl_basis_of_fc(const Permutation& p) {
  if (!is_fully_commutative(p))
    throw DomainError("element " + p.to_string() + " is not fully commutative");
  GeneratorProduct gp = generator_product(lex_min_reduced_word(p), p.rank());
  // Along a reduced word of a fully commutative element no loop ever closes.
  assert(gp.circles == 0);
  return gp.diagram;
}

Permutation fc_element_of_diagram(const TLDiagram& d) {
  // Lazily built inverse table per rank; the diagram map is a bijection from
  // fully commutative elements to all rank-n diagrams.
  static std::map<int, std::map<TLDiagram, Permutation>> cache;
  auto& table = cache[d.rank()];
  if (table.empty()) {
    for (const Permutation& p : enumerate_fully_commutative(d.rank()))
      table.emplace(kl_basis_of_fc(p), p);
  }
  auto it = table.find(d);
  if (it == table.end()) throw DomainError("diagram has no basis element");
  return it->second;
}

}  // namespace tlweyl
