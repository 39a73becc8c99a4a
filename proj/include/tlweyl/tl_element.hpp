#ifndef TLWEYL_TL_ELEMENT_HPP
#define TLWEYL_TL_ELEMENT_HPP

#include <map>

#include "tlweyl/coxeter.hpp"
#include "tlweyl/diagram.hpp"
#include "tlweyl/laurent.hpp"
#include "tlweyl/permutation.hpp"

namespace tlweyl {

// An element of the diagram algebra of rank n over integer Laurent
// polynomials in tau: a finite sum of diagrams with nonzero coefficients.
class TLElement {
 public:
  explicit TLElement(int n);  // zero
  static TLElement unit(int n);
  static TLElement generator(int i, int n);  // b_i
  static TLElement from_diagram(const TLDiagram& d,
                                const LaurentPoly& c = LaurentPoly::one());

  int rank() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<TLDiagram, LaurentPoly>& terms() const { return coeffs_; }
  LaurentPoly coeff(const TLDiagram& d) const;

  TLElement operator+(const TLElement& o) const;
  TLElement operator*(const TLElement& o) const;  // left factor on top
  TLElement scale(const LaurentPoly& c) const;

  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int n_;
  std::map<TLDiagram, LaurentPoly> coeffs_;
};

// Product b_{i_1} ... b_{i_k} of generators, evaluated left to right.
// Always a single diagram times loop^circles.
struct GeneratorProduct {
  int circles = 0;
  TLDiagram diagram;
};
GeneratorProduct generator_product(const Word& seq, int n);

// The diagram basis element attached to a fully commutative p: the product
// of generator diagrams along any reduced word, which accumulates no circles.
// Non-fully-commutative p -> DomainError.
TLDiagram kl_basis_of_fc(const Permutation& p);

// Inverse of the above: the unique fully commutative element whose basis
// diagram is d (every rank-n diagram arises exactly once).
Permutation fc_element_of_diagram(const TLDiagram& d);

}  // namespace tlweyl

#endif
