#ifndef CURVEPENCIL_NUMBERFIELD_HPP
#define CURVEPENCIL_NUMBERFIELD_HPP

#include <memory>
#include <utility>
#include <vector>

#include "curvepencil/unipoly.hpp"

namespace curvepencil {

// Q[t]/(p(t)) for a monic irreducible p. Single extensions of Q only;
// conjugate data is kept symbolic through the minimal polynomial.
struct NumberField {
  QPoly minpoly;  // monic, irreducible over Q
  std::string var;

  NumberField(QPoly p, std::string v) : minpoly(std::move(p)), var(std::move(v)) {}
  int degree() const { return minpoly.degree(); }
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

NumberFieldPtr make_number_field(const QPoly& monic_irreducible, const std::string& var);

struct NFElem {
  NumberFieldPtr K;
  QPoly rep;  // degree < deg(minpoly)

  NFElem() = default;
  NFElem(NumberFieldPtr k, QPoly r) : K(std::move(k)), rep(std::move(r)) { reduce(); }

  void reduce();
  bool is_zero() const { return rep.is_zero(); }
  bool operator==(const NFElem& o) const { return rep == o.rep; }
  bool operator!=(const NFElem& o) const { return !(*this == o); }
};

NFElem nf_from_rat(const NumberFieldPtr& K, const Rat& a);
NFElem nf_generator(const NumberFieldPtr& K);  // the class of t
NFElem nf_inverse(const NFElem& a);

NFElem operator+(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a, const NFElem& b);
NFElem operator*(const NFElem& a, const NFElem& b);

inline NFElem zero_like(const NFElem& w) { return NFElem(w.K, QPoly()); }
inline NFElem one_like(const NFElem& w) { return NFElem(w.K, qpoly_const(Rat(1))); }
inline bool coeff_is_zero(const NFElem& a) { return a.is_zero(); }
inline NFElem exact_divide(const NFElem& a, const NFElem& b) { return a * nf_inverse(b); }

using NFPoly = UPoly<NFElem>;

NFPoly nf_lift_poly(const NumberFieldPtr& K, const QPoly& p);
// Evaluate a rational polynomial at an element of K.
NFElem nf_eval(const QPoly& p, const NFElem& x);

// Trager's method: norm by the resultant with the minimal polynomial, a
// squarefree shift, rational factorization, and gcds back in K[z].
std::vector<std::pair<NFPoly, int>> factor_nf(const NFPoly& h);
bool is_irreducible_nf(const NFPoly& h);

std::string nf_to_string(const NFElem& a);

}  // namespace curvepencil

#endif
