#ifndef CURVEPENCIL_GROEBNER_HPP
#define CURVEPENCIL_GROEBNER_HPP

#include <optional>
#include <vector>

#include "curvepencil/mvpoly.hpp"

namespace curvepencil {

// Elements of free modules S^r are coefficient vectors of MPoly; ideals are
// the rank-1 case. Leading data lives in (monomial, position) pairs.

struct ModOrder {
  Order ring;
  std::vector<int> shift;  // per position, usually the generator degrees
  bool pos0_first = false; // syzygy computations: component 0 dominates

  // compare module monomials; >0 when a > b
  int cmp(const Mono& ma, int pa, const Mono& mb, int pb) const;
};

struct GBTerm {
  Mono m;
  int pos = 0;
  Int c;
};

struct GBElem {
  std::vector<GBTerm> t;  // sorted descending, integer primitive, lc > 0
  int sugar = 0;
  const GBTerm& lt() const { return t.front(); }
};

// A cached reduced Groebner basis for a fixed module order.
struct GBasis {
  ModOrder ord;
  int rank = 1;
  std::vector<GBElem> g;

  std::vector<std::vector<MPoly>> elements(uint8_t mask) const;
  std::vector<MPoly> ideal_elements(uint8_t mask) const;
};

// ---- conversions -------------------------------------------------------------

GBElem to_gb_elem(const std::vector<MPoly>& comps, const ModOrder& ord);
std::vector<MPoly> from_gb_elem(const GBElem& e, int rank, uint8_t mask);

// ---- engine -------------------------------------------------------------------

// Buchberger with the Gebauer-Moeller pair update. The product criterion is
// applied only in rank 1 where it is valid. Output is the unique reduced
// basis for the order (elements primitive over Z, positive leading
// coefficients, sorted by leading term).
GBasis groebner_module(const std::vector<std::vector<MPoly>>& gens, const ModOrder& ord, int rank);
GBasis groebner_ideal(const std::vector<MPoly>& gens, const Order& ord);

// exact normal form over Q (the unique reduced representative)
MPoly nf_ideal(const MPoly& f, const GBasis& gb);
bool in_ideal(const MPoly& f, const GBasis& gb);

// every S-polynomial of the basis reduces to zero (full verification)
bool verify_buchberger(const GBasis& gb);

// ---- spec-level ideal type ----------------------------------------------------

struct GradedIdeal {
  std::vector<MPoly> gens;
  Order order;
  std::optional<GBasis> cached;

  GradedIdeal(std::vector<MPoly> g, Order o) : gens(std::move(g)), order(std::move(o)) {}
  const GBasis& basis();
};

GradedIdeal ideal_grevlex(const std::vector<MPoly>& gens, uint8_t mask);

// I : f^inf via the extra-variable trick (I + (1 - w f)) eliminating w.
// refuses to run if f uses the helper variable.
std::vector<MPoly> saturate_by_poly(const std::vector<MPoly>& gens, const MPoly& f, uint8_t mask);
// I : J^inf = ((I : j1^inf) : j2^inf) ... for J = (j1..jr)
std::vector<MPoly> saturate(const std::vector<MPoly>& gens, const std::vector<MPoly>& jgens, uint8_t mask);
// oracle variant: iterated colon I : f, (I:f) : f, ... until stable
std::vector<MPoly> saturate_by_poly_colon(const std::vector<MPoly>& gens, const MPoly& f, uint8_t mask);

// intersection of two ideals (auxiliary variable w)
std::vector<MPoly> ideal_intersect(const std::vector<MPoly>& a, const std::vector<MPoly>& b, uint8_t mask);

// generator of I cap Q[t], squarefree-normalized; nullopt when the
// elimination ideal is zero
std::optional<QPoly> eliminate_to_t(const std::vector<MPoly>& gens, uint8_t mask);

// ---- syzygies -----------------------------------------------------------------

struct SyzygyModule {
  // generators (a,b,c) with a g1 + b g2 + c g3 = 0; degrees are the common
  // coefficient degree (inputs must share one degree), sorted ascending
  std::vector<std::array<MPoly, 3>> gens;
  std::vector<int> degrees;
  // full Groebner basis of the syzygy module (for Hilbert queries)
  std::vector<std::array<MPoly, 3>> basis;
  std::vector<int> basis_degrees;
};

SyzygyModule syzygies(const HomPoly& g1, const HomPoly& g2, const HomPoly& g3);

}  // namespace curvepencil

#endif
