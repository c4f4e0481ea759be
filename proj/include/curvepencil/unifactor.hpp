#ifndef CURVEPENCIL_UNIFACTOR_HPP
#define CURVEPENCIL_UNIFACTOR_HPP

#include <vector>

#include "curvepencil/unipoly.hpp"

namespace curvepencil {

struct QFactor {
  QPoly monic;        // monic irreducible factor over Q
  QPoly primitive_z;  // same factor with coprime integer coefficients, lc > 0
  int multiplicity = 1;
};

// p == content * prod primitive_z[i]^multiplicity[i]
//   == lead    * prod monic[i]^multiplicity[i]
struct QFactorization {
  std::vector<QFactor> factors;
  Rat content;
  Rat lead;

  QPoly expand_primitive() const;
};

// Zassenhaus: squarefree decomposition, factorization modulo a small prime,
// Hensel lifting, naive subset recombination. Intended for desk-scale
// degrees (<= ~20 after squarefree splitting).
QFactorization factor_rational(const QPoly& p);

bool is_irreducible_q(const QPoly& p);

}  // namespace curvepencil

#endif
