#ifndef CURVEPENCIL_HILBERT_HPP
#define CURVEPENCIL_HILBERT_HPP

#include <optional>

#include "curvepencil/groebner.hpp"

namespace curvepencil {

// Hilbert series of a graded quotient S/I, S spanned by the weight-1
// variables x,y,z and optionally the weight-0 parameter t (which must then
// be nilpotent modulo the leading-term ideal, e.g. through p(t) in I).
// HS(S/I) = numerator(T) / (1-T)^3, dimensions counted over Q.
struct HilbertSeries {
  QPoly numerator;

  Int value_at(int a) const;   // dim_Q (S/I)_a
  int pole_order() const;      // 3 - (multiplicity of T=1 in numerator)
  bool eventually_constant() const { return pole_order() <= 1; }
  // the eventual constant value (0 when the quotient dies out)
  Int stabilized_value() const;
};

HilbertSeries hilbert_series(const GBasis& gb, uint8_t ring_mask);

// dim_Q (S/I)_a through the cached basis of a graded ideal
Int hilbert_function(GradedIdeal& I, int a);

// total number of standard monomials (affine 0-dimensional quotients);
// nullopt when infinite
std::optional<Int> quotient_dimension_affine(const GBasis& gb, uint8_t ring_mask);

// numerator of the Hilbert series of Q[x,y,z]/(monomial ideal)
QPoly hilbert_numerator_xyz(std::vector<Mono> gens);

// dimension of a graded syzygy-module slice at coefficient degree r, from
// the leading terms of a Groebner basis of the module (generators of common
// degree gen_degree sit in positions 1..3 of the augmented module order)
int syzygy_slice_dim(const SyzygyModule& syz, int gen_degree, int r);

}  // namespace curvepencil

#endif
