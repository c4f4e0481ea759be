#ifndef CURVEPENCIL_LINALG_HPP
#define CURVEPENCIL_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "curvepencil/rat.hpp"

namespace curvepencil {

// ---- exact rational linear algebra ----------------------------------------

using QVec = std::vector<Rat>;

// Row echelon accumulator with unit pivots; rows stay fully reduced against
// each other, so membership tests are a single sweep.
struct QEchelon {
  std::vector<QVec> rows;
  std::vector<int> pivcol;
  int ncols = 0;

  explicit QEchelon(int cols) : ncols(cols) {}
  int rank() const { return static_cast<int>(rows.size()); }
  // reduces v in place against the echelon
  void reduce(QVec& v) const;
  // returns true if v was independent (and absorbed)
  bool add(QVec v);
  bool in_span(QVec v) const;
};

// kernel of the system {rows . v = 0}: basis of primitive integer vectors
std::vector<std::vector<Int>> kernel_exact(const std::vector<QVec>& rows, int ncols);

int rank_exact(const std::vector<QVec>& rows, int ncols);

// ---- arithmetic mod a word-size prime --------------------------------------

struct PrimeField {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
};

// deterministic sequence of ~62-bit primes
uint64_t nth_linalg_prime(int i);

// num * inv(den) mod p; empty when den vanishes mod p (bad prime)
std::optional<uint64_t> rat_mod_p(const Rat& a, const PrimeField& F);
uint64_t int_mod_p(const Int& a, uint64_t p);

using PVec = std::vector<uint64_t>;

struct PEchelon {
  const PrimeField F;
  std::vector<PVec> rows;
  std::vector<int> pivcol;
  int ncols = 0;

  PEchelon(uint64_t p, int cols) : F{p}, ncols(cols) {}
  int rank() const { return static_cast<int>(rows.size()); }
  void reduce(PVec& v) const;
  bool add(PVec v);
};

// reduced-row-echelon kernel basis mod p (deterministic: free columns in
// increasing order, pivot entries normalized to 1)
std::vector<PVec> kernel_mod_p(const std::vector<PVec>& rows, int ncols, uint64_t p);

// ---- reconstruction ---------------------------------------------------------

// rational number with |num|, den <= sqrt(m/2) congruent to a mod m
std::optional<Rat> rat_reconstruct(const Int& a, const Int& m);

// chinese remainder: value mod m1*m2 from residues mod coprime m1, m2
Int crt_pair(const Int& a1, const Int& m1, const Int& a2, const Int& m2);

}  // namespace curvepencil

#endif
