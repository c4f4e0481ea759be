#ifndef CURVEPENCIL_RAT_HPP
#define CURVEPENCIL_RAT_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace curvepencil {

// Exact scalars. Rat is always kept canonical (gcd(num,den)=1, den>=1);
// mpq_class maintains this through arithmetic, and every entry point that
// builds a Rat from raw parts canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Int& num(const Rat& r) { return r.get_num(); }
inline const Int& den(const Rat& r) { return r.get_den(); }
inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

inline Int int_pow(Int base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return out;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Int exact_div(const Int& a, const Int& b) {
  Int out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Parses "p" or "p/q" with optional sign.
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace curvepencil

#endif
