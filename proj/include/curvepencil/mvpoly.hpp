#ifndef CURVEPENCIL_MVPOLY_HPP
#define CURVEPENCIL_MVPOLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvepencil/unipoly.hpp"

namespace curvepencil {

// Fixed variable universe. x,y,z carry weight 1 (the projective grading);
// t is the pencil parameter and w,s are internal helper variables, all of
// weight 0. Every polynomial lives in a subring given by a variable mask,
// and monomial slots never get remapped.
constexpr int kNumVars = 6;
enum Var : int { VX = 0, VY = 1, VZ = 2, VT = 3, VW = 4, VS = 5 };
constexpr char kVarName[kNumVars] = {'x', 'y', 'z', 't', 'w', 's'};
constexpr int kVarWeight[kNumVars] = {1, 1, 1, 0, 0, 0};

constexpr uint8_t mask_of(Var v) { return static_cast<uint8_t>(1u << v); }
constexpr uint8_t kMaskXYZ = mask_of(VX) | mask_of(VY) | mask_of(VZ);
constexpr uint8_t kMaskXYZT = kMaskXYZ | mask_of(VT);

struct Mono {
  std::array<uint8_t, kNumVars> e{};

  int wdeg() const {
    int d = 0;
    for (int i = 0; i < kNumVars; i++) d += kVarWeight[i] * e[i];
    return d;
  }
  int deg_all() const {
    int d = 0;
    for (int i = 0; i < kNumVars; i++) d += e[i];
    return d;
  }
  bool divides(const Mono& m) const {
    for (int i = 0; i < kNumVars; i++)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Mono mul(const Mono& m) const {
    Mono r;
    for (int i = 0; i < kNumVars; i++) r.e[i] = static_cast<uint8_t>(e[i] + m.e[i]);
    return r;
  }
  Mono div(const Mono& m) const {
    Mono r;
    for (int i = 0; i < kNumVars; i++) r.e[i] = static_cast<uint8_t>(e[i] - m.e[i]);
    return r;
  }
  static Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kNumVars; i++) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  static Mono unit() { return Mono{}; }
  static Mono var(int v, int k = 1) {
    Mono r;
    r.e[v] = static_cast<uint8_t>(k);
    return r;
  }
  bool is_unit() const {
    for (int i = 0; i < kNumVars; i++)
      if (e[i]) return false;
    return true;
  }
  bool coprime(const Mono& m) const {
    for (int i = 0; i < kNumVars; i++)
      if (e[i] && m.e[i]) return false;
    return true;
  }
  bool operator==(const Mono&) const = default;
};

// Term orders are block orders: compare block by block, each block either
// degree-reverse-lexicographic or lexicographic in the listed variables
// (variable precedence = listed order).
struct Order {
  struct Block {
    std::vector<int> vars;
    bool lex = false;
  };
  std::vector<Block> blocks;

  // >0 when a comes after b in the order (a > b), <0 when a < b, 0 if equal.
  int cmp(const Mono& a, const Mono& b) const;
};

Order order_grevlex(uint8_t mask);
// Eliminates front_mask: any monomial containing a front variable beats all
// monomials without; remaining comparison grevlex within each group.
Order order_elim(uint8_t front_mask, uint8_t back_mask);
Order order_lex(const std::vector<int>& vars);

// canonical order used for storing and printing polynomials
int canon_cmp(const Mono& a, const Mono& b);

struct MPoly {
  uint8_t mask = 0;
  std::vector<std::pair<Mono, Rat>> terms;  // canon-desc sorted, nonzero coeffs

  bool is_zero() const { return terms.empty(); }
  int nterms() const { return static_cast<int>(terms.size()); }
  // weighted degree (x,y,z count, parameters do not); -1 for zero
  int wdeg() const;
  // max total degree including weight-0 variables
  int deg_all() const;
  bool is_homogeneous() const;  // constant weighted degree across terms
  bool uses(int v) const;
  bool operator==(const MPoly&) const = default;
};

MPoly mp_zero(uint8_t mask);
MPoly mp_const(uint8_t mask, const Rat& c);
MPoly mp_var(uint8_t mask, int v);
MPoly mp_term(uint8_t mask, const Mono& m, const Rat& c);

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly neg(const MPoly& a);
MPoly scale(const MPoly& a, const Rat& c);
MPoly mp_pow(const MPoly& a, int k);
MPoly derivative(const MPoly& a, int v);
MPoly subst_const(const MPoly& a, int v, const Rat& c);   // v := c (mask keeps v out)
MPoly subst_poly(const MPoly& a, int v, const MPoly& g);  // v := g
Rat mp_eval(const MPoly& a, const std::array<Rat, kNumVars>& pt);

// content/primitive: c rational, p = c * primitive with coprime integer
// coefficients and positive leading (canonical order) coefficient
Rat mp_content(const MPoly& a);
MPoly mp_primitive(const MPoly& a);

std::string mp_to_string(const MPoly& a);

// conversions for chart work: poly in main var v with coefficients in Q[cv]
UPoly<QPoly> to_bivariate(const MPoly& a, int main_var, int coeff_var);
MPoly from_bivariate(const UPoly<QPoly>& p, int main_var, int coeff_var, uint8_t mask);
QPoly to_univariate(const MPoly& a, int v);
MPoly from_univariate(const QPoly& p, int v, uint8_t mask);

// gcd of polynomials in at most two effective variables, plus the
// homogeneous trivariate case (strip monomial content, set z=1, lift back).
MPoly gcd_mv(const MPoly& a, const MPoly& b);

// --- parsing ---------------------------------------------------------------

struct ParseError : std::runtime_error {
  size_t column;
  ParseError(const std::string& msg, size_t col)
      : std::runtime_error(msg + " (column " + std::to_string(col + 1) + ")"), column(col) {}
};

// Grammar: rational coefficients, variables x,y,z,t, operators + - * ^ and
// parentheses; whitespace-insensitive; juxtaposition acts as multiplication.
MPoly parse_poly(const std::string& text, uint8_t mask = kMaskXYZT);

// --- homogeneous wrapper -----------------------------------------------------

// A nonzero polynomial all of whose terms share one weighted degree.
struct HomPoly {
  MPoly p;
  int degree = 0;

  HomPoly() = default;
  explicit HomPoly(const MPoly& q);
  const MPoly& poly() const { return p; }
};

HomPoly hom(const MPoly& p);
HomPoly parse_hom(const std::string& text, uint8_t mask = kMaskXYZT);

std::array<HomPoly, 3> jacobian(const HomPoly& f);
bool is_reduced(const HomPoly& f);  // gcd(f, f_x, f_y, f_z) constant

struct Pencil {
  HomPoly q1, q2;
  int k = 0;

  Pencil(const HomPoly& a, const HomPoly& b);
};

// prod over roots t_i of p of (q1 + t_i q2), computed by Viete as
// sum_j pv_j q1^j q2^(e-j) with pv(s) = (-1)^e p(-s); p must be monic
// squarefree. Degree e*k.
HomPoly pencil_compose(const QPoly& p, const Pencil& P);

// member q1 + t*q2 with symbolic parameter (mask gains t)
MPoly pencil_member_generic(const Pencil& P);
MPoly pencil_member_at(const Pencil& P, const Rat& t);

}  // namespace curvepencil

#endif
