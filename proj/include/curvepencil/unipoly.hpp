#ifndef CURVEPENCIL_UNIPOLY_HPP
#define CURVEPENCIL_UNIPOLY_HPP

#include <vector>
#include <string>
#include <sstream>
#include <algorithm>
#include <cassert>

#include "curvepencil/rat.hpp"

namespace curvepencil {

// Dense univariate polynomials over an exact coefficient ring R, lowest
// degree first. The zero polynomial has an empty coefficient vector; the
// leading coefficient of a nonzero polynomial is always nonzero.
//
// R must provide +, -, *, ==, a default "ambient" construction through
// zero_like/one_like (so coefficient rings that carry context, like number
// field elements, can participate), and exact_divide where PRS code is used.

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool coeff_is_zero(const Rat& a) { return sgn(a) == 0; }
inline Rat exact_divide(const Rat& a, const Rat& b) {
  if (coeff_is_zero(b)) throw domain_error("division by zero");
  return a / b;
}

template <class R>
struct UPoly {
  std::vector<R> c;

  UPoly() = default;
  explicit UPoly(std::vector<R> cc) : c(std::move(cc)) { trim(); }

  void trim() {
    while (!c.empty() && coeff_is_zero(c.back())) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const R& lc() const {
    assert(!c.empty());
    return c.back();
  }
  // Coefficient access with an explicit zero witness for out-of-range reads.
  R coeff(int i, const R& zero_witness) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return zero_like(zero_witness);
    return c[static_cast<size_t>(i)];
  }

  bool operator==(const UPoly& o) const { return c == o.c; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }
};

using QPoly = UPoly<Rat>;

inline QPoly qpoly(std::vector<Rat> cc) { return QPoly(std::move(cc)); }
inline QPoly qpoly_const(const Rat& a) { return QPoly(std::vector<Rat>{a}); }
inline QPoly qpoly_x() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

template <class R>
UPoly<R> operator+(const UPoly<R>& a, const UPoly<R>& b) {
  std::vector<R> out = a.c;
  if (b.c.size() > out.size()) out.resize(b.c.size(), zero_like(b.c[0]));
  for (size_t i = 0; i < b.c.size(); i++) out[i] = out[i] + b.c[i];
  return UPoly<R>(std::move(out));
}

template <class R>
UPoly<R> neg(const UPoly<R>& a) {
  std::vector<R> out = a.c;
  for (auto& x : out) x = zero_like(x) - x;
  return UPoly<R>(std::move(out));
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a, const UPoly<R>& b) {
  return a + neg(b);
}

template <class R>
UPoly<R> operator*(const UPoly<R>& a, const UPoly<R>& b) {
  if (a.is_zero() || b.is_zero()) return UPoly<R>();
  std::vector<R> out(a.c.size() + b.c.size() - 1, zero_like(a.c[0]));
  for (size_t i = 0; i < a.c.size(); i++)
    for (size_t j = 0; j < b.c.size(); j++) out[i + j] = out[i + j] + a.c[i] * b.c[j];
  return UPoly<R>(std::move(out));
}

template <class R>
UPoly<R> scale(const UPoly<R>& a, const R& s) {
  std::vector<R> out = a.c;
  for (auto& x : out) x = x * s;
  return UPoly<R>(std::move(out));
}

// a * X^k
template <class R>
UPoly<R> shift_up(const UPoly<R>& a, int k) {
  if (a.is_zero()) return a;
  std::vector<R> out(a.c.size() + static_cast<size_t>(k), zero_like(a.c[0]));
  for (size_t i = 0; i < a.c.size(); i++) out[i + static_cast<size_t>(k)] = a.c[i];
  return UPoly<R>(std::move(out));
}

template <class R>
R eval(const UPoly<R>& a, const R& x) {
  R acc = zero_like(x);
  for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
  return acc;
}

template <class R, class S>
S eval_map(const UPoly<R>& a, const S& x, S (*lift)(const R&, const S&)) {
  S acc = zero_like(x);
  for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + lift(a.c[i], x);
  return acc;
}

template <class R>
UPoly<R> derivative(const UPoly<R>& a) {
  if (a.c.size() <= 1) return UPoly<R>();
  std::vector<R> out(a.c.size() - 1, zero_like(a.c[0]));
  for (size_t i = 1; i < a.c.size(); i++) {
    R k = zero_like(a.c[0]);
    for (size_t j = 0; j < i; j++) k = k + one_like(a.c[0]);
    out[i - 1] = a.c[i] * k;
  }
  return UPoly<R>(std::move(out));
}

inline QPoly derivative_q(const QPoly& a) {
  if (a.c.size() <= 1) return QPoly();
  std::vector<Rat> out(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); i++) out[i - 1] = a.c[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(out));
}

// Division with remainder over a field (R must have invert via exact_divide).
template <class R>
std::pair<UPoly<R>, UPoly<R>> divrem_field(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  UPoly<R> q, r = a;
  if (a.is_zero()) return {q, r};
  q.c.assign(static_cast<size_t>(std::max(0, a.degree() - b.degree() + 1)), zero_like(a.c[0]));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    R k = exact_divide(r.lc(), b.lc());
    int sh = r.degree() - b.degree();
    q.c[static_cast<size_t>(sh)] = q.c[static_cast<size_t>(sh)] + k;
    r = r - shift_up(scale(b, k), sh);
  }
  q.trim();
  return {q, r};
}

template <class R>
UPoly<R> monic(const UPoly<R>& a) {
  if (a.is_zero()) return a;
  R inv = exact_divide(one_like(a.lc()), a.lc());
  return scale(a, inv);
}

template <class R>
bool is_monic(const UPoly<R>& a) {
  return !a.is_zero() && a.lc() == one_like(a.lc());
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a,b).
template <class R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
  assert(!b.is_zero());
  UPoly<R> r = a;
  int e = a.degree() - b.degree() + 1;
  if (e <= 0) return r;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int sh = r.degree() - b.degree();
    UPoly<R> t = shift_up(scale(b, r.lc()), sh);
    r = scale(r, b.lc()) - t;
    e--;
  }
  // Normalize so the full power lc(b)^(delta+1) was applied regardless of
  // how many steps the loop took.
  for (; e > 0; e--) r = scale(r, b.lc());
  return r;
}

template <class R>
UPoly<R> gcd_field(UPoly<R> a, UPoly<R> b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem_field(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return monic(a);
}

// --- rational-coefficient specifics -------------------------------------

// Writes p = content * pp where pp has coprime integer coefficients and
// positive leading coefficient. Zero polynomial has content 0.
inline Rat rat_content(const QPoly& p) {
  if (p.is_zero()) return Rat(0);
  Int g(0), l(1);
  for (const auto& a : p.c) {
    if (sgn(a) == 0) continue;
    g = int_gcd(g, num(a));
    l = int_lcm(l, den(a));
  }
  Rat c = make_rat(g, l);
  if (sgn(p.lc()) < 0) c = -c;
  return c;
}

inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Rat c = rat_content(p);
  QPoly out = p;
  for (auto& a : out.c) a /= c;
  return out;
}

// gcd over Q through a primitive PRS on integer polynomials; result monic.
inline QPoly gcd_q(QPoly a, QPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : monic(b);
  if (b.is_zero()) return monic(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPoly r = prem(a, b);
    a = b;
    b = r.is_zero() ? r : primitive_part(r);
  }
  return monic(a);
}

inline QPoly squarefree_part_q(const QPoly& p) {
  if (p.is_zero() || p.degree() == 0) return monic(p);
  QPoly g = gcd_q(p, derivative_q(p));
  auto [q, r] = divrem_field(p, g);
  assert(r.is_zero());
  return monic(q);
}

inline bool is_squarefree_q(const QPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return gcd_q(p, derivative_q(p)).degree() == 0;
}

// Yun's algorithm; returns [(squarefree factor, multiplicity)], all factors
// monic, product over factor^mult times the returned scalar equals p.
inline std::pair<std::vector<std::pair<QPoly, int>>, Rat> yun_squarefree(const QPoly& p) {
  if (p.is_zero()) throw domain_error("squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  Rat lead = p.lc();
  QPoly f = monic(p);
  if (f.degree() == 0) return {out, lead};
  QPoly fp = derivative_q(f);
  QPoly a = gcd_q(f, fp);
  QPoly b = divrem_field(f, a).first;
  QPoly cpoly = divrem_field(fp, a).first;
  QPoly d = cpoly - derivative_q(b);
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = gcd_q(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = divrem_field(b, g).first;
    cpoly = divrem_field(d, g).first;
    d = cpoly - derivative_q(b);
    i++;
  }
  return {out, lead};
}

// --- resultants -----------------------------------------------------------

// Resultant by the subresultant PRS with the classical sign bookkeeping.
// Convention: res(p,q) = lc(p)^deg(q) * prod q(alpha) over the roots of p,
// which equals the Sylvester determinant with p-rows first.
template <class R>
R resultant(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero() || b.is_zero()) throw domain_error("resultant of zero polynomial");
  const R one = one_like(a.lc());
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = one;
    for (int i = 0; i < a.degree(); i++) r = r * b.lc();
    return negate ? zero_like(one) - r : r;
  }
  R g = one, h = one;
  while (true) {
    int d = a.degree(), e = b.degree();
    int delta = d - e;
    if ((d & 1) && (e & 1)) negate = !negate;
    UPoly<R> r = prem(a, b);
    a = b;
    R ghd = g;
    for (int i = 0; i < delta; i++) ghd = ghd * h;
    if (r.is_zero())
      b = r;
    else {
      std::vector<R> cc = r.c;
      for (auto& x : cc) x = exact_divide(x, ghd);
      b = UPoly<R>(std::move(cc));
    }
    if (b.is_zero()) return zero_like(one);  // positive-degree common factor
    g = a.lc();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      R gn = one;
      for (int i = 0; i < delta; i++) gn = gn * g;
      R hn = one;
      for (int i = 0; i < delta - 1; i++) hn = hn * h;
      h = exact_divide(gn, hn);
    }
    if (b.degree() == 0) {
      int dd = a.degree();
      R t = one;
      for (int i = 0; i < dd; i++) t = t * b.lc();
      R hd = one;
      for (int i = 0; i < dd - 1; i++) hd = hd * h;
      R res = dd >= 1 ? exact_divide(t, hd) : t;
      return negate ? zero_like(one) - res : res;
    }
  }
}

// QPoly itself acts as a coefficient ring (bivariate resultants, Trager norms).
inline QPoly zero_like(const QPoly&) { return QPoly(); }
inline QPoly one_like(const QPoly&) { return qpoly_const(Rat(1)); }
inline bool coeff_is_zero(const QPoly& a) { return a.is_zero(); }
inline QPoly exact_divide(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem_field(a, b);
  if (!r.is_zero()) throw domain_error("inexact polynomial division");
  return q;
}

// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p)
inline Rat discriminant_q(const QPoly& p) {
  if (p.degree() < 1) throw domain_error("discriminant needs degree >= 1");
  if (p.degree() == 1) return Rat(1);
  Rat r = resultant(p, derivative_q(p));
  r /= p.lc();
  int n = p.degree();
  if (((n * (n - 1)) / 2) & 1) r = -r;
  return r;
}

// --- cyclotomic polynomials ------------------------------------------------

QPoly cyclotomic(int n);

// --- printing ---------------------------------------------------------------

std::string upoly_to_string(const QPoly& p, const std::string& var);

}  // namespace curvepencil

#endif
