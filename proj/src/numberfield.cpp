#include "curvepencil/numberfield.hpp"

#include "curvepencil/unifactor.hpp"

namespace curvepencil {

NumberFieldPtr make_number_field(const QPoly& p, const std::string& var) {
  if (!is_monic(p) || p.degree() < 1) throw domain_error("number field: minimal polynomial must be monic of degree >= 1");
  return std::make_shared<const NumberField>(p, var);
}

void NFElem::reduce() {
  if (!K) throw domain_error("number field element without a field");
  if (!rep.is_zero() && rep.degree() >= K->minpoly.degree()) rep = divrem_field(rep, K->minpoly).second;
}

NFElem nf_from_rat(const NumberFieldPtr& K, const Rat& a) {
  return NFElem(K, sgn(a) == 0 ? QPoly() : qpoly_const(a));
}

NFElem nf_generator(const NumberFieldPtr& K) { return NFElem(K, qpoly_x()); }

NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(a.K ? a.K : b.K, a.rep + b.rep); }
NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(a.K ? a.K : b.K, a.rep - b.rep); }
NFElem operator*(const NFElem& a, const NFElem& b) { return NFElem(a.K ? a.K : b.K, a.rep * b.rep); }

// Extended Euclid in Q[t]: returns (g, u, v) monic with u*a + v*b = g.
static void ext_gcd_q(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
  QPoly r0 = a, r1 = b;
  QPoly u0 = qpoly_const(Rat(1)), u1;
  QPoly v0, v1 = qpoly_const(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divrem_field(r0, r1);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = r1;
    r1 = r2;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  Rat ilc = Rat(1) / r0.lc();
  g = scale(r0, ilc);
  u = scale(u0, ilc);
  v = scale(v0, ilc);
}

NFElem nf_inverse(const NFElem& a) {
  if (a.is_zero()) throw domain_error("inverse of zero in number field");
  QPoly g, u, v;
  ext_gcd_q(a.rep, a.K->minpoly, g, u, v);
  if (g.degree() != 0) throw domain_error("number field: minimal polynomial not irreducible");
  // certificate: u*rep + v*minpoly = 1, so u is the inverse mod minpoly
  NFElem inv(a.K, u);
  assert((inv * a) == one_like(a));
  return inv;
}

NFPoly nf_lift_poly(const NumberFieldPtr& K, const QPoly& p) {
  std::vector<NFElem> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); i++) c[i] = nf_from_rat(K, p.c[i]);
  return NFPoly(std::move(c));
}

NFElem nf_eval(const QPoly& p, const NFElem& x) {
  NFElem acc = zero_like(x);
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + nf_from_rat(x.K, p.c[i]);
  return acc;
}

// ---- coefficient-ring overloads so UPoly<QPoly> works in resultants ----

// (declared here; resultants over Q[t] coefficients appear in Trager's norm
// and in chart eliminations elsewhere)

namespace {

// view h in K[z] as an element of Q[z][t]: t-major for the resultant with
// the minimal polynomial
UPoly<QPoly> as_t_major(const NFPoly& h) {
  int tdeg = 0;
  for (const auto& c : h.c) tdeg = std::max(tdeg, c.rep.degree());
  std::vector<QPoly> tc(static_cast<size_t>(tdeg) + 1);
  for (int i = 0; i <= tdeg; i++) {
    std::vector<Rat> zc(h.c.size(), Rat(0));
    for (size_t j = 0; j < h.c.size(); j++) zc[j] = h.c[j].rep.coeff(i, Rat(0));
    tc[static_cast<size_t>(i)] = QPoly(std::move(zc));
  }
  return UPoly<QPoly>(std::move(tc));
}

NFPoly shift_arg_by_alpha(const NFPoly& h, long s) {
  // h(z + s*alpha)
  if (s == 0) return h;
  const NFElem one = one_like(h.lc());
  NFElem salpha = nf_generator(h.lc().K) * nf_from_rat(h.lc().K, Rat(s));
  NFPoly z_plus(std::vector<NFElem>{salpha, one});
  NFPoly acc;
  for (size_t i = h.c.size(); i-- > 0;) {
    acc = acc * z_plus;
    acc = acc + NFPoly(std::vector<NFElem>{h.c[i]});
  }
  return acc;
}

}  // namespace

static std::vector<NFPoly> factor_squarefree_nf(const NFPoly& hin) {
  std::vector<NFPoly> out;
  NFPoly h = monic(hin);
  if (h.degree() <= 1) {
    if (h.degree() == 1) out.push_back(h);
    return out;
  }
  NumberFieldPtr K = h.lc().K;
  UPoly<QPoly> pt;  // minimal polynomial as a constant-in-z element of Q[z][t]
  {
    std::vector<QPoly> tc(K->minpoly.c.size());
    for (size_t i = 0; i < K->minpoly.c.size(); i++) tc[i] = qpoly_const(K->minpoly.c[i]);
    pt = UPoly<QPoly>(std::move(tc));
  }
  for (long s = 0;; s++) {
    NFPoly hs = shift_arg_by_alpha(h, s);
    UPoly<QPoly> ht = as_t_major(hs);
    QPoly norm = resultant(pt, ht);
    if (norm.is_zero()) continue;
    if (!is_squarefree_q(norm)) continue;
    QFactorization nf = factor_rational(norm);
    if (nf.factors.size() == 1 && nf.factors[0].monic.degree() == norm.degree()) {
      out.push_back(h);  // norm irreducible => h irreducible over K
      return out;
    }
    for (const auto& f : nf.factors) {
      NFPoly lifted = shift_arg_by_alpha(nf_lift_poly(K, f.monic), -s);
      NFPoly g = gcd_field(h, lifted);
      if (g.degree() >= 1) out.push_back(monic(g));
    }
    return out;
  }
}

std::vector<std::pair<NFPoly, int>> factor_nf(const NFPoly& hin) {
  if (hin.is_zero()) throw domain_error("factor_nf: zero polynomial");
  std::vector<std::pair<NFPoly, int>> out;
  NFPoly h = monic(hin);
  if (h.degree() == 0) return out;
  NFPoly g = gcd_field(h, derivative(h));
  NFPoly sqf = g.degree() == 0 ? h : divrem_field(h, g).first;  // distinct irreducibles
  for (const auto& f : factor_squarefree_nf(sqf)) {
    int m = 0;
    NFPoly r = h;
    while (true) {
      auto [q, rem] = divrem_field(r, f);
      if (!rem.is_zero()) break;
      m++;
      r = q;
    }
    out.push_back({f, m});
  }
  return out;
}

bool is_irreducible_nf(const NFPoly& h) {
  if (h.degree() < 1) return false;
  auto f = factor_nf(h);
  return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == h.degree();
}

std::string nf_to_string(const NFElem& a) {
  if (a.is_zero()) return "0";
  return upoly_to_string(a.rep, a.K->var);
}

}  // namespace curvepencil
