#include "curvepencil/mvpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace curvepencil {

int Order::cmp(const Mono& a, const Mono& b) const {
  for (const auto& blk : blocks) {
    if (blk.lex) {
      for (int v : blk.vars) {
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      }
    } else {
      int da = 0, db = 0;
      for (int v : blk.vars) {
        da += a.e[v];
        db += b.e[v];
      }
      if (da != db) return da > db ? 1 : -1;
      for (size_t i = blk.vars.size(); i-- > 0;) {
        int v = blk.vars[i];
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
      }
    }
  }
  return 0;
}

static std::vector<int> mask_vars(uint8_t mask) {
  std::vector<int> vs;
  for (int i = 0; i < kNumVars; i++)
    if (mask & (1u << i)) vs.push_back(i);
  return vs;
}

Order order_grevlex(uint8_t mask) {
  Order o;
  o.blocks.push_back({mask_vars(mask), false});
  return o;
}

Order order_elim(uint8_t front_mask, uint8_t back_mask) {
  Order o;
  o.blocks.push_back({mask_vars(front_mask), false});
  o.blocks.push_back({mask_vars(back_mask), false});
  return o;
}

Order order_lex(const std::vector<int>& vars) {
  Order o;
  o.blocks.push_back({vars, true});
  return o;
}

int canon_cmp(const Mono& a, const Mono& b) {
  static const Order canon = [] {
    Order o;
    o.blocks.push_back({{VX, VY, VZ}, false});
    o.blocks.push_back({{VT, VW, VS}, false});
    return o;
  }();
  return canon.cmp(a, b);
}

// ---- MPoly -----------------------------------------------------------------

static MPoly normalized(uint8_t mask, std::vector<std::pair<Mono, Rat>> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return canon_cmp(a.first, b.first) > 0; });
  MPoly out;
  out.mask = mask;
  for (auto& [m, c] : ts) {
    if (!out.terms.empty() && out.terms.back().first == m)
      out.terms.back().second += c;
    else
      out.terms.push_back({m, c});
    if (!out.terms.empty() && sgn(out.terms.back().second) == 0) out.terms.pop_back();
  }
  return out;
}

int MPoly::wdeg() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.wdeg());
  return d;
}

int MPoly::deg_all() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.deg_all());
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms.empty()) return true;
  int d = terms[0].first.wdeg();
  for (const auto& [m, c] : terms)
    if (m.wdeg() != d) return false;
  return true;
}

bool MPoly::uses(int v) const {
  for (const auto& [m, c] : terms)
    if (m.e[v]) return true;
  return false;
}

MPoly mp_zero(uint8_t mask) {
  MPoly p;
  p.mask = mask;
  return p;
}

MPoly mp_const(uint8_t mask, const Rat& c) {
  MPoly p;
  p.mask = mask;
  if (sgn(c) != 0) p.terms.push_back({Mono::unit(), c});
  return p;
}

MPoly mp_var(uint8_t mask, int v) {
  assert(mask & (1u << v));
  MPoly p;
  p.mask = mask;
  p.terms.push_back({Mono::var(v), Rat(1)});
  return p;
}

MPoly mp_term(uint8_t mask, const Mono& m, const Rat& c) {
  MPoly p;
  p.mask = mask;
  if (sgn(c) != 0) p.terms.push_back({m, c});
  return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  std::vector<std::pair<Mono, Rat>> ts = a.terms;
  ts.insert(ts.end(), b.terms.begin(), b.terms.end());
  return normalized(a.mask | b.mask, std::move(ts));
}

MPoly neg(const MPoly& a) {
  MPoly out = a;
  for (auto& [m, c] : out.terms) c = -c;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + neg(b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  std::vector<std::pair<Mono, Rat>> ts;
  ts.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) ts.push_back({ma.mul(mb), ca * cb});
  return normalized(a.mask | b.mask, std::move(ts));
}

MPoly scale(const MPoly& a, const Rat& c) {
  if (sgn(c) == 0) return mp_zero(a.mask);
  MPoly out = a;
  for (auto& [m, cc] : out.terms) cc *= c;
  return out;
}

MPoly mp_pow(const MPoly& a, int k) {
  MPoly out = mp_const(a.mask, Rat(1));
  for (int i = 0; i < k; i++) out = out * a;
  return out;
}

MPoly derivative(const MPoly& a, int v) {
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& [m, c] : a.terms) {
    if (m.e[v] == 0) continue;
    Mono mm = m;
    mm.e[v]--;
    ts.push_back({mm, c * Rat(static_cast<long>(m.e[v]))});
  }
  return normalized(a.mask, std::move(ts));
}

MPoly subst_const(const MPoly& a, int v, const Rat& c) {
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& [m, co] : a.terms) {
    Mono mm = m;
    int e = mm.e[v];
    mm.e[v] = 0;
    ts.push_back({mm, co * rat_pow(c, static_cast<unsigned long>(e))});
  }
  return normalized(a.mask & static_cast<uint8_t>(~(1u << v)), std::move(ts));
}

MPoly subst_poly(const MPoly& a, int v, const MPoly& g) {
  // group by exponent of v, then Horner over powers of g
  std::map<int, std::vector<std::pair<Mono, Rat>>> grp;
  int emax = 0;
  for (const auto& [m, c] : a.terms) {
    Mono mm = m;
    int e = mm.e[v];
    mm.e[v] = 0;
    grp[e].push_back({mm, c});
    emax = std::max(emax, e);
  }
  uint8_t mask = static_cast<uint8_t>((a.mask & ~(1u << v)) | g.mask);
  MPoly acc = mp_zero(mask);
  for (int e = emax; e >= 0; e--) {
    acc = acc * g;
    auto it = grp.find(e);
    if (it != grp.end()) acc = acc + normalized(mask, it->second);
  }
  return acc;
}

Rat mp_eval(const MPoly& a, const std::array<Rat, kNumVars>& pt) {
  Rat out(0);
  for (const auto& [m, c] : a.terms) {
    Rat v = c;
    for (int i = 0; i < kNumVars; i++)
      if (m.e[i]) v *= rat_pow(pt[i], m.e[i]);
    out += v;
  }
  return out;
}

Rat mp_content(const MPoly& a) {
  if (a.is_zero()) return Rat(0);
  Int g(0), l(1);
  for (const auto& [m, c] : a.terms) {
    g = int_gcd(g, num(c));
    l = int_lcm(l, den(c));
  }
  Rat c = make_rat(g, l);
  if (sgn(a.terms[0].second) < 0) c = -c;
  return c;
}

MPoly mp_primitive(const MPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, Rat(1) / mp_content(a));
}

std::string mp_to_string(const MPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit_coeff = (mag == 1);
    bool printed = false;
    if (!unit_coeff || m.is_unit()) {
      out += mag.get_str();
      printed = true;
    }
    for (int v = 0; v < kNumVars; v++) {
      if (!m.e[v]) continue;
      if (printed) out += "*";
      out += kVarName[v];
      if (m.e[v] > 1) {
        out += "^";
        out += std::to_string(static_cast<int>(m.e[v]));
      }
      printed = true;
    }
  }
  return out;
}

// ---- conversions -----------------------------------------------------------

UPoly<QPoly> to_bivariate(const MPoly& a, int main_var, int coeff_var) {
  int dm = 0;
  for (const auto& [m, c] : a.terms) {
    for (int v = 0; v < kNumVars; v++)
      if (m.e[v] && v != main_var && v != coeff_var)
        throw domain_error("to_bivariate: extra variable present");
    dm = std::max(dm, static_cast<int>(m.e[main_var]));
  }
  std::vector<QPoly> cs(static_cast<size_t>(dm) + 1);
  for (const auto& [m, c] : a.terms) {
    QPoly& q = cs[m.e[main_var]];
    int e = m.e[coeff_var];
    if (q.degree() < e) q.c.resize(static_cast<size_t>(e) + 1, Rat(0));
    q.c[static_cast<size_t>(e)] += c;
  }
  for (auto& q : cs) q.trim();
  return UPoly<QPoly>(std::move(cs));
}

MPoly from_bivariate(const UPoly<QPoly>& p, int main_var, int coeff_var, uint8_t mask) {
  std::vector<std::pair<Mono, Rat>> ts;
  for (size_t i = 0; i < p.c.size(); i++)
    for (size_t j = 0; j < p.c[i].c.size(); j++) {
      if (sgn(p.c[i].c[j]) == 0) continue;
      Mono m;
      m.e[main_var] = static_cast<uint8_t>(i);
      m.e[coeff_var] = static_cast<uint8_t>(j);
      ts.push_back({m, p.c[i].c[j]});
    }
  return normalized(mask, std::move(ts));
}

QPoly to_univariate(const MPoly& a, int v) {
  std::vector<Rat> cs;
  for (const auto& [m, c] : a.terms) {
    for (int u = 0; u < kNumVars; u++)
      if (m.e[u] && u != v) throw domain_error("to_univariate: extra variable present");
    if (static_cast<int>(cs.size()) <= m.e[v]) cs.resize(m.e[v] + 1, Rat(0));
    cs[m.e[v]] += c;
  }
  return QPoly(std::move(cs));
}

MPoly from_univariate(const QPoly& p, int v, uint8_t mask) {
  std::vector<std::pair<Mono, Rat>> ts;
  for (size_t i = 0; i < p.c.size(); i++)
    if (sgn(p.c[i]) != 0) ts.push_back({Mono::var(static_cast<int>(v), static_cast<int>(i)), p.c[i]});
  return normalized(mask, std::move(ts));
}

// ---- gcd -------------------------------------------------------------------

namespace {

Mono monomial_gcd(const MPoly& a) {
  Mono g = a.terms[0].first;
  for (const auto& [m, c] : a.terms)
    for (int v = 0; v < kNumVars; v++) g.e[v] = std::min(g.e[v], m.e[v]);
  return g;
}

MPoly strip_monomial(const MPoly& a, const Mono& g) {
  MPoly out = a;
  for (auto& [m, c] : out.terms) m = m.div(g);
  return out;
}

QPoly bivariate_content(const UPoly<QPoly>& p) {
  QPoly g;
  for (const auto& c : p.c) g = gcd_q(g, c);
  return g;
}

UPoly<QPoly> bivariate_pp(const UPoly<QPoly>& p) {
  QPoly ct = bivariate_content(p);
  if (ct.degree() == 0) {
    Rat inv = Rat(1) / ct.coeff(0, Rat(0));
    UPoly<QPoly> out = p;
    for (auto& c : out.c) c = scale(c, inv);
    return out;
  }
  std::vector<QPoly> cs(p.c.size());
  for (size_t i = 0; i < p.c.size(); i++) cs[i] = exact_divide(p.c[i], ct);
  return UPoly<QPoly>(std::move(cs));
}

UPoly<QPoly> gcd_bivariate(UPoly<QPoly> a, UPoly<QPoly> b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QPoly ca = bivariate_content(a), cb = bivariate_content(b);
  a = bivariate_pp(a);
  b = bivariate_pp(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UPoly<QPoly> r = prem(a, b);
    a = b;
    b = r.is_zero() ? r : bivariate_pp(r);
  }
  QPoly cg = gcd_q(ca, cb);
  UPoly<QPoly> out = bivariate_pp(a);
  if (cg.degree() > 0 || cg.coeff(0, Rat(0)) != Rat(1)) {
    for (auto& c : out.c) c = c * cg;
  }
  return out;
}

}  // namespace

MPoly gcd_mv(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return mp_primitive(b);
  if (b.is_zero()) return mp_primitive(a);
  Mono ga = monomial_gcd(a), gb = monomial_gcd(b);
  Mono gc;
  for (int v = 0; v < kNumVars; v++) gc.e[v] = std::min(ga.e[v], gb.e[v]);
  MPoly sa = strip_monomial(a, ga), sb = strip_monomial(b, gb);
  // effective variables of the stripped polynomials
  uint8_t used = 0;
  for (int v = 0; v < kNumVars; v++)
    if (sa.uses(v) || sb.uses(v)) used |= static_cast<uint8_t>(1u << v);
  std::vector<int> vs = mask_vars(used);
  MPoly core;
  if (vs.empty()) {
    core = mp_const(a.mask | b.mask, Rat(1));
  } else if (vs.size() == 1) {
    QPoly g = gcd_q(to_univariate(sa, vs[0]), to_univariate(sb, vs[0]));
    core = from_univariate(g, vs[0], a.mask | b.mask);
  } else if (vs.size() == 2) {
    auto g = gcd_bivariate(to_bivariate(sa, vs[0], vs[1]), to_bivariate(sb, vs[0], vs[1]));
    core = from_bivariate(g, vs[0], vs[1], a.mask | b.mask);
  } else if (vs.size() == 3 && used == kMaskXYZ && sa.is_homogeneous() && sb.is_homogeneous()) {
    // z does not divide either stripped polynomial, so setting z=1 preserves
    // degrees and irreducible factorizations
    MPoly da = subst_const(sa, VZ, Rat(1));
    MPoly db = subst_const(sb, VZ, Rat(1));
    auto g = gcd_bivariate(to_bivariate(da, VX, VY), to_bivariate(db, VX, VY));
    MPoly g0 = from_bivariate(g, VX, VY, a.mask | b.mask);
    // rehomogenize to the total degree of g0
    int d0 = 0;
    for (const auto& [m, c] : g0.terms) d0 = std::max(d0, m.e[VX] + m.e[VY]);
    std::vector<std::pair<Mono, Rat>> ts;
    for (const auto& [m, c] : g0.terms) {
      Mono mm = m;
      mm.e[VZ] = static_cast<uint8_t>(d0 - m.e[VX] - m.e[VY]);
      ts.push_back({mm, c});
    }
    core = normalized(a.mask | b.mask, std::move(ts));
  } else {
    throw domain_error("gcd_mv: unsupported variable pattern");
  }
  MPoly out = mp_primitive(core);
  for (auto& [m, c] : out.terms) m = m.mul(gc);
  return out;
}

// ---- homogeneous wrapper ----------------------------------------------------

HomPoly::HomPoly(const MPoly& q) : p(q) {
  if (!q.is_homogeneous()) throw domain_error("polynomial is not homogeneous: " + mp_to_string(q));
  degree = q.is_zero() ? -1 : q.terms[0].first.wdeg();
}

HomPoly hom(const MPoly& p) { return HomPoly(p); }

std::array<HomPoly, 3> jacobian(const HomPoly& f) {
  if (f.p.is_zero()) throw domain_error("jacobian of zero");
  return {HomPoly(derivative(f.p, VX)), HomPoly(derivative(f.p, VY)), HomPoly(derivative(f.p, VZ))};
}

bool is_reduced(const HomPoly& f) {
  if (f.p.is_zero()) throw domain_error("is_reduced: zero polynomial");
  if (f.p.uses(VT) || f.p.uses(VW) || f.p.uses(VS))
    throw domain_error("is_reduced: expects a polynomial in x,y,z");
  MPoly g = f.p;
  for (int v : {VX, VY, VZ}) {
    MPoly d = derivative(f.p, v);
    if (d.is_zero()) continue;
    g = gcd_mv(g, d);
    if (g.wdeg() == 0) return true;
  }
  return g.wdeg() == 0;
}

Pencil::Pencil(const HomPoly& a, const HomPoly& b) : q1(a), q2(b) {
  if (a.p.is_zero() || b.p.is_zero()) throw domain_error("pencil generators must be nonzero");
  for (int v : {VT, VW, VS})
    if (a.p.uses(v) || b.p.uses(v)) throw domain_error("pencil generators must live in x,y,z");
  if (a.degree != b.degree) throw domain_error("pencil generators must have equal degree");
  k = a.degree;
  // reject proportional generators
  const Rat ca = a.p.terms[0].second, cb = b.p.terms[0].second;
  if (a.p.terms[0].first == b.p.terms[0].first && scale(a.p, cb) == scale(b.p, ca))
    throw domain_error("pencil generators are proportional");
}

HomPoly pencil_compose(const QPoly& p, const Pencil& P) {
  if (p.is_zero() || p.degree() < 1) throw domain_error("pencil_compose: need degree >= 1");
  if (!is_monic(p)) throw domain_error("pencil_compose: normalize first (monic input required)");
  if (!is_squarefree_q(p)) throw domain_error("pencil_compose: squarefree input required");
  int e = p.degree();
  // pv(s) = (-1)^e p(-s); compose f = sum_j pv_j q1^j q2^(e-j)
  std::vector<MPoly> q1p(static_cast<size_t>(e) + 1), q2p(static_cast<size_t>(e) + 1);
  q1p[0] = mp_const(P.q1.p.mask | P.q2.p.mask, Rat(1));
  q2p[0] = q1p[0];
  for (int i = 1; i <= e; i++) {
    q1p[static_cast<size_t>(i)] = q1p[static_cast<size_t>(i - 1)] * P.q1.p;
    q2p[static_cast<size_t>(i)] = q2p[static_cast<size_t>(i - 1)] * P.q2.p;
  }
  MPoly acc = mp_zero(P.q1.p.mask | P.q2.p.mask);
  for (int j = 0; j <= e; j++) {
    Rat pv = p.coeff(j, Rat(0));
    if (((e - j) & 1) != 0) pv = -pv;
    if (sgn(pv) == 0) continue;
    acc = acc + scale(q1p[static_cast<size_t>(j)] * q2p[static_cast<size_t>(e - j)], pv);
  }
  return HomPoly(acc);
}

MPoly pencil_member_generic(const Pencil& P) {
  MPoly t = mp_var(static_cast<uint8_t>(P.q1.p.mask | P.q2.p.mask | mask_of(VT)), VT);
  return P.q1.p + t * P.q2.p;
}

MPoly pencil_member_at(const Pencil& P, const Rat& t) { return P.q1.p + scale(P.q2.p, t); }

}  // namespace curvepencil
