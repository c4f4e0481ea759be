#include "curvepencil/groebner.hpp"

#include "curvepencil/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace curvepencil {

int ModOrder::cmp(const Mono& ma, int pa, const Mono& mb, int pb) const {
  if (pos0_first && (pa == 0) != (pb == 0)) return pa == 0 ? 1 : -1;
  if (pa == 0 && pb == 0) return ring.cmp(ma, mb);
  int da = ma.wdeg() + shift[static_cast<size_t>(pa)];
  int db = mb.wdeg() + shift[static_cast<size_t>(pb)];
  if (da != db) return da > db ? 1 : -1;
  int c = ring.cmp(ma, mb);
  if (c != 0) return c;
  if (pa != pb) return pa < pb ? 1 : -1;
  return 0;
}

namespace {

void sort_terms(std::vector<GBTerm>& t, const ModOrder& ord) {
  std::sort(t.begin(), t.end(), [&](const GBTerm& a, const GBTerm& b) {
    return ord.cmp(a.m, a.pos, b.m, b.pos) > 0;
  });
}

void strip_content(std::vector<GBTerm>& t) {
  if (t.empty()) return;
  Int g(0);
  for (const auto& x : t) {
    g = int_gcd(g, x.c);
    if (g == 1) break;
  }
  if (sgn(t.front().c) < 0) g = -g;
  if (g != 1)
    for (auto& x : t) x.c = exact_div(x.c, g);
}

int elem_sugar(const std::vector<GBTerm>& t, const ModOrder& ord) {
  int s = 0;
  for (const auto& x : t)
    s = std::max(s, x.m.deg_all() + (x.pos < static_cast<int>(ord.shift.size())
                                         ? ord.shift[static_cast<size_t>(x.pos)]
                                         : 0));
  return s;
}

// a*u - b*v with u,v term lists scaled by monomial/coefficient, merged
std::vector<GBTerm> combine(const std::vector<GBTerm>& u, const Int& cu, const Mono& mu,
                            const std::vector<GBTerm>& v, const Int& cv, const Mono& mv,
                            const ModOrder& ord) {
  std::vector<GBTerm> out;
  out.reserve(u.size() + v.size());
  size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j >= v.size()) {
      out.push_back({u[i].m.mul(mu), u[i].pos, u[i].c * cu});
      i++;
      continue;
    }
    if (i >= u.size()) {
      out.push_back({v[j].m.mul(mv), v[j].pos, -v[j].c * cv});
      j++;
      continue;
    }
    Mono ma = u[i].m.mul(mu), mb = v[j].m.mul(mv);
    int c = ord.cmp(ma, u[i].pos, mb, v[j].pos);
    if (c > 0) {
      out.push_back({ma, u[i].pos, u[i].c * cu});
      i++;
    } else if (c < 0) {
      out.push_back({mb, v[j].pos, -v[j].c * cv});
      j++;
    } else {
      Int cc = u[i].c * cu - v[j].c * cv;
      if (sgn(cc) != 0) out.push_back({ma, u[i].pos, std::move(cc)});
      i++;
      j++;
    }
  }
  return out;
}

size_t max_coeff_bits(const std::vector<GBTerm>& t) {
  size_t b = 0;
  for (const auto& x : t) b = std::max(b, mpz_sizeinbase(x.c.get_mpz_t(), 2));
  return b;
}

// Full normal form of h against basis (head and tail), fraction-free.
// Returns primitive result with positive leading coefficient.
std::vector<GBTerm> reduce_full(std::vector<GBTerm> work, const std::vector<GBElem>& basis,
                                const ModOrder& ord, int skip = -1, int* sugar = nullptr) {
  std::vector<GBTerm> done;  // fully reduced prefix
  int steps = 0;
  while (!work.empty()) {
    const GBTerm& lt = work.front();
    int red = -1;
    for (size_t k = 0; k < basis.size(); k++) {
      if (static_cast<int>(k) == skip) continue;
      const GBTerm& gl = basis[k].lt();
      if (gl.pos == lt.pos && gl.m.divides(lt.m)) {
        red = static_cast<int>(k);
        break;
      }
    }
    if (red < 0) {
      done.push_back(lt);
      work.erase(work.begin());
      continue;
    }
    const GBElem& g = basis[static_cast<size_t>(red)];
    Mono mm = lt.m.div(g.lt().m);
    Int cg = g.lt().c, ch = lt.c;
    Int d = int_gcd(cg, ch);
    Int a = exact_div(cg, d), b = exact_div(ch, d);
    // work := a*work - b*mm*g  (cancels the lead); scale done by a too
    work = combine(work, a, Mono::unit(), g.t, b, mm, ord);
    for (auto& x : done) x.c *= a;
    if (sugar) *sugar = std::max(*sugar, g.sugar + mm.deg_all());
    if (++steps % 16 == 0 || max_coeff_bits(work) > 4096) {
      // joint content strip to keep the pair consistent
      std::vector<GBTerm> all = done;
      all.insert(all.end(), work.begin(), work.end());
      if (!all.empty()) {
        Int g2(0);
        for (const auto& x : all) {
          g2 = int_gcd(g2, x.c);
          if (g2 == 1) break;
        }
        if (g2 > 1) {
          for (auto& x : done) x.c = exact_div(x.c, g2);
          for (auto& x : work) x.c = exact_div(x.c, g2);
        }
      }
    }
  }
  strip_content(done);
  return done;
}

struct SPair {
  int i, j;
  Mono lcm;
  int pos;
  int sugar;
};

struct SPairCmp {
  const ModOrder* ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord->cmp(a.lcm, a.pos, b.lcm, b.pos);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

struct Engine {
  ModOrder ord;
  int rank;
  std::vector<GBElem> basis;
  std::multiset<SPair, SPairCmp> pairs;

  Engine(ModOrder o, int r) : ord(std::move(o)), rank(r), pairs(SPairCmp{&ord}) {}

  static bool coprime_leads(const GBElem& a, const GBElem& b) {
    return a.lt().m.coprime(b.lt().m);
  }

  int pair_sugar(int i, int j, const Mono& lcm) const {
    const GBElem& a = basis[static_cast<size_t>(i)];
    const GBElem& b = basis[static_cast<size_t>(j)];
    return std::max(a.sugar + lcm.div(a.lt().m).deg_all(), b.sugar + lcm.div(b.lt().m).deg_all());
  }

  // Gebauer-Moeller update for new element with index h
  void update_pairs(int h) {
    const GBElem& gh = basis[static_cast<size_t>(h)];
    struct Cand {
      int g;
      Mono lcm;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < h; g++) {
      if (basis[static_cast<size_t>(g)].lt().pos != gh.lt().pos) continue;
      cands.push_back({g, Mono::lcm(basis[static_cast<size_t>(g)].lt().m, gh.lt().m)});
    }
    // M: drop candidates whose lcm is properly divided by another's lcm;
    // for equal lcms keep the first only
    for (size_t a = 0; a < cands.size(); a++) {
      if (!cands[a].alive) continue;
      for (size_t b = 0; b < cands.size(); b++) {
        if (a == b || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          if (!(cands[a].lcm == cands[b].lcm) || b < a) {
            cands[a].alive = false;
            break;
          }
        }
      }
    }
    // F/product: in rank 1, a coprime pair in an lcm class kills the class
    if (rank == 1) {
      for (auto& c : cands) {
        if (!c.alive) continue;
        if (coprime_leads(basis[static_cast<size_t>(c.g)], gh)) {
          for (auto& c2 : cands)
            if (c2.alive && c2.lcm == c.lcm) c2.alive = false;
        }
      }
    }
    // B: prune old pairs strictly refined by the new element
    for (auto it = pairs.begin(); it != pairs.end();) {
      const SPair& p = *it;
      if (p.pos == gh.lt().pos && gh.lt().m.divides(p.lcm)) {
        Mono l1 = Mono::lcm(basis[static_cast<size_t>(p.i)].lt().m, gh.lt().m);
        Mono l2 = Mono::lcm(basis[static_cast<size_t>(p.j)].lt().m, gh.lt().m);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
          it = pairs.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (const auto& c : cands) {
      if (!c.alive) continue;
      pairs.insert(SPair{c.g, h, c.lcm, gh.lt().pos, pair_sugar(c.g, h, c.lcm)});
    }
  }

  void add_element(GBElem e) {
    basis.push_back(std::move(e));
    update_pairs(static_cast<int>(basis.size()) - 1);
  }

  void run() {
    while (!pairs.empty()) {
      SPair p = *pairs.begin();
      pairs.erase(pairs.begin());
      const GBElem& a = basis[static_cast<size_t>(p.i)];
      const GBElem& b = basis[static_cast<size_t>(p.j)];
      Mono ma = p.lcm.div(a.lt().m), mb = p.lcm.div(b.lt().m);
      Int ca = a.lt().c, cb = b.lt().c;
      Int d = int_gcd(ca, cb);
      std::vector<GBTerm> s =
          combine(a.t, exact_div(cb, d), ma, b.t, exact_div(ca, d), mb, ord);
      int sugar = p.sugar;
      s = reduce_full(std::move(s), basis, ord, -1, &sugar);
      if (s.empty()) continue;
      GBElem e;
      e.t = std::move(s);
      e.sugar = std::max(sugar, elem_sugar(e.t, ord));
      add_element(std::move(e));
    }
  }

  void interreduce() {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<GBElem> kept;
    for (size_t i = 0; i < basis.size(); i++) {
      bool drop = false;
      for (size_t j = 0; j < basis.size(); j++) {
        if (i == j) continue;
        const GBTerm& li = basis[i].lt();
        const GBTerm& lj = basis[j].lt();
        if (lj.pos == li.pos && lj.m.divides(li.m)) {
          if (!(lj.m == li.m) || j < i) {
            drop = true;
            break;
          }
        }
      }
      if (!drop) kept.push_back(basis[i]);
    }
    basis = std::move(kept);
    // tail-reduce each against the others until stable
    for (size_t i = 0; i < basis.size(); i++) {
      auto t = reduce_full(basis[i].t, basis, ord, static_cast<int>(i));
      basis[i].t = std::move(t);
      basis[i].sugar = elem_sugar(basis[i].t, ord);
    }
    std::sort(basis.begin(), basis.end(), [&](const GBElem& x, const GBElem& y) {
      return ord.cmp(x.lt().m, x.lt().pos, y.lt().m, y.lt().pos) < 0;
    });
  }
};

}  // namespace

GBElem to_gb_elem(const std::vector<MPoly>& comps, const ModOrder& ord) {
  GBElem e;
  Int l(1);
  for (const auto& p : comps)
    for (const auto& [m, c] : p.terms) l = int_lcm(l, den(c));
  for (size_t pos = 0; pos < comps.size(); pos++)
    for (const auto& [m, c] : comps[pos].terms)
      e.t.push_back({m, static_cast<int>(pos), num(c) * exact_div(l, den(c))});
  sort_terms(e.t, ord);
  strip_content(e.t);
  e.sugar = elem_sugar(e.t, ord);
  return e;
}

std::vector<MPoly> from_gb_elem(const GBElem& e, int rank, uint8_t mask) {
  std::vector<MPoly> out(static_cast<size_t>(rank), mp_zero(mask));
  for (const auto& t : e.t)
    out[static_cast<size_t>(t.pos)] = out[static_cast<size_t>(t.pos)] + mp_term(mask, t.m, Rat(t.c));
  return out;
}

std::vector<std::vector<MPoly>> GBasis::elements(uint8_t mask) const {
  std::vector<std::vector<MPoly>> out;
  for (const auto& e : g) out.push_back(from_gb_elem(e, rank, mask));
  return out;
}

std::vector<MPoly> GBasis::ideal_elements(uint8_t mask) const {
  std::vector<MPoly> out;
  for (const auto& e : g) out.push_back(from_gb_elem(e, 1, mask)[0]);
  return out;
}

GBasis groebner_module(const std::vector<std::vector<MPoly>>& gens, const ModOrder& ord, int rank) {
  Engine eng(ord, rank);
  for (const auto& v : gens) {
    GBElem e = to_gb_elem(v, ord);
    if (e.t.empty()) continue;
    e.t = reduce_full(std::move(e.t), eng.basis, ord);
    if (e.t.empty()) continue;
    e.sugar = elem_sugar(e.t, ord);
    eng.add_element(std::move(e));
  }
  eng.run();
  eng.interreduce();
  GBasis out;
  out.ord = ord;
  out.rank = rank;
  out.g = std::move(eng.basis);
  return out;
}

GBasis groebner_ideal(const std::vector<MPoly>& gens, const Order& ord) {
  ModOrder mo;
  mo.ring = ord;
  mo.shift = {0};
  std::vector<std::vector<MPoly>> vv;
  for (const auto& g : gens) vv.push_back({g});
  return groebner_module(vv, mo, 1);
}

MPoly nf_ideal(const MPoly& f, const GBasis& gb) {
  // exact reduction over Q against the monic forms
  using TermQ = std::pair<Mono, Rat>;
  std::vector<TermQ> work(f.terms.begin(), f.terms.end());
  std::sort(work.begin(), work.end(),
            [&](const TermQ& a, const TermQ& b) { return gb.ord.cmp(a.first, 0, b.first, 0) > 0; });
  std::vector<TermQ> done;
  while (!work.empty()) {
    auto [m, c] = work.front();
    int red = -1;
    for (size_t k = 0; k < gb.g.size(); k++)
      if (gb.g[k].lt().pos == 0 && gb.g[k].lt().m.divides(m)) {
        red = static_cast<int>(k);
        break;
      }
    if (red < 0) {
      done.push_back(work.front());
      work.erase(work.begin());
      continue;
    }
    const GBElem& g = gb.g[static_cast<size_t>(red)];
    Mono mm = m.div(g.lt().m);
    Rat fac = c / Rat(g.lt().c);
    // work -= fac * mm * g
    std::vector<TermQ> sub;
    sub.reserve(g.t.size());
    for (const auto& t : g.t) sub.push_back({t.m.mul(mm), fac * Rat(t.c)});
    std::vector<TermQ> merged;
    merged.reserve(work.size() + sub.size());
    size_t i = 0, j = 0;
    while (i < work.size() || j < sub.size()) {
      if (j >= sub.size()) {
        merged.push_back(work[i++]);
        continue;
      }
      if (i >= work.size()) {
        merged.push_back({sub[j].first, -sub[j].second});
        j++;
        continue;
      }
      int cc = gb.ord.cmp(work[i].first, 0, sub[j].first, 0);
      if (cc > 0)
        merged.push_back(work[i++]);
      else if (cc < 0) {
        merged.push_back({sub[j].first, -sub[j].second});
        j++;
      } else {
        Rat v = work[i].second - sub[j].second;
        if (sgn(v) != 0) merged.push_back({work[i].first, v});
        i++;
        j++;
      }
    }
    work = std::move(merged);
  }
  MPoly out = mp_zero(f.mask);
  for (auto& [m, c] : done) out = out + mp_term(f.mask, m, c);
  return out;
}

bool in_ideal(const MPoly& f, const GBasis& gb) { return nf_ideal(f, gb).is_zero(); }

bool verify_buchberger(const GBasis& gb) {
  ModOrder ord = gb.ord;
  for (size_t i = 0; i < gb.g.size(); i++)
    for (size_t j = i + 1; j < gb.g.size(); j++) {
      const GBElem& a = gb.g[i];
      const GBElem& b = gb.g[j];
      if (a.lt().pos != b.lt().pos) continue;
      Mono l = Mono::lcm(a.lt().m, b.lt().m);
      Int d = int_gcd(a.lt().c, b.lt().c);
      auto s = combine(a.t, exact_div(b.lt().c, d), l.div(a.lt().m), b.t,
                       exact_div(a.lt().c, d), l.div(b.lt().m), ord);
      if (!reduce_full(std::move(s), gb.g, ord).empty()) return false;
    }
  return true;
}

const GBasis& GradedIdeal::basis() {
  if (!cached) cached = groebner_ideal(gens, order);
  return *cached;
}

GradedIdeal ideal_grevlex(const std::vector<MPoly>& gens, uint8_t mask) {
  return GradedIdeal(gens, order_grevlex(mask));
}

// ---- saturation / elimination helpers ------------------------------------------

namespace {

uint8_t used_mask(const std::vector<MPoly>& gens) {
  uint8_t m = 0;
  for (const auto& g : gens)
    for (int v = 0; v < kNumVars; v++)
      if (g.uses(v)) m |= static_cast<uint8_t>(1u << v);
  return m;
}

// division by a single polynomial, exact (throws if the remainder is nonzero)
MPoly mp_divide_exact(const MPoly& a, const MPoly& f) {
  if (f.is_zero()) throw domain_error("division by zero polynomial");
  MPoly rem = a, quot = mp_zero(a.mask);
  const Mono fl = f.terms[0].first;  // canonical leading term works for grevlex on full mask
  // use the canonical ordering of MPoly: leading term = terms[0]
  while (!rem.is_zero()) {
    const Mono& rl = rem.terms[0].first;
    if (!fl.divides(rl)) throw domain_error("inexact polynomial division");
    Mono mm = rl.div(fl);
    Rat c = rem.terms[0].second / f.terms[0].second;
    MPoly t = mp_term(a.mask, mm, c);
    quot = quot + t;
    rem = rem - t * f;
  }
  return quot;
}

}  // namespace

std::vector<MPoly> saturate_by_poly(const std::vector<MPoly>& gens, const MPoly& f, uint8_t mask) {
  if (f.uses(VW)) throw domain_error("saturate: helper variable in use");
  uint8_t full = static_cast<uint8_t>(mask | mask_of(VW));
  std::vector<MPoly> work = gens;
  MPoly w = mp_var(full, VW);
  work.push_back(mp_const(full, Rat(1)) - w * f);
  GBasis gb = groebner_ideal(work, order_elim(mask_of(VW), mask));
  std::vector<MPoly> out;
  for (const auto& e : gb.ideal_elements(full))
    if (!e.uses(VW)) {
      MPoly g = e;
      g.mask = mask;
      out.push_back(g);
    }
  return out;
}

std::vector<MPoly> saturate(const std::vector<MPoly>& gens, const std::vector<MPoly>& jgens, uint8_t mask) {
  std::vector<MPoly> cur = gens;
  for (const auto& j : jgens) cur = saturate_by_poly(cur, j, mask);
  return cur;
}

std::vector<MPoly> ideal_intersect(const std::vector<MPoly>& a, const std::vector<MPoly>& b, uint8_t mask) {
  uint8_t full = static_cast<uint8_t>(mask | mask_of(VW));
  MPoly w = mp_var(full, VW);
  MPoly omw = mp_const(full, Rat(1)) - w;
  std::vector<MPoly> work;
  for (const auto& g : a) work.push_back(w * g);
  for (const auto& g : b) work.push_back(omw * g);
  GBasis gb = groebner_ideal(work, order_elim(mask_of(VW), mask));
  std::vector<MPoly> out;
  for (const auto& e : gb.ideal_elements(full))
    if (!e.uses(VW)) {
      MPoly g = e;
      g.mask = mask;
      out.push_back(g);
    }
  return out;
}

std::vector<MPoly> saturate_by_poly_colon(const std::vector<MPoly>& gens, const MPoly& f, uint8_t mask) {
  // iterate I := I : f until stable, with I : f = (I cap (f)) / f
  std::vector<MPoly> cur = gens;
  for (int round = 0; round < 256; round++) {
    std::vector<MPoly> isect = ideal_intersect(cur, {f}, mask);
    std::vector<MPoly> next;
    for (const auto& g : isect) next.push_back(mp_divide_exact(g, f));
    // stable iff next subset of cur (the other inclusion is automatic)
    GBasis gcur = groebner_ideal(cur, order_grevlex(mask));
    bool stable = true;
    for (const auto& g : next)
      if (!in_ideal(g, gcur)) {
        stable = false;
        break;
      }
    if (stable) return cur;
    cur = std::move(next);
  }
  throw domain_error("saturation did not stabilize");
}

std::optional<QPoly> eliminate_to_t(const std::vector<MPoly>& gens, uint8_t mask) {
  uint8_t um = used_mask(gens);
  uint8_t front = static_cast<uint8_t>(um & ~mask_of(VT));
  GBasis gb = groebner_ideal(gens, order_elim(front, mask_of(VT)));
  QPoly acc;
  for (const auto& e : gb.ideal_elements(mask)) {
    bool tonly = true;
    for (int v = 0; v < kNumVars; v++)
      if (v != VT && e.uses(v)) tonly = false;
    if (!tonly) continue;
    acc = gcd_q(acc, to_univariate(e, VT));
  }
  if (acc.is_zero()) return std::nullopt;
  return monic(squarefree_part_q(acc));
}

// ---- syzygies ------------------------------------------------------------------

SyzygyModule syzygies(const HomPoly& g1, const HomPoly& g2, const HomPoly& g3) {
  const MPoly &p1 = g1.p, &p2 = g2.p, &p3 = g3.p;
  if (p1.is_zero() || p2.is_zero() || p3.is_zero())
    throw domain_error("syzygies: zero generator");
  int e = g1.degree;
  if (g2.degree != e || g3.degree != e)
    throw domain_error("syzygies: generators must share one degree");
  uint8_t mask = static_cast<uint8_t>(p1.mask | p2.mask | p3.mask);

  ModOrder ord;
  ord.ring = order_grevlex(mask);
  ord.shift = {0, e, e, e};
  ord.pos0_first = true;

  auto mk = [&](const MPoly& g, int pos) {
    std::vector<MPoly> v(4, mp_zero(mask));
    v[0] = g;
    v[static_cast<size_t>(pos)] = mp_const(mask, Rat(1));
    return v;
  };
  GBasis gb = groebner_module({mk(p1, 1), mk(p2, 2), mk(p3, 3)}, ord, 4);

  SyzygyModule out;
  for (const auto& el : gb.g) {
    if (el.lt().pos == 0) continue;  // has a nonzero first component
    auto comps = from_gb_elem(el, 4, mask);
    assert(comps[0].is_zero());
    std::array<MPoly, 3> tri{comps[1], comps[2], comps[3]};
    int deg = -1;
    for (const auto& c : tri)
      if (!c.is_zero()) deg = std::max(deg, c.wdeg());
    out.basis.push_back(tri);
    out.basis_degrees.push_back(deg);
  }

  // graded Nakayama minimalization: process candidates by ascending degree,
  // keeping those independent of multiples of lower-degree picks
  std::vector<size_t> idx(out.basis.size());
  for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return out.basis_degrees[a] < out.basis_degrees[b];
  });

  auto monomials_of_degree = [](int d) {
    std::vector<Mono> ms;
    if (d < 0) return ms;
    for (int a = 0; a <= d; a++)
      for (int b = 0; b + a <= d; b++) {
        Mono m;
        m.e[VX] = static_cast<uint8_t>(a);
        m.e[VY] = static_cast<uint8_t>(b);
        m.e[VZ] = static_cast<uint8_t>(d - a - b);
        ms.push_back(m);
      }
    return ms;
  };

  // group candidates by degree
  std::map<int, std::vector<size_t>> bydeg;
  for (size_t i : idx) bydeg[out.basis_degrees[i]].push_back(i);
  std::vector<std::pair<std::array<MPoly, 3>, int>> chosen;
  for (auto& [deg, cand] : bydeg) {
    auto ms = monomials_of_degree(deg);
    std::map<std::array<uint8_t, kNumVars>, int> pos;
    for (size_t i = 0; i < ms.size(); i++) pos[ms[i].e] = static_cast<int>(i);
    int ncols = static_cast<int>(3 * ms.size());
    QEchelon ech(ncols);
    auto vectorize = [&](const std::array<MPoly, 3>& tri) {
      std::vector<Rat> v(static_cast<size_t>(ncols), Rat(0));
      for (int comp = 0; comp < 3; comp++)
        for (const auto& [m, c] : tri[static_cast<size_t>(comp)].terms)
          v[static_cast<size_t>(comp) * ms.size() + static_cast<size_t>(pos.at(m.e))] = c;
      return v;
    };
    // span of monomial multiples of lower-degree chosen generators
    for (const auto& [tri, d0] : chosen) {
      for (const auto& mm : monomials_of_degree(deg - d0)) {
        std::array<MPoly, 3> mult;
        for (int c = 0; c < 3; c++) mult[static_cast<size_t>(c)] = tri[static_cast<size_t>(c)] * mp_term(mask, mm, Rat(1));
        ech.add(vectorize(mult));
      }
    }
    for (size_t ci : cand) {
      if (ech.add(vectorize(out.basis[ci]))) chosen.push_back({out.basis[ci], deg});
    }
  }
  for (auto& [tri, d] : chosen) {
    out.gens.push_back(tri);
    out.degrees.push_back(d);
  }
  return out;
}

}  // namespace curvepencil
