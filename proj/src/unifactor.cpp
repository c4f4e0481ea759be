#include "curvepencil/unifactor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace curvepencil {
namespace {

// ---- arithmetic in F_p[x], p a small odd prime, dense uint64 vectors ----

using ZpPoly = std::vector<uint64_t>;  // lowest degree first, no trailing zeros

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t zp_mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t zp_pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = zp_mul(r, a, p);
    a = zp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t zp_inv(uint64_t a, uint64_t p) { return zp_pow(a % p, p - 2, p); }

ZpPoly zp_add(const ZpPoly& a, const ZpPoly& b, uint64_t p) {
  ZpPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); i++) out[i] = a[i];
  for (size_t i = 0; i < b.size(); i++) out[i] = (out[i] + b[i]) % p;
  zp_trim(out);
  return out;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, uint64_t p) {
  ZpPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); i++) out[i] = a[i];
  for (size_t i = 0; i < b.size(); i++) out[i] = (out[i] + p - b[i]) % p;
  zp_trim(out);
  return out;
}

ZpPoly zp_mulp(const ZpPoly& a, const ZpPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++)
      out[i + j] = (out[i + j] + (__uint128_t)a[i] * b[j]) % p;
  }
  zp_trim(out);
  return out;
}

// divrem by a divisor with invertible leading coefficient
std::pair<ZpPoly, ZpPoly> zp_divrem(ZpPoly a, const ZpPoly& b, uint64_t p) {
  ZpPoly q;
  if (b.empty()) throw domain_error("zp division by zero");
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < db) return {q, a};
  q.assign(static_cast<size_t>(da - db + 1), 0);
  uint64_t binv = zp_inv(b.back(), p);
  for (int i = da; i >= db; i--) {
    uint64_t c = zp_mul(a[static_cast<size_t>(i)], binv, p);
    if (c == 0) continue;
    q[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; j++)
      a[static_cast<size_t>(i - db + j)] =
          (a[static_cast<size_t>(i - db + j)] + p - zp_mul(c, b[static_cast<size_t>(j)], p)) % p;
  }
  zp_trim(a);
  zp_trim(q);
  return {q, a};
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, uint64_t p) { return zp_divrem(a, b, p).second; }

ZpPoly zp_monic(const ZpPoly& a, uint64_t p) {
  if (a.empty()) return a;
  uint64_t inv = zp_inv(a.back(), p);
  ZpPoly out = a;
  for (auto& c : out) c = zp_mul(c, inv, p);
  return out;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, uint64_t p) {
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

ZpPoly zp_deriv(const ZpPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  ZpPoly out(a.size() - 1, 0);
  for (size_t i = 1; i < a.size(); i++) out[i - 1] = zp_mul(a[i], i % p, p);
  zp_trim(out);
  return out;
}

ZpPoly zp_powmod(ZpPoly base, Int e, const ZpPoly& f, uint64_t p) {
  ZpPoly r{1};
  base = zp_mod(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = zp_mod(zp_mulp(r, base, p), f, p);
    base = zp_mod(zp_mulp(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// extended euclid: s*a + t*b = gcd (monic)
void zp_ext_gcd(ZpPoly a, ZpPoly b, uint64_t p, ZpPoly& g, ZpPoly& s, ZpPoly& t) {
  ZpPoly s0{1}, s1, t0, t1{1};
  while (!b.empty()) {
    auto [q, r] = zp_divrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
    ZpPoly s2 = zp_sub(s0, zp_mulp(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZpPoly t2 = zp_sub(t0, zp_mulp(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  uint64_t inv = zp_inv(a.back(), p);
  g = a;
  s = s0;
  t = t0;
  for (auto& c : g) c = zp_mul(c, inv, p);
  for (auto& c : s) c = zp_mul(c, inv, p);
  for (auto& c : t) c = zp_mul(c, inv, p);
}

// distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// squarefree monic polynomial mod p. Deterministically seeded.
void zp_edf(const ZpPoly& f, int d, uint64_t p, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int pe = int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  Int e = (pe - 1) / 2;
  while (true) {
    ZpPoly r(static_cast<size_t>(n), 0);
    for (auto& c : r) c = rng() % p;
    zp_trim(r);
    if (r.empty() || static_cast<int>(r.size()) - 1 < 1) continue;
    ZpPoly w = zp_powmod(r, e, f, p);
    if (w.empty()) continue;
    w = zp_sub(w, ZpPoly{1}, p);
    ZpPoly g = zp_gcd(w, f, p);
    int gd = static_cast<int>(g.size()) - 1;
    if (gd > 0 && gd < n) {
      zp_edf(g, d, p, rng, out);
      zp_edf(zp_divrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& fin, uint64_t p) {
  std::vector<ZpPoly> out;
  ZpPoly f = zp_monic(fin, p);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (p * 0x100000001b3ULL) ^ f.size());
  ZpPoly h{0, 1};  // x
  const ZpPoly x{0, 1};
  int d = 0;
  while (static_cast<int>(f.size()) - 1 > 0) {
    d++;
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(f);
      break;
    }
    h = zp_powmod(h, Int(static_cast<unsigned long>(p)), f, p);
    ZpPoly g = zp_gcd(zp_sub(h, x, p), f, p);
    if (static_cast<int>(g.size()) - 1 > 0) {
      zp_edf(g, d, p, rng, out);
      f = zp_divrem(f, g, p).first;
      h = zp_mod(h, f, p);
    }
  }
  return out;
}

// ---- arithmetic in (Z/m)[x] with bignum modulus (for Hensel lifting) ----

using ZmPoly = std::vector<Int>;

void zm_trim(ZmPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int zm_red(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

ZmPoly zm_reduce(const ZmPoly& a, const Int& m) {
  ZmPoly out(a.size());
  for (size_t i = 0; i < a.size(); i++) out[i] = zm_red(a[i], m);
  zm_trim(out);
  return out;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
  ZmPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); i++) out[i] = a[i];
  for (size_t i = 0; i < b.size(); i++) out[i] = zm_red(out[i] + b[i], m);
  zm_trim(out);
  return out;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
  ZmPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); i++) out[i] = a[i];
  for (size_t i = 0; i < b.size(); i++) out[i] = zm_red(out[i] - b[i], m);
  zm_trim(out);
  return out;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZmPoly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c = zm_red(c, m);
  zm_trim(out);
  return out;
}

// divrem by a monic divisor
std::pair<ZmPoly, ZmPoly> zm_divrem_monic(ZmPoly a, const ZmPoly& b, const Int& m) {
  ZmPoly q;
  assert(!b.empty() && b.back() == 1);
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < db) return {q, a};
  q.assign(static_cast<size_t>(da - db + 1), Int(0));
  for (int i = da; i >= db; i--) {
    Int c = a[static_cast<size_t>(i)];
    if (c == 0) continue;
    q[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; j++)
      a[static_cast<size_t>(i - db + j)] = zm_red(a[static_cast<size_t>(i - db + j)] - c * b[static_cast<size_t>(j)], m);
  }
  zm_trim(a);
  zm_trim(q);
  return {q, a};
}

struct HenselPair {
  ZmPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m)
};

// One quadratic Hensel step: from modulus m to m*m (all of f,g,h monic).
HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  ZmPoly g = zm_reduce(in.g, m2), h = zm_reduce(in.h, m2);
  ZmPoly s = zm_reduce(in.s, m2), t = zm_reduce(in.t, m2);
  ZmPoly e = zm_sub(zm_reduce(f, m2), zm_mul(g, h, m2), m2);
  auto [q, r] = zm_divrem_monic(zm_mul(s, e, m2), h, m2);
  ZmPoly gg = zm_add(zm_add(g, zm_mul(t, e, m2), m2), zm_mul(q, g, m2), m2);
  ZmPoly hh = zm_add(h, r, m2);
  ZmPoly b = zm_sub(zm_add(zm_mul(s, gg, m2), zm_mul(t, hh, m2), m2), ZmPoly{Int(1)}, m2);
  auto [cq, cr] = zm_divrem_monic(zm_mul(s, b, m2), hh, m2);
  ZmPoly ss = zm_sub(s, cr, m2);
  ZmPoly tt = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(cq, gg, m2), m2);
  return {gg, hh, ss, tt};
}

ZmPoly zp_to_zm(const ZpPoly& a) {
  ZmPoly out(a.size());
  for (size_t i = 0; i < a.size(); i++) out[i] = Int(static_cast<unsigned long>(a[i]));
  return out;
}

// Lift the factorization f = prod(facs) (mod p) to modulus M (a power of p),
// f and all factors monic.
void multifactor_hensel(const ZmPoly& f, const std::vector<ZpPoly>& facs, size_t lo, size_t hi,
                        uint64_t p, const Int& M, std::vector<ZmPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zm_reduce(f, M));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  ZpPoly g0{1}, h0{1};
  for (size_t i = lo; i < mid; i++) g0 = zp_mulp(g0, facs[i], p);
  for (size_t i = mid; i < hi; i++) h0 = zp_mulp(h0, facs[i], p);
  ZpPoly gcd, s0, t0;
  zp_ext_gcd(g0, h0, p, gcd, s0, t0);
  if (gcd.size() != 1) throw domain_error("hensel: factors not coprime mod p");
  HenselPair hp{zp_to_zm(g0), zp_to_zm(h0), zp_to_zm(s0), zp_to_zm(t0)};
  Int m(static_cast<unsigned long>(p));
  while (m < M) {
    hp = hensel_step(zm_reduce(f, m * m), hp, m);
    m = m * m;
  }
  multifactor_hensel(zm_reduce(hp.g, M), facs, lo, mid, p, M, out);
  multifactor_hensel(zm_reduce(hp.h, M), facs, mid, hi, p, M, out);
}

// ---- Zassenhaus on a primitive squarefree integer polynomial ----

QPoly zm_to_qpoly_symmetric(const ZmPoly& a, const Int& M) {
  Int half = M / 2;
  std::vector<Rat> c(a.size());
  for (size_t i = 0; i < a.size(); i++) {
    Int v = a[i];
    if (v > half) v -= M;
    c[i] = Rat(v);
  }
  return QPoly(std::move(c));
}

ZmPoly qpoly_int_to_zm(const QPoly& f) {
  ZmPoly out(f.c.size());
  for (size_t i = 0; i < f.c.size(); i++) {
    assert(den(f.c[i]) == 1);
    out[i] = num(f.c[i]);
  }
  return out;
}

bool divides_exactly_z(const QPoly& d, const QPoly& f) {
  auto [q, r] = divrem_field(f, d);
  (void)q;
  return r.is_zero();
}

// Factors a primitive squarefree integer polynomial with positive leading
// coefficient; returns primitive integer irreducible factors.
std::vector<QPoly> zassenhaus_squarefree(const QPoly& g) {
  int n = g.degree();
  std::vector<QPoly> out;
  if (n <= 1) {
    out.push_back(g);
    return out;
  }
  // Monicize: G(y) = L^(n-1) g(y/L) is monic with integer coefficients.
  Int L = num(g.lc());
  QPoly G;
  {
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    // coefficient of y^i is g_i * L^(n-1-i); the top one is exactly 1
    for (int i = 0; i < n; i++)
      c[static_cast<size_t>(i)] = g.coeff(i, Rat(0)) * Rat(int_pow(L, static_cast<unsigned long>(n - 1 - i)));
    c[static_cast<size_t>(n)] = Rat(1);
    G = QPoly(std::move(c));
  }
  // choose a prime where G stays squarefree; prefer few modular factors
  static const uint64_t primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                    37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                    79,  83,  89,  97,  101, 103, 107, 109, 113, 127};
  uint64_t best_p = 0;
  std::vector<ZpPoly> best_facs;
  int tried = 0;
  for (uint64_t p : primes) {
    ZpPoly Gp(G.c.size());
    for (size_t i = 0; i < G.c.size(); i++) {
      Int v = zm_red(num(G.c[i]), Int(static_cast<unsigned long>(p)));
      Gp[i] = v.get_ui();
    }
    zp_trim(Gp);
    if (static_cast<int>(Gp.size()) - 1 != n) continue;  // p | lc impossible (monic), safety
    ZpPoly gg = zp_gcd(Gp, zp_deriv(Gp, p), p);
    if (gg.size() != 1) continue;  // not squarefree mod p
    std::vector<ZpPoly> facs = zp_factor_squarefree(Gp, p);
    if (best_p == 0 || facs.size() < best_facs.size()) {
      best_p = p;
      best_facs = std::move(facs);
    }
    tried++;
    if (tried >= 4 || best_facs.size() == 1) break;
  }
  if (best_p == 0) throw domain_error("factorization: no usable small prime");
  if (best_facs.size() == 1) {
    out.push_back(g);  // irreducible
    return out;
  }
  std::sort(best_facs.begin(), best_facs.end());
  // Landau-Mignotte style bound for monic factors of G, times safety margin.
  Int maxc(0);
  for (const auto& c : G.c) maxc = std::max(maxc, Int(abs(num(c))));
  Int B = int_pow(Int(2), static_cast<unsigned long>(n)) * maxc * Int(n + 1);
  Int M(static_cast<unsigned long>(best_p));
  while (M <= 2 * B) M = M * M;
  std::vector<ZmPoly> lifted;
  multifactor_hensel(qpoly_int_to_zm(G), best_facs, 0, best_facs.size(), best_p, M, lifted);

  // subset recombination over the lifted monic factors
  auto next_combination = [](std::vector<size_t>& idx, size_t r) -> bool {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
      if (idx[i] + (k - i) < r) {
        idx[i]++;
        for (size_t j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  std::vector<size_t> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); i++) alive[i] = i;
  QPoly Grem = G;
  std::vector<QPoly> Gfactors;
  while (!alive.empty()) {
    size_t r = alive.size();
    bool found = false;
    for (size_t card = 1; card <= r / 2 && !found; card++) {
      std::vector<size_t> idx(card);
      for (size_t i = 0; i < card; i++) idx[i] = i;
      do {
        ZmPoly prod{Int(1)};
        for (size_t i = 0; i < card; i++) prod = zm_mul(prod, lifted[alive[idx[i]]], M);
        QPoly cand = zm_to_qpoly_symmetric(prod, M);
        if (divides_exactly_z(cand, Grem)) {
          Gfactors.push_back(cand);
          Grem = divrem_field(Grem, cand).first;
          std::vector<size_t> rest;
          for (size_t i = 0, k = 0; i < alive.size(); i++) {
            if (k < card && idx[k] == i) {
              k++;
              continue;
            }
            rest.push_back(alive[i]);
          }
          alive = std::move(rest);
          found = true;
          break;
        }
      } while (next_combination(idx, r));
    }
    if (!found) {
      // remainder is irreducible: no subset up to half the factors divides
      Gfactors.push_back(Grem);
      break;
    }
  }

  // map back through y = L*x and primitivize
  for (const auto& H : Gfactors) {
    std::vector<Rat> c(H.c.size());
    Int Lp(1);
    for (size_t i = 0; i < H.c.size(); i++) {
      c[i] = H.c[i] * Rat(Lp);
      Lp *= L;
    }
    QPoly h = primitive_part(QPoly(std::move(c)));
    out.push_back(h);
  }
  return out;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; i--) {
    Rat ca = a.coeff(i, Rat(0)), cb = b.coeff(i, Rat(0));
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

QPoly QFactorization::expand_primitive() const {
  QPoly acc = qpoly_const(content);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; i++) acc = acc * f.primitive_z;
  return acc;
}

QFactorization factor_rational(const QPoly& p) {
  if (p.is_zero()) throw domain_error("factor_rational: zero polynomial");
  QFactorization out;
  out.lead = p.lc();
  out.content = p.lc();
  if (p.degree() == 0) return out;
  auto [sqf, lead] = yun_squarefree(p);
  (void)lead;
  for (const auto& [part, mult] : sqf) {
    QPoly prim = primitive_part(part);  // integer, lc > 0
    for (const auto& zfac : zassenhaus_squarefree(prim)) {
      QFactor f;
      f.primitive_z = zfac;
      f.monic = monic(zfac);
      f.multiplicity = mult;
      out.factors.push_back(std::move(f));
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const QFactor& a, const QFactor& b) { return qpoly_less(a.primitive_z, b.primitive_z); });
  // content for the primitive representation: p / prod primitive^mult
  Rat c = p.lc();
  for (const auto& f : out.factors)
    for (int i = 0; i < f.multiplicity; i++) c /= f.primitive_z.lc();
  out.content = c;
  return out;
}

bool is_irreducible_q(const QPoly& p) {
  if (p.degree() < 1) return false;
  QFactorization f = factor_rational(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1 &&
         f.factors[0].monic.degree() == p.degree();
}

}  // namespace curvepencil
