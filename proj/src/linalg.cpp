#include "curvepencil/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace curvepencil {

void QEchelon::reduce(QVec& v) const {
  for (size_t r = 0; r < rows.size(); r++) {
    const Rat& c = v[static_cast<size_t>(pivcol[r])];
    if (sgn(c) == 0) continue;
    Rat f = c;  // pivot is 1
    const QVec& row = rows[r];
    for (int j = pivcol[r]; j < ncols; j++) {
      if (sgn(row[static_cast<size_t>(j)]) != 0) v[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    }
  }
}

bool QEchelon::add(QVec v) {
  reduce(v);
  int pc = -1;
  for (int j = 0; j < ncols; j++)
    if (sgn(v[static_cast<size_t>(j)]) != 0) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  Rat inv = Rat(1) / v[static_cast<size_t>(pc)];
  for (int j = pc; j < ncols; j++) v[static_cast<size_t>(j)] *= inv;
  // keep earlier rows reduced against the new pivot
  for (size_t r = 0; r < rows.size(); r++) {
    Rat c = rows[r][static_cast<size_t>(pc)];
    if (sgn(c) == 0) continue;
    for (int j = pc; j < ncols; j++) rows[r][static_cast<size_t>(j)] -= c * v[static_cast<size_t>(j)];
  }
  // insert keeping pivot columns ordered
  size_t at = rows.size();
  for (size_t r = 0; r < rows.size(); r++)
    if (pivcol[r] > pc) {
      at = r;
      break;
    }
  rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
  pivcol.insert(pivcol.begin() + static_cast<long>(at), pc);
  return true;
}

bool QEchelon::in_span(QVec v) const {
  reduce(v);
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

int rank_exact(const std::vector<QVec>& rows, int ncols) {
  QEchelon e(ncols);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

std::vector<std::vector<Int>> kernel_exact(const std::vector<QVec>& rows, int ncols) {
  QEchelon e(ncols);
  for (const auto& r : rows) e.add(r);
  std::vector<bool> is_piv(static_cast<size_t>(ncols), false);
  for (int c : e.pivcol) is_piv[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Int>> out;
  for (int free = 0; free < ncols; free++) {
    if (is_piv[static_cast<size_t>(free)]) continue;
    QVec v(static_cast<size_t>(ncols), Rat(0));
    v[static_cast<size_t>(free)] = Rat(1);
    for (size_t r = 0; r < e.rows.size(); r++) {
      const Rat& c = e.rows[r][static_cast<size_t>(free)];
      if (sgn(c) != 0) v[static_cast<size_t>(e.pivcol[r])] = -c;
    }
    // clear denominators, primitive integer vector
    Int l(1);
    for (const auto& c : v) l = int_lcm(l, den(c));
    std::vector<Int> iv(static_cast<size_t>(ncols));
    Int g(0);
    for (int j = 0; j < ncols; j++) {
      iv[static_cast<size_t>(j)] = num(v[static_cast<size_t>(j)]) * exact_div(l, den(v[static_cast<size_t>(j)]));
      g = int_gcd(g, iv[static_cast<size_t>(j)]);
    }
    if (g > 1)
      for (auto& x : iv) x = exact_div(x, g);
    out.push_back(std::move(iv));
  }
  return out;
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t nth_linalg_prime(int i) {
  static std::vector<uint64_t> primes;
  if (primes.empty()) {
    Int c = (Int(1) << 62) - 1;
    while (static_cast<int>(primes.size()) < 32) {
      if (mpz_probab_prime_p(c.get_mpz_t(), 40)) primes.push_back(c.get_ui());
      c -= 2;
    }
  }
  assert(i >= 0 && i < static_cast<int>(primes.size()));
  return primes[static_cast<size_t>(i)];
}

uint64_t int_mod_p(const Int& a, uint64_t p) {
  Int r = a % Int(p);
  if (r < 0) r += Int(p);
  return r.get_ui();
}

std::optional<uint64_t> rat_mod_p(const Rat& a, const PrimeField& F) {
  uint64_t d = int_mod_p(den(a), F.p);
  if (d == 0) return std::nullopt;
  uint64_t n = int_mod_p(num(a), F.p);
  return F.mul(n, F.inv(d));
}

void PEchelon::reduce(PVec& v) const {
  for (size_t r = 0; r < rows.size(); r++) {
    uint64_t c = v[static_cast<size_t>(pivcol[r])];
    if (c == 0) continue;
    const PVec& row = rows[r];
    for (int j = pivcol[r]; j < ncols; j++)
      if (row[static_cast<size_t>(j)])
        v[static_cast<size_t>(j)] = F.sub(v[static_cast<size_t>(j)], F.mul(c, row[static_cast<size_t>(j)]));
  }
}

bool PEchelon::add(PVec v) {
  reduce(v);
  int pc = -1;
  for (int j = 0; j < ncols; j++)
    if (v[static_cast<size_t>(j)]) {
      pc = j;
      break;
    }
  if (pc < 0) return false;
  uint64_t inv = F.inv(v[static_cast<size_t>(pc)]);
  for (int j = pc; j < ncols; j++) v[static_cast<size_t>(j)] = F.mul(v[static_cast<size_t>(j)], inv);
  for (size_t r = 0; r < rows.size(); r++) {
    uint64_t c = rows[r][static_cast<size_t>(pc)];
    if (c == 0) continue;
    for (int j = pc; j < ncols; j++)
      rows[r][static_cast<size_t>(j)] = F.sub(rows[r][static_cast<size_t>(j)], F.mul(c, v[static_cast<size_t>(j)]));
  }
  size_t at = rows.size();
  for (size_t r = 0; r < rows.size(); r++)
    if (pivcol[r] > pc) {
      at = r;
      break;
    }
  rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
  pivcol.insert(pivcol.begin() + static_cast<long>(at), pc);
  return true;
}

std::vector<PVec> kernel_mod_p(const std::vector<PVec>& rows, int ncols, uint64_t p) {
  PEchelon e(p, ncols);
  for (const auto& r : rows) e.add(r);
  std::vector<bool> is_piv(static_cast<size_t>(ncols), false);
  for (int c : e.pivcol) is_piv[static_cast<size_t>(c)] = true;
  std::vector<PVec> out;
  for (int free = 0; free < ncols; free++) {
    if (is_piv[static_cast<size_t>(free)]) continue;
    PVec v(static_cast<size_t>(ncols), 0);
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < e.rows.size(); r++) {
      uint64_t c = e.rows[r][static_cast<size_t>(free)];
      if (c) v[static_cast<size_t>(e.pivcol[r])] = e.F.neg(c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Rat> rat_reconstruct(const Int& a0, const Int& m) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
  Int r1 = a0 % m;
  if (r1 < 0) r1 += m;
  Int r0 = m, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (sgn(t1) == 0) return std::nullopt;
  Int n = r1, d = t1;
  if (sgn(d) < 0) {
    n = -n;
    d = -d;
  }
  if (d > bound) return std::nullopt;
  if (int_gcd(n, d) != 1) return std::nullopt;
  Rat out = make_rat(n, d);
  // verify the congruence num = den * a (mod m)
  Int chk = (n - d * a0) % m;
  if (chk != 0) return std::nullopt;
  return out;
}

Int crt_pair(const Int& a1, const Int& m1, const Int& a2, const Int& m2) {
  // x = a1 + m1 * ((a2 - a1) * m1^{-1} mod m2)
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw domain_error("crt: moduli not coprime");
  Int diff = (a2 - a1) % m2;
  if (diff < 0) diff += m2;
  Int k = (diff * inv) % m2;
  return a1 + m1 * k;
}

}  // namespace curvepencil
