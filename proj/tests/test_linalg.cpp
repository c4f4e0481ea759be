#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvepencil/linalg.hpp"

using namespace curvepencil;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

}  // namespace

TEST_CASE("exact echelon rank and kernel on a known system") {
  // rows are equations in 4 unknowns
  std::vector<QVec> rows = {qv({1, 2, 3, 4}), qv({2, 4, 6, 8}), qv({0, 1, 1, 0})};
  CHECK(rank_exact(rows, 4) == 2);
  auto ker = kernel_exact(rows, 4);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    for (const auto& row : rows) {
      Rat dot(0);
      for (int j = 0; j < 4; j++) dot += row[j] * Rat(v[j]);
      CHECK(sgn(dot) == 0);
    }
  }
}

TEST_CASE("exact and mod-p ranks agree on random integer matrices") {
  std::mt19937_64 rng(777);
  uint64_t p = nth_linalg_prime(0);
  for (int trial = 0; trial < 20; trial++) {
    int r = 3 + static_cast<int>(rng() % 5), c = 3 + static_cast<int>(rng() % 5);
    std::vector<QVec> rows;
    std::vector<PVec> prows;
    for (int i = 0; i < r; i++) {
      QVec qr(c);
      PVec pr(c);
      for (int j = 0; j < c; j++) {
        long v = static_cast<long>(rng() % 19) - 9;
        qr[j] = Rat(v);
        pr[j] = int_mod_p(Int(v), p);
      }
      rows.push_back(qr);
      prows.push_back(pr);
    }
    PEchelon pe(p, c);
    for (auto& pr : prows) pe.add(pr);
    CHECK(rank_exact(rows, c) == pe.rank());
    CHECK(kernel_exact(rows, c).size() == kernel_mod_p(prows, c, p).size());
  }
}

TEST_CASE("rational reconstruction round-trips through residues") {
  std::mt19937_64 rng(31);
  Int m = Int(nth_linalg_prime(0));
  for (int i = 0; i < 200; i++) {
    Int n = Int(static_cast<long>(rng() % 2000001) - 1000000);
    Int d = Int(static_cast<long>(rng() % 999983) + 1);
    Rat want = make_rat(n, d);
    // residue num * den^{-1} mod m
    Int dinv;
    REQUIRE(mpz_invert(dinv.get_mpz_t(), den(want).get_mpz_t(), m.get_mpz_t()) != 0);
    Int res = (num(want) % m) * dinv % m;
    if (res < 0) res += m;
    auto got = rat_reconstruct(res, m);
    REQUIRE(got.has_value());
    CHECK(*got == want);
  }
}

TEST_CASE("crt pairs") {
  Int m1 = Int(nth_linalg_prime(0)), m2 = Int(nth_linalg_prime(1));
  Int x("123456789123456789123456789");
  Int a1 = x % m1, a2 = x % m2;
  Int got = crt_pair(a1, m1, a2, m2);
  CHECK(got % m1 == a1);
  CHECK(got % m2 == a2);
  CHECK(got == x % (m1 * m2));
}

TEST_CASE("kernel vectors mod p lift to exact kernel vectors through reconstruction") {
  std::mt19937_64 rng(12);
  uint64_t p = nth_linalg_prime(0);
  for (int trial = 0; trial < 10; trial++) {
    int c = 6;
    std::vector<QVec> rows;
    std::vector<PVec> prows;
    for (int i = 0; i < 3; i++) {
      QVec qr(c);
      PVec pr(c);
      for (int j = 0; j < c; j++) {
        long v = static_cast<long>(rng() % 7) - 3;
        qr[j] = Rat(v);
        pr[j] = int_mod_p(Int(v), p);
      }
      rows.push_back(qr);
      prows.push_back(pr);
    }
    auto pker = kernel_mod_p(prows, c, p);
    auto qker = kernel_exact(rows, c);
    REQUIRE(pker.size() == qker.size());
    for (const auto& pv : pker) {
      // reconstruct and verify exactly
      QVec v(c);
      bool ok = true;
      for (int j = 0; j < c; j++) {
        auto r = rat_reconstruct(Int(pv[j]), Int(p));
        if (!r) {
          ok = false;
          break;
        }
        v[j] = *r;
      }
      REQUIRE(ok);
      for (const auto& row : rows) {
        Rat dot(0);
        for (int j = 0; j < c; j++) dot += row[j] * v[j];
        CHECK(sgn(dot) == 0);
      }
    }
  }
}
