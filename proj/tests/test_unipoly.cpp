#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvepencil/unipoly.hpp"

using namespace curvepencil;

namespace {

Rat rand_rat(std::mt19937_64& rng) {
  long n = static_cast<long>(rng() % 41) - 20;
  long d = static_cast<long>(rng() % 9) + 1;
  return make_rat(Int(n), Int(d));
}

QPoly rand_qpoly(std::mt19937_64& rng, int maxdeg) {
  int d = static_cast<int>(rng() % static_cast<uint64_t>(maxdeg + 1));
  std::vector<Rat> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = rand_rat(rng);
  return QPoly(std::move(c));
}

// Sylvester determinant oracle: exact Gaussian elimination over Q.
Rat sylvester_resultant(const QPoly& p, const QPoly& q) {
  int m = p.degree(), n = q.degree();
  REQUIRE(m >= 0);
  REQUIRE(n >= 0);
  if (m == 0 && n == 0) return Rat(1);
  int N = m + n;
  std::vector<std::vector<Rat>> a(static_cast<size_t>(N), std::vector<Rat>(static_cast<size_t>(N), Rat(0)));
  for (int r = 0; r < n; r++)
    for (int j = 0; j <= m; j++) a[r][r + j] = p.coeff(m - j, Rat(0));
  for (int r = 0; r < m; r++)
    for (int j = 0; j <= n; j++) a[n + r][r + j] = q.coeff(n - j, Rat(0));
  Rat det(1);
  for (int col = 0; col < N; col++) {
    int piv = -1;
    for (int r = col; r < N; r++)
      if (sgn(a[r][col]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < N; r++) {
      if (sgn(a[r][col]) == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (int j = col; j < N; j++) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("rational field axioms, randomized") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 200; i++) {
    Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
    if (sgn(a) != 0) CHECK(a * (Rat(1) / a) == Rat(1));
    CHECK(den(a + b) >= 1);
    CHECK(int_gcd(num(a + b), den(a + b)) == 1);
  }
}

TEST_CASE("basic polynomial arithmetic and division") {
  QPoly p = qpoly({Rat(1), Rat(3), Rat(1)});   // 1 + 3t + t^2
  QPoly q = qpoly({Rat(-1), Rat(1)});          // t - 1
  QPoly prod = p * q;
  auto [quo, rem] = divrem_field(prod, q);
  CHECK(quo == p);
  CHECK(rem.is_zero());
  auto [q2, r2] = divrem_field(p, q);
  CHECK(eval(p, Rat(1)) == r2.coeff(0, Rat(0)));
  CHECK((q2 * q + r2) == p);
}

TEST_CASE("gcd over Q and squarefree machinery") {
  QPoly a = qpoly({Rat(-1), Rat(0), Rat(1)});  // t^2-1
  QPoly b = qpoly({Rat(1), Rat(1)});           // t+1
  CHECK(gcd_q(a, b) == monic(b));
  CHECK(is_squarefree_q(a));
  QPoly sq = a * a * b;
  CHECK_FALSE(is_squarefree_q(sq));
  auto [parts, lead] = yun_squarefree(sq);
  CHECK(lead == Rat(1));
  QPoly re = qpoly_const(Rat(1));
  for (auto& [f, m] : parts)
    for (int i = 0; i < m; i++) re = re * f;
  CHECK(re == monic(sq));
}

TEST_CASE("resultant convention res(t-a, t-b) = a-b") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; i++) {
    Rat a = rand_rat(rng), b = rand_rat(rng);
    QPoly p = qpoly({-a, Rat(1)});
    QPoly q = qpoly({-b, Rat(1)});
    CHECK(resultant(p, q) == a - b);
  }
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 60) {
    QPoly p = rand_qpoly(rng, 6);
    QPoly q = rand_qpoly(rng, 6);
    if (p.is_zero() || q.is_zero() || p.degree() < 1 || q.degree() < 1) continue;
    CHECK(resultant(p, q) == sylvester_resultant(p, q));
    done++;
  }
}

TEST_CASE("resultant detects common factors exactly") {
  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 40) {
    QPoly p = rand_qpoly(rng, 4);
    QPoly q = rand_qpoly(rng, 4);
    if (p.degree() < 1 || q.degree() < 1) continue;
    bool share = gcd_q(p, q).degree() > 0;
    Rat r = resultant(p, q);
    CHECK((sgn(r) == 0) == share);
    done++;
  }
  // forced common factor
  QPoly c = qpoly({Rat(2), Rat(0), Rat(1)});
  QPoly p = c * qpoly({Rat(1), Rat(1)});
  QPoly q = c * qpoly({Rat(-3), Rat(1)});
  CHECK(sgn(resultant(p, q)) == 0);
}

TEST_CASE("discriminant of t^2+3t+1 is 5 and the polynomial is squarefree") {
  QPoly p = qpoly({Rat(1), Rat(3), Rat(1)});
  CHECK(discriminant_q(p) == Rat(5));
  CHECK(sgn(resultant(p, derivative_q(p))) != 0);
  CHECK(is_squarefree_q(p));
}

TEST_CASE("cyclotomic basics and the product identity up to N=60") {
  CHECK(cyclotomic(1) == qpoly({Rat(-1), Rat(1)}));
  CHECK(cyclotomic(5) == qpoly({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
  // phi_6 derived by dividing t^6-1 by phi_1 phi_2 phi_3
  {
    std::vector<Rat> c(7, Rat(0));
    c[0] = Rat(-1);
    c[6] = Rat(1);
    QPoly t6(std::move(c));
    QPoly d = cyclotomic(1) * cyclotomic(2) * cyclotomic(3);
    auto [q, r] = divrem_field(t6, d);
    CHECK(r.is_zero());
    CHECK(cyclotomic(6) == q);
    CHECK(cyclotomic(6) == qpoly({Rat(1), Rat(-1), Rat(1)}));
  }
  for (int N = 1; N <= 60; N++) {
    QPoly prod = qpoly_const(Rat(1));
    for (int d = 1; d <= N; d++)
      if (N % d == 0) prod = prod * cyclotomic(d);
    std::vector<Rat> c(static_cast<size_t>(N) + 1, Rat(0));
    c[0] = Rat(-1);
    c[static_cast<size_t>(N)] = Rat(1);
    CHECK(prod == QPoly(std::move(c)));
  }
  CHECK_THROWS_AS(cyclotomic(0), domain_error);
}

TEST_CASE("printing round-trips through simple forms") {
  QPoly p = qpoly({Rat(1), Rat(3), Rat(1)});
  CHECK(upoly_to_string(p, "t") == "t^2 + 3*t + 1");
  CHECK(upoly_to_string(QPoly(), "t") == "0");
  CHECK(upoly_to_string(qpoly({Rat(-1, 2), Rat(0), Rat(1)}), "t") == "t^2 - 1/2");
}
