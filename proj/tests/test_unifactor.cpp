#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvepencil/unifactor.hpp"

using namespace curvepencil;

namespace {

QPoly from_ints(std::initializer_list<long> cs) {
  std::vector<Rat> c;
  for (long v : cs) c.push_back(Rat(v));
  return QPoly(std::move(c));
}

bool has_factor(const QFactorization& f, const QPoly& prim, int mult) {
  for (const auto& g : f.factors)
    if (g.primitive_z == prim && g.multiplicity == mult) return true;
  return false;
}

}  // namespace

TEST_CASE("t^2-1 factors into (t-1)(t+1)") {
  QFactorization f = factor_rational(from_ints({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(has_factor(f, from_ints({-1, 1}), 1));
  CHECK(has_factor(f, from_ints({1, 1}), 1));
  CHECK(f.content == Rat(1));
  CHECK(f.expand_primitive() == from_ints({-1, 0, 1}));
}

TEST_CASE("the expanded resultant 110592 v^3 (v+1)^3 (125v^3+399v^2+339v+1)") {
  QPoly v = from_ints({0, 1});
  QPoly vp1 = from_ints({1, 1});
  QPoly cubic = from_ints({1, 339, 399, 125});
  QPoly input = qpoly_const(Rat(110592)) * v * v * v * vp1 * vp1 * vp1 * cubic;
  QFactorization f = factor_rational(input);
  REQUIRE(f.factors.size() == 3);
  CHECK(has_factor(f, v, 3));
  CHECK(has_factor(f, vp1, 3));
  CHECK(has_factor(f, cubic, 1));
  CHECK(f.content == Rat(110592));
  CHECK(f.expand_primitive() == input);
}

TEST_CASE("(t^2+3t+1)(t^3+3t+1) splits into exactly those two factors") {
  QPoly a = from_ints({1, 3, 1});
  QPoly b = from_ints({1, 3, 0, 1});
  QFactorization f = factor_rational(a * b);
  REQUIRE(f.factors.size() == 2);
  CHECK(has_factor(f, a, 1));
  CHECK(has_factor(f, b, 1));
  CHECK(f.expand_primitive() == a * b);
}

TEST_CASE("irreducibility checks") {
  CHECK(is_irreducible_q(from_ints({1, 3, 1})));
  CHECK(is_irreducible_q(from_ints({1, 339, 399, 125})));
  CHECK(is_irreducible_q(from_ints({1, 3, 0, 1})));
  CHECK_FALSE(is_irreducible_q(from_ints({-1, 0, 1})));
  // z^3+3z+1 and the sextic from the other two base-point fibers
  CHECK(is_irreducible_q(from_ints({1, 3, 0, 1})));
}

TEST_CASE("zero input is a domain error, constants factor trivially") {
  CHECK_THROWS_AS(factor_rational(QPoly()), domain_error);
  QFactorization f = factor_rational(qpoly_const(Rat(7, 3)));
  CHECK(f.factors.empty());
  CHECK(f.content == Rat(7, 3));
}

TEST_CASE("factor then re-expand on random products, including multiplicities") {
  std::mt19937_64 rng(2024);
  std::vector<QPoly> pool = {
      from_ints({-1, 1}), from_ints({1, 1}),  from_ints({-2, 1}), from_ints({3, 1}),
      from_ints({1, 3, 1}), from_ints({1, 0, 1}), from_ints({1, 1, 1}),
      from_ints({1, 3, 0, 1}), from_ints({2, 0, 0, 1}), from_ints({-2, 0, 1}),
  };
  for (int trial = 0; trial < 20; trial++) {
    QPoly prod = qpoly_const(Rat(static_cast<long>(rng() % 7) + 1));
    int nf = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nf; i++) {
      const QPoly& f = pool[rng() % pool.size()];
      int mult = 1 + static_cast<int>(rng() % 2);
      for (int j = 0; j < mult; j++) prod = prod * f;
    }
    QFactorization fac = factor_rational(prod);
    CHECK(fac.expand_primitive() == prod);
    for (const auto& g : fac.factors) {
      CHECK(is_irreducible_q(g.monic));
      CHECK(is_monic(g.monic));
      CHECK(sgn(g.primitive_z.lc()) > 0);
      Int gc(0);
      for (const auto& cc : g.primitive_z.c) {
        CHECK(den(cc) == 1);
        gc = int_gcd(gc, num(cc));
      }
      CHECK(gc == 1);
    }
  }
}

TEST_CASE("non-monic and rational-coefficient inputs") {
  // 6t^2 - 5t + 1 = (2t-1)(3t-1)
  QFactorization f = factor_rational(from_ints({1, -5, 6}));
  REQUIRE(f.factors.size() == 2);
  CHECK(has_factor(f, from_ints({-1, 2}), 1));
  CHECK(has_factor(f, from_ints({-1, 3}), 1));
  // (1/2)(2t-1)^2
  QPoly g = qpoly({Rat(1, 2), Rat(-2), Rat(2)});
  QFactorization fg = factor_rational(g);
  REQUIRE(fg.factors.size() == 1);
  CHECK(fg.factors[0].multiplicity == 2);
  CHECK(fg.factors[0].primitive_z == from_ints({-1, 2}));
  CHECK(fg.content == Rat(1, 2));
  CHECK(fg.expand_primitive() == g);
}
