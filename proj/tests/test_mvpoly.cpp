#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvepencil/mvpoly.hpp"

using namespace curvepencil;

namespace {

MPoly rand_poly(std::mt19937_64& rng, int deg, int nterms) {
  MPoly acc = mp_zero(kMaskXYZ);
  for (int i = 0; i < nterms; i++) {
    int a = static_cast<int>(rng() % (deg + 1));
    int b = static_cast<int>(rng() % (deg + 1 - a));
    int c = deg - a - b;
    Mono m;
    m.e[VX] = a;
    m.e[VY] = b;
    m.e[VZ] = c;
    long coef = static_cast<long>(rng() % 11) - 5;
    acc = acc + mp_term(kMaskXYZ, m, Rat(coef));
  }
  return acc;
}

}  // namespace

TEST_CASE("parsing, printing, and round trips") {
  MPoly p = parse_poly("3*x*y*z + y^3 + z^3");
  CHECK(p.nterms() == 3);
  CHECK(p.is_homogeneous());
  CHECK(p.wdeg() == 3);
  // canonical printing is grevlex-descending (y^3 beats x*y*z there)
  CHECK(mp_to_string(p) == "y^3 + 3*x*y*z + z^3");
  CHECK(parse_poly(mp_to_string(p)) == p);
  // juxtaposition and whitespace insensitivity
  CHECK(parse_poly("3xyz+y^3+z^3") == p);
  CHECK(parse_poly("  3 x y z\t+ y^3 +z^3 ") == p);
  // rational coefficients and nested signs
  MPoly q = parse_poly("1/2*x^2 - -3/4*y*x + (x - y)*(x + y)");
  CHECK(parse_poly(mp_to_string(q)) == q);
  // errors carry a column
  CHECK_THROWS_AS(parse_poly("x + % y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x + "), ParseError);
  CHECK_THROWS_AS(parse_poly("(x"), ParseError);
  try {
    parse_poly("x ? y");
  } catch (const ParseError& e) {
    CHECK(e.column == 2);
  }
}

TEST_CASE("ring operations keep canonical form and homogeneity checks work") {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 30; i++) {
    MPoly a = rand_poly(rng, 4, 5), b = rand_poly(rng, 4, 5), c = rand_poly(rng, 3, 4);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a.is_homogeneous());
  }
  CHECK_THROWS_AS(HomPoly(parse_poly("x^2 + y")), domain_error);
}

TEST_CASE("chart restriction z->0 is a ring homomorphism") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; i++) {
    MPoly a = rand_poly(rng, 4, 6), b = rand_poly(rng, 4, 6);
    CHECK(subst_const(a * b, VZ, Rat(0)) == subst_const(a, VZ, Rat(0)) * subst_const(b, VZ, Rat(0)));
    CHECK(subst_const(a + b, VZ, Rat(0)) == subst_const(a, VZ, Rat(0)) + subst_const(b, VZ, Rat(0)));
  }
}

TEST_CASE("jacobian examples and the Euler identity") {
  HomPoly f = parse_hom("3xyz + y^3 + z^3");
  auto [fx, fy, fz] = jacobian(f);
  CHECK(fx.p == parse_poly("3yz"));
  CHECK(fy.p == parse_poly("3xz + 3y^2"));
  CHECK(fz.p == parse_poly("3xy + 3z^2"));
  // f = x^d
  HomPoly g = parse_hom("x^5");
  auto [gx, gy, gz] = jacobian(g);
  CHECK(gx.p == parse_poly("5x^4"));
  CHECK(gy.p.is_zero());
  CHECK(gz.p.is_zero());
  // Euler identity d*f = x f_x + y f_y + z f_z on a degree-15 product
  HomPoly q1 = parse_hom("3xyz + y^3 + z^3");
  HomPoly q2 = parse_hom("3xyz + x^3 + z^3");
  Pencil P(q1, q2);
  QPoly quad = qpoly({Rat(1), Rat(3), Rat(1)});
  MPoly f15 = (q1.p * q2.p) * (q1.p - q2.p) * pencil_compose(quad, P).p;
  CHECK(HomPoly(f15).degree == 15);
  auto [hx, hy, hz] = jacobian(HomPoly(f15));
  MPoly euler = mp_var(kMaskXYZ, VX) * hx.p + mp_var(kMaskXYZ, VY) * hy.p + mp_var(kMaskXYZ, VZ) * hz.p;
  CHECK(euler == scale(f15, Rat(15)));
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(parse_hom("xyz")));
  CHECK_FALSE(is_reduced(parse_hom("x^2*y")));
  CHECK(is_reduced(parse_hom("3xyz + y^3 + z^3")));
  CHECK_FALSE(is_reduced(parse_hom("(x+y)^2*(x-y)")));
  // the degree-15 theorem-1 union is reduced
  HomPoly q1 = parse_hom("3xyz + y^3 + z^3");
  HomPoly q2 = parse_hom("3xyz + x^3 + z^3");
  Pencil P(q1, q2);
  QPoly quad = qpoly({Rat(1), Rat(3), Rat(1)});
  MPoly f15 = (q1.p * q2.p) * (q1.p - q2.p) * pencil_compose(quad, P).p;
  CHECK(is_reduced(HomPoly(f15)));
}

TEST_CASE("pencil_compose matches the known closed forms") {
  HomPoly q1 = parse_hom("3xyz + y^3 + z^3");
  HomPoly q2 = parse_hom("3xyz + x^3 + z^3");
  Pencil P(q1, q2);
  // p = t^2 + 3t + 1 -> q1^2 - 3 q1 q2 + q2^2
  QPoly quad = qpoly({Rat(1), Rat(3), Rat(1)});
  MPoly expect = q1.p * q1.p - scale(q1.p * q2.p, Rat(3)) + q2.p * q2.p;
  CHECK(pencil_compose(quad, P).p == expect);
  // p = t -> member at t=0, i.e. q1
  CHECK(pencil_compose(qpoly({Rat(0), Rat(1)}), P).p == q1.p);
  // theorem-2 cubic: p = t^3 + 399/125 t^2 + 339/125 t + 1/125
  HomPoly r1 = parse_hom("y*(x-y-z)*(2x+y-z)");
  HomPoly r2 = parse_hom("x*z*(2x-5y+z)");
  Pencil P2(r1, r2);
  QPoly cubic = qpoly({Rat(1, 125), Rat(339, 125), Rat(399, 125), Rat(1)});
  MPoly lhs = pencil_compose(cubic, P2).p;
  MPoly rhs = scale(mp_pow(r1.p, 3), Rat(1)) - scale(mp_pow(r1.p, 2) * r2.p, Rat(399, 125)) +
              scale(r1.p * mp_pow(r2.p, 2), Rat(339, 125)) - scale(mp_pow(r2.p, 3), Rat(1, 125));
  CHECK(lhs == rhs);
  CHECK(HomPoly(lhs).degree == 9);
  // non-monic input is rejected with a normalize-first error
  CHECK_THROWS_AS(pencil_compose(qpoly({Rat(1), Rat(3), Rat(5)}), P), domain_error);
}

TEST_CASE("pencil_compose is multiplicative over coprime monic factors") {
  HomPoly q1 = parse_hom("3xyz + y^3 + z^3");
  HomPoly q2 = parse_hom("3xyz + x^3 + z^3");
  Pencil P(q1, q2);
  QPoly a = qpoly({Rat(1), Rat(3), Rat(1)});
  QPoly b = qpoly({Rat(2), Rat(1)});
  QPoly c = qpoly({Rat(0), Rat(1)});
  CHECK(pencil_compose(a * b, P).p == pencil_compose(a, P).p * pencil_compose(b, P).p);
  CHECK(pencil_compose(b * c, P).p == pencil_compose(b, P).p * pencil_compose(c, P).p);
}

TEST_CASE("pencil constructor enforces its invariants") {
  HomPoly a = parse_hom("x^2 + y*z");
  HomPoly b = parse_hom("y^2 + x*z");
  Pencil ok(a, b);
  CHECK(ok.k == 2);
  CHECK_THROWS_AS(Pencil(a, parse_hom("x^3")), domain_error);
  CHECK_THROWS_AS(Pencil(a, parse_hom("2*x^2 + 2*y*z")), domain_error);
}

TEST_CASE("gcd_mv on structured inputs") {
  MPoly a = parse_poly("(x+y)*(x-y)");
  MPoly b = parse_poly("(x+y)*(x+2y)");
  CHECK(gcd_mv(a, b) == parse_poly("x+y"));
  MPoly c = parse_poly("x^2*y*(x+y+z)^2");
  MPoly d = parse_poly("x*y^2*(x+y+z)");
  CHECK(gcd_mv(c, d) == parse_poly("x*y*(x+y+z)"));
  CHECK(gcd_mv(parse_poly("x^2+y^2"), parse_poly("z^2")).wdeg() == 0);
}
