#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvepencil/numberfield.hpp"
#include "curvepencil/unifactor.hpp"

using namespace curvepencil;

namespace {

QPoly from_ints(std::initializer_list<long> cs) {
  std::vector<Rat> c;
  for (long v : cs) c.push_back(Rat(v));
  return QPoly(std::move(c));
}

NFElem rand_elem(const NumberFieldPtr& K, std::mt19937_64& rng) {
  std::vector<Rat> c(static_cast<size_t>(K->degree()));
  for (auto& x : c) x = Rat(static_cast<long>(rng() % 11) - 5);
  return NFElem(K, QPoly(std::move(c)));
}

}  // namespace

TEST_CASE("field axioms in Q[t]/(t^2+3t+1), randomized") {
  auto K = make_number_field(from_ints({1, 3, 1}), "a");
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 100; i++) {
    NFElem a = rand_elem(K, rng), b = rand_elem(K, rng), c = rand_elem(K, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * nf_inverse(a) == one_like(a));
  }
  // the generator satisfies its minimal polynomial
  NFElem t = nf_generator(K);
  CHECK(nf_eval(from_ints({1, 3, 1}), t).is_zero());
  // conjugate pair data: t1 + t2 = -3 and t1 t2 = 1 seen through the trace form
  // t^2 = -3t - 1
  CHECK((t * t) == nf_from_rat(K, Rat(-1)) - t * nf_from_rat(K, Rat(3)));
}

TEST_CASE("gcd and division in K[z]") {
  auto K = make_number_field(from_ints({1, 3, 1}), "a");
  NFElem t = nf_generator(K);
  // (z - t)(z + t) = z^2 - t^2
  NFPoly zm(std::vector<NFElem>{zero_like(t) - t, one_like(t)});
  NFPoly zp(std::vector<NFElem>{t, one_like(t)});
  NFPoly prod = zm * zp;
  CHECK(gcd_field(prod, zm) == zm);
  auto [q, r] = divrem_field(prod, zp);
  CHECK(r.is_zero());
  CHECK(q == zm);
}

TEST_CASE("trager: z^3 - c splits off the alpha root over the right field") {
  // over Q[a]/(a^3 - 2): z^3 - 2 = (z - a)(z^2 + a z + a^2)
  auto K = make_number_field(from_ints({-2, 0, 0, 1}), "a");
  NFElem a = nf_generator(K);
  NFPoly h = nf_lift_poly(K, from_ints({-2, 0, 0, 1}));
  auto facs = factor_nf(h);
  REQUIRE(facs.size() == 2);
  int deg1 = 0, deg2 = 0;
  for (auto& [f, m] : facs) {
    CHECK(m == 1);
    if (f.degree() == 1) {
      deg1++;
      // root is a itself: f = z - a
      CHECK(f.coeff(0, zero_like(a)) == zero_like(a) - a);
    } else {
      deg2++;
      CHECK(f.degree() == 2);
    }
  }
  CHECK(deg1 == 1);
  CHECK(deg2 == 1);
}

TEST_CASE("trager: cyclotomic split over the quadratic subfield") {
  // x^2+x+1 stays irreducible over Q[a]/(a^2+3a+1) (a real quadratic field)
  auto K = make_number_field(from_ints({1, 3, 1}), "a");
  NFPoly h = nf_lift_poly(K, from_ints({1, 1, 1}));
  CHECK(is_irreducible_nf(h));
  // but z^2 - 5 splits there: 5 = (2a+3)^2 / 1? (a^2+3a+1=0 => (2a+3)^2 = 4a^2+12a+9 = 4(-3a-1)+12a+9 = 5)
  NFPoly z25 = nf_lift_poly(K, from_ints({-5, 0, 1}));
  auto facs = factor_nf(z25);
  REQUIRE(facs.size() == 2);
  CHECK(facs[0].first.degree() == 1);
  CHECK(facs[1].first.degree() == 1);
}

TEST_CASE("trager: the theorem-1 fiber cubic stays irreducible over Q(omega)") {
  // K = Q[w]/(w^2+w+1); h = z^3 + 3w z + 1 is the base-point fiber over y = w
  auto K = make_number_field(from_ints({1, 1, 1}), "w");
  NFElem w = nf_generator(K);
  NFElem z0 = zero_like(w), z1 = one_like(w);
  NFPoly h(std::vector<NFElem>{z1, w * nf_from_rat(K, Rat(3)), z0, z1});
  CHECK(is_irreducible_nf(h));
}

TEST_CASE("multiplicities over K") {
  auto K = make_number_field(from_ints({1, 1, 1}), "w");
  NFElem w = nf_generator(K);
  NFPoly zmw(std::vector<NFElem>{zero_like(w) - w, one_like(w)});  // z - w
  NFPoly h = zmw * zmw * nf_lift_poly(K, from_ints({1, 1}));       // (z-w)^2 (z+1)
  auto facs = factor_nf(h);
  REQUIRE(facs.size() == 2);
  for (auto& [f, m] : facs) {
    if (f == zmw)
      CHECK(m == 2);
    else
      CHECK(m == 1);
  }
}
