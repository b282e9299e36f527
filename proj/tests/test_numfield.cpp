#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "forge/error.hpp"
#include "forge/numfield.hpp"

using namespace forge;

namespace {

PolyQ poly(std::vector<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return PolyQ(std::move(v));
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  PolyQ a = poly({1, 2, 1}); // (x+1)^2
  PolyQ b = poly({1, 1});
  CHECK(a == b * b);
  auto div = poly_divmod(a, b);
  CHECK(div.quot == b);
  CHECK(div.rem.is_zero());
  CHECK(poly({0}).is_zero());
  CHECK(poly({5}).degree() == 0);
  CHECK(a.eval(Rat(2)) == 9);
}

TEST_CASE("resultants") {
  // Res_x(x^2 - 2, y - (1 + x)) as a function of y is y^2 - 2y - 1;
  // checked pointwise
  PolyQ f = poly({-2, 0, 1});
  for (long y0 : {0L, 1L, 2L, 5L, -3L}) {
    PolyQ g = poly({y0 - 1, -1});
    CHECK(resultant(f, g) == Rat(y0 * y0 - 2 * y0 - 1));
  }
  // Res(x^2-2, x^2-2) = 0
  CHECK(resultant(f, f) == 0);
  // Res of coprime constants
  CHECK(resultant(poly({3}), poly({1, 1})) == 3);
}

TEST_CASE("rational root detection") {
  CHECK(has_rational_root(poly({-2, 1})));        // x - 2
  CHECK(has_rational_root(poly({0, 1, 1})));      // x(x+1)
  CHECK_FALSE(has_rational_root(poly({-2, 0, 1}))); // x^2 - 2
  CHECK_FALSE(has_rational_root(poly({-1, -2, -1, 1}))); // x^3 - x^2 - 2x - 1
  // 2x^3 - 2x^2 - x - 2 and rational-coefficient cubics
  PolyQ f(std::vector<Rat>{Rat(-1), Rat(-1, 2), Rat(-1), Rat(1)});
  CHECK_FALSE(has_rational_root(f));
  CHECK(has_rational_root(PolyQ(std::vector<Rat>{Rat(-1, 2), Rat(1)}))); // x - 1/2
}

TEST_CASE("field construction") {
  CHECK_THROWS_AS(NumberField::create(poly({-2, 1})), Error);  // linear
  CHECK_THROWS_AS(NumberField::create(poly({-2, 0, 2})), Error); // not monic
  auto k = NumberField::create(poly({-2, 0, 1}));
  CHECK(k->degree() == 2);
}

TEST_CASE("characteristic polynomials") {
  SUBCASE("rational constants give (y - c)^d") {
    auto k = NumberField::create(poly({-2, 0, 1}));
    auto z = field_rational(k, Rat(3));
    CHECK(char_poly(z) == poly({9, -6, 1}));
  }
  SUBCASE("f = x^2 - 2, z = 1 + x: y^2 - 2y - 1") {
    auto k = NumberField::create(poly({-2, 0, 1}));
    auto z = make_element(k, poly({1, 1}));
    CHECK(char_poly(z) == poly({-1, -2, 1}));
  }
  SUBCASE("the generator reproduces the modulus") {
    auto f = poly({-1, -2, -1, 1});
    auto k = NumberField::create(f);
    CHECK(char_poly(field_generator(k)) == f);
  }
}

TEST_CASE("n_theta evaluation") {
  auto k = NumberField::create(poly({-2, 0, 1}));
  auto z = make_element(k, poly({1, 1})); // 1 + sqrt(2)
  CHECK(n_theta_eval(z, ThetaSpec::product()) == -1);
  CHECK(n_theta_eval(z, ThetaSpec::power_sum(2)) == 6);
  CHECK(n_theta_eval(z, ThetaSpec::power_sum(0)) == 2); // degree
  CHECK(n_theta_eval(z, ThetaSpec::sum()) == 2);
  SUBCASE("esym polynomial: e1^2 - 2 e2 equals p2") {
    ThetaSpec theta;
    theta.kind = ThetaSpec::Kind::esym_poly;
    theta.terms = {{Rat(1), {2}}, {Rat(-2), {0, 1}}};
    CHECK(n_theta_eval(z, theta) == 6);
  }
}

TEST_CASE("newton identity consistency on random elements") {
  // product matches the sign-adjusted constant term, sum matches minus the
  // subleading coefficient, for 200 random elements across fields of
  // degree <= 5
  std::mt19937 rng(411);
  std::vector<PolyQ> moduli = {
      poly({-2, 0, 1}),          // x^2 - 2
      poly({-1, -2, -1, 1}),     // x^3 - x^2 - 2x - 1
      poly({-2, 0, 0, 0, 1}),    // x^4 - 2
      poly({-1, -1, 0, 0, 0, 1}) // x^5 - x - 1
  };
  int checked = 0;
  for (const auto& f : moduli) {
    auto k = NumberField::create(f);
    const int d = f.degree();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rat> coeffs;
      for (int i = 0; i < d; ++i)
        coeffs.emplace_back(static_cast<long>(rng() % 11) - 5,
                            static_cast<long>(rng() % 3) + 1);
      for (auto& c : coeffs) c.canonicalize();
      auto z = make_element(k, PolyQ(coeffs));
      PolyQ cp = char_poly(z);
      Rat norm = n_theta_eval(z, ThetaSpec::product());
      Rat trace = n_theta_eval(z, ThetaSpec::sum());
      Rat c0 = cp.coeff(0);
      CHECK(norm == (d % 2 == 0 ? c0 : -c0));
      CHECK(trace == -cp.coeff(d - 1));
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("power sums via newton identities") {
  // roots 1, 2, 3: e = (6, 11, 6), p1 = 6, p2 = 14, p3 = 36, p4 = 98
  PolyQ cp = poly({-6, 11, -6, 1});
  auto e = elementary_symmetric(cp);
  CHECK(e[1] == 6);
  CHECK(e[2] == 11);
  CHECK(e[3] == 6);
  auto p = power_sums(e, 4);
  CHECK(p[1] == 6);
  CHECK(p[2] == 14);
  CHECK(p[3] == 36);
  CHECK(p[4] == 98);
}

TEST_CASE("rational squares and cubic discriminants") {
  CHECK(is_rational_square(Rat(4)));
  CHECK(is_rational_square(Rat(9, 16)));
  CHECK_FALSE(is_rational_square(Rat(-4)));
  CHECK_FALSE(is_rational_square(Rat(2)));
  CHECK(cubic_discriminant(poly({-1, -2, -1, 1})) == -31);
}
