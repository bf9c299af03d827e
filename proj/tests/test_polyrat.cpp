#include <random>

#include "doctest.h"
#include "leafspec/ratfunc.hpp"
#include "oracles.hpp"

using namespace leafspec;

namespace {

Poly<Rational> poly(std::vector<long> v) {
  std::vector<Rational> c(v.begin(), v.end());
  return Poly<Rational>(std::move(c));
}

using RF = RationalFunction<Rational>;

}  // namespace

TEST_CASE("polynomial division and gcd") {
  Poly<Rational> z3m1 = poly({-1, 0, 0, 1});
  Poly<Rational> zm1 = poly({-1, 1});
  auto [q, r] = poly_divmod(z3m1, zm1);
  CHECK(q == poly({1, 1, 1}));
  CHECK(r.is_zero());

  auto [q2, r2] = poly_divmod(poly({1, 2, 3}), poly({5, 1}));
  CHECK(q2 * poly({5, 1}) + r2 == poly({1, 2, 3}));
  CHECK(r2.deg() < 1);

  CHECK(poly_gcd(poly({-1, 0, 1}), z3m1) == poly({-1, 1}));
  CHECK(poly_gcd(poly({1, 1}), poly({1, 0, 1})) == poly({1}));
  CHECK_THROWS_AS(poly_divmod(z3m1, Poly<Rational>()), DivisionByZero);

  SUBCASE("extended gcd certifies itself") {
    Poly<Rational> a = poly({2, 0, 1, 4}), b = poly({1, 3, 1});
    auto [g, u, v] = poly_ext_gcd(a, b);
    CHECK(u * a + v * b == g);
    CHECK(g == poly({1}));  // coprime pair
  }
}

TEST_CASE("composition and powers") {
  // (z - 1)^2 + 1 = z^2 - 2z + 2
  CHECK(poly_compose(poly({1, 0, 1}), poly({-1, 1})) == poly({2, -2, 1}));
  CHECK(poly_pow(poly({1, 1}), 3) == poly({1, 3, 3, 1}));
  CHECK(poly_pow(poly({0, 1}), 0) == poly({1}));
  CHECK(poly({1, 2}).eval(Rational(3)) == Rational(7));
}

TEST_CASE("rational function normalization") {
  // (1 - z^2) / ((1 - z)(2 + z)) == (1 + z) / (2 + z) as functions
  RF f(poly({1, 0, -1}), Rational(-1) * (poly({-1, 1}) * poly({2, 1})));
  RF g(poly({1, 1}), poly({2, 1}));
  CHECK(f == g);
  RF fn = f.normalized();
  CHECK(fn.den.at(0) == Rational(1));
  CHECK(poly_gcd(fn.num, fn.den).deg() == 0);

  SUBCASE("factored form survives a no-op reduction") {
    RF h(poly({1}), FactoredDenominator{{4, 1}, {2, 1}});
    CHECK(h.den == poly({1, 0, -1}) * poly({1, 0, 0, 0, -1}));
    RF hn = h.normalized();
    REQUIRE(hn.factored_denominator.has_value());
    CHECK(*hn.factored_denominator == FactoredDenominator{{2, 1}, {4, 1}});  // sorted
  }

  SUBCASE("arithmetic matches function algebra") {
    RF a(poly({1}), poly({1, -1}));          // 1/(1-z)
    RF b(poly({1}), poly({1, 1}));           // 1/(1+z)
    CHECK(a + b == RF(poly({2}), poly({1, 0, -1})));
    CHECK(a * b == RF(poly({1}), poly({1, 0, -1})));
    CHECK(a - a == RF());
    CHECK(RF() == RF(Poly<Rational>(), poly({5})));
    CHECK(a / b == RF(poly({1, 1}), poly({1, -1})));
    CHECK_THROWS_AS(a / RF(), DivisionByZero);
    CHECK_THROWS_AS(RF(poly({1}), Poly<Rational>()), DivisionByZero);
  }
}

TEST_CASE("series coefficients against stride summation") {
  SUBCASE("1/(1-z)^2 counts k+1") {
    RF f(poly({1}), FactoredDenominator{{1, 2}});
    auto c = series_coefficients(f, 10);
    for (unsigned k = 0; k <= 10; ++k) CHECK(c[k] == Rational(k + 1));
  }

  SUBCASE("randomized factored denominators") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
      FactoredDenominator factors;
      unsigned nf = 1 + rng() % 3;
      for (unsigned i = 0; i < nf; ++i)
        factors.emplace_back(1 + rng() % 6, 1 + rng() % 3);
      std::vector<Rational> nc;
      unsigned nd = rng() % 5;
      for (unsigned i = 0; i <= nd; ++i)
        nc.emplace_back(static_cast<long>(rng() % 9) - 4);
      Poly<Rational> num(std::move(nc));

      RF f(num, factors);
      auto got = series_coefficients(f, 60);
      auto want = oracles::geometric_series(num, factors, 60);
      CHECK(got == want);
      CHECK(oracles::series_times_den_is_num(f, got));
    }
  }

  SUBCASE("pole at the origin is rejected, removable one is not") {
    CHECK_THROWS_AS(series_coefficients(RF(poly({1}), poly({0, 1})), 4), PoleAtOrigin);
    // z / z(1-z) reduces to an honest power series.
    RF f(poly({0, 1}), poly({0, 1}) * poly({1, -1}));
    CHECK(series_coefficients(f, 3) == std::vector<Rational>{1, 1, 1, 1});
  }
}

TEST_CASE("laurent expansions") {
  SUBCASE("simple pole at one") {
    auto L = laurent_at_one(RF(poly({1}), poly({1, -1})), 3);
    CHECK(L.pole_order == 1);
    CHECK(L.leading() == Rational(1));
    CHECK(L.coeffs == std::vector<Rational>{1, 0, 0, 0});
  }

  SUBCASE("order and leading value at z = 1") {
    // 1/((1-z^2)(1-z^4)): order 2, leading 1/8
    RF f(poly({1}), FactoredDenominator{{2, 1}, {4, 1}});
    auto L = laurent_at_one(f, 2);
    CHECK(L.pole_order == 2);
    CHECK(L.leading() == Rational(1, 8));
  }

  SUBCASE("pole order at minus one counts the full multiplicity") {
    // (1+z^2)/(1-z^2)^3 at z = -1: numerator does not vanish there, so the
    // order is the denominator's, 3, with leading coefficient -1/4 in the
    // parameter t = -1 - z.
    RF f(poly({1, 0, 1}), FactoredDenominator{{2, 3}});
    CHECK(pole_order(f, CyclotomicElement(-1)) == 3);
    CHECK(pole_order(f, CyclotomicElement(1)) == 3);
    CHECK(pole_order(f, CyclotomicElement::root_of_unity(3, 1)) == 0);
    auto L = laurent_at(f, Rational(-1), 0);
    CHECK(L.pole_order == 3);
    CHECK(L.leading() == Rational(-1, 4));
  }

  SUBCASE("regular point has pole order zero") {
    RF f(poly({1}), poly({1, -1}));
    CHECK(pole_order(f, CyclotomicElement(0)) == 0);
    auto L = laurent_at(f, Rational(0), 2);
    CHECK(L.pole_order == 0);
    // Parameter t = -z, so 1/(1-z) = 1/(1+t) alternates.
    CHECK(L.coeffs == std::vector<Rational>{1, -1, 1});
  }
}

TEST_CASE("cyclotomic factorization of denominators") {
  auto fac = factor_into_cyclotomics(poly({1, 0, -1}) * poly({1, 0, 0, 0, -1}));
  CHECK(fac.leftover.deg() == 0);
  CHECK(fac.phi_powers ==
        std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 2}, {4, 1}});

  auto partial = factor_into_cyclotomics(poly({-2, 0, 1}) * poly({1, 1}));
  CHECK(partial.phi_powers == std::vector<std::pair<unsigned, unsigned>>{{2, 1}});
  CHECK(partial.leftover.deg() == 2);  // z^2 - 2 is not cyclotomic
}

TEST_CASE("partial fractions round-trip") {
  std::vector<RF> cases = {
      RF(poly({1}), FactoredDenominator{{1, 2}}),
      RF(poly({1}), FactoredDenominator{{2, 1}, {4, 1}}),
      RF(poly({1, 0, 1}), FactoredDenominator{{2, 3}}),
      RF(poly({1}), FactoredDenominator{{3, 1}}),
      RF(poly({1, 0, 0, 0, 0, 0, 1}), FactoredDenominator{{2, 1}, {6, 1}}),
      RF(poly({2, 1, 0, 3}), poly({1, -1})),  // nonzero polynomial part
  };
  for (const auto& f : cases) {
    CAPTURE(f.num.str());
    PartialFractionForm pf = partial_fractions(f);
    CHECK(pf_reconstruct(pf) == f);
    CHECK(pf_series(pf, 40) == series_coefficients(f, 40));
    for (const auto& term : pf.terms) {
      CHECK_FALSE(term.coeff.is_zero());
      CHECK(term.order >= 1);
      CHECK(term.pole == CyclotomicElement::root_of_unity(term.root_order, term.exponent));
    }
  }

  CHECK_THROWS_AS(partial_fractions(RF(poly({1}), poly({1, -2}))), NonCyclotomicPole);
}

TEST_CASE("asymptotic coefficient growth") {
  SUBCASE("single dominant pole gives a constant") {
    auto prof = asymptotic_profile(RF(poly({1}), FactoredDenominator{{1, 2}}));
    CHECK(prof.exponent == 1);
    CHECK(prof.is_constant);
    CHECK(prof.constant == Rational(1));
    CHECK(prof.average == Rational(1));
  }

  SUBCASE("pure period three") {
    auto prof = asymptotic_profile(RF(poly({1}), FactoredDenominator{{3, 1}}));
    CHECK(prof.exponent == 0);
    CHECK_FALSE(prof.is_constant);
    CHECK(prof.cycle == std::vector<Rational>{1, 0, 0});
    CHECK(prof.average == Rational(1, 3));
  }

  SUBCASE("two dominant poles beat with period two") {
    RF f(poly({1}), FactoredDenominator{{2, 1}, {4, 1}});
    auto prof = asymptotic_profile(f);
    CHECK(prof.exponent == 1);
    CHECK_FALSE(prof.is_constant);
    CHECK(prof.cycle == std::vector<Rational>{Rational(1, 4), Rational(0)});
    CHECK(prof.average == Rational(1, 8));
  }

  SUBCASE("multiplying by 1+z removes the beat") {
    RF h(poly({1, 0, 1}), FactoredDenominator{{2, 3}});
    RF f(poly({1, 1}) * h.num, h.den);
    auto prof = asymptotic_profile(f);
    CHECK(prof.exponent == 2);
    CHECK(prof.is_constant);
    CHECK(prof.constant == Rational(1, 4));  // 2 * (1/4) / 2!
  }

  CHECK_THROWS_AS(asymptotic_profile(RF(poly({1}), poly({1, -2}))), NonCyclotomicPole);
}

TEST_CASE("binomial helper") {
  CHECK(binomial(6, 3) == Rational(20));
  CHECK(binomial(5, 0) == Rational(1));
  CHECK(binomial(3, 5) == Rational(0));
}
