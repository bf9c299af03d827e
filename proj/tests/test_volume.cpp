#include <random>

#include "doctest.h"
#include "leafspec/volume.hpp"
#include "leafspec/spectrum.hpp"
#include "oracles.hpp"

using namespace leafspec;

namespace {

Poly<Rational> poly(std::vector<long> v) {
  std::vector<Rational> c(v.begin(), v.end());
  return Poly<Rational>(std::move(c));
}

using RF = RationalFunction<Rational>;

Rational pow2(unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= Rational(2);
  return r;
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

}  // namespace

TEST_CASE("unit sphere and ball volumes") {
  CHECK(sphere_volume(0) == ExactConstant{Rational(2), 0});
  CHECK(sphere_volume(1) == ExactConstant{Rational(2), 1});
  CHECK(sphere_volume(2) == ExactConstant{Rational(4), 1});
  CHECK(sphere_volume(3) == ExactConstant{Rational(2), 2});
  CHECK(sphere_volume(4) == ExactConstant{Rational(8, 3), 2});
  CHECK(sphere_volume(5) == ExactConstant{Rational(1), 3});

  CHECK(ball_volume(0) == ExactConstant{Rational(1), 0});
  CHECK(ball_volume(1) == ExactConstant{Rational(2), 0});
  CHECK(ball_volume(2) == ExactConstant{Rational(1), 1});
  CHECK(ball_volume(3) == ExactConstant{Rational(4, 3), 1});
  CHECK(ball_volume(4) == ExactConstant{Rational(1, 2), 2});

  CHECK(ball_volume(2).value() == doctest::Approx(3.14159265358979).epsilon(1e-12));

  SUBCASE("product identity pins the whole table") {
    // omega_m Vol(S^m) = 2 (2 pi)^m / m!
    for (unsigned m = 0; m <= 20; ++m) {
      ExactConstant lhs = ball_volume(m) * sphere_volume(m);
      CHECK(lhs.pi_power == m);
      CHECK(lhs.rational_part == Rational(2) * pow2(m) / factorial(m));
    }
  }
}

TEST_CASE("volume ratio from the expansion at z = 1") {
  SUBCASE("signed permutation invariants") {
    VolumeReport rep = volume_ratio(from_raw(RF(poly({1}), FactoredDenominator{{2, 1}, {4, 1}})));
    CHECK(rep.m == 1);
    CHECK(rep.krull_dim == 2);
    CHECK(rep.ratio == Rational(1, 8));
    CHECK(rep.leading_laurent == rep.ratio);
    CHECK(rep.weyl_constant == Rational(1, 4));
    CHECK(rep.absolute_volume == ExactConstant{Rational(1, 4), 1});
    CHECK_FALSE(rep.cm_warning);
  }

  SUBCASE("even invariants on the round two-sphere") {
    VolumeReport rep = volume_ratio(from_hironaka({{2, 2, 2}, {0, 2, 2, 2}}));
    CHECK(rep.m == 2);
    CHECK(rep.ratio == Rational(1, 2));
    CHECK(rep.weyl_constant == Rational(1, 2));
    // Vol = (1/2) Vol(S^2) = 2 pi
    CHECK(rep.absolute_volume == ExactConstant{Rational(2), 1});
  }

  SUBCASE("flagged but still computed off the constraint set") {
    VolumeReport rep = volume_ratio(from_raw(RF(poly({1}), FactoredDenominator{{3, 1}})));
    CHECK(rep.m == 0);
    CHECK(rep.ratio == Rational(1, 3));
    CHECK(rep.cm_warning);
  }

  SUBCASE("regular at one throws") {
    CHECK_THROWS_AS(volume_ratio(from_raw(RF(poly({1, 1, 1}), poly({1})))), NoPoleAtOne);
  }
}

TEST_CASE("combinatorial ratio shortcut agrees with the expansion") {
  CHECK(ratio_from_hironaka({{2, 4}, {0}}).ratio == Rational(1, 8));
  CHECK(ratio_from_hironaka({{2, 4}, {0}}).m == 1);

  std::mt19937 rng(7151623);
  for (int trial = 0; trial < 60; ++trial) {
    HironakaData data;
    unsigned params = 1 + rng() % 4;
    for (unsigned i = 0; i < params; ++i) data.hsop_degrees.push_back(1 + rng() % 8);
    data.generator_degrees.push_back(0);
    unsigned gens = rng() % 5;
    for (unsigned i = 0; i < gens; ++i) data.generator_degrees.push_back(1 + rng() % 10);

    HironakaRatio shortcut = ratio_from_hironaka(data);
    CAPTURE(trial);

    HilbertSeries h = from_hironaka(data);
    LaurentExpansion<Rational> lau = laurent_at_one(h.function, 0);
    CHECK(lau.pole_order == shortcut.m + 1);
    CHECK(lau.leading() == shortcut.ratio);

    VolumeReport rep = volume_ratio(h);
    CHECK(rep.m == shortcut.m);
    CHECK(rep.ratio == shortcut.ratio);
  }
}

TEST_CASE("exact gamma at half integers") {
  CHECK(gamma_half(0).rational_part == Rational(1));
  CHECK_FALSE(gamma_half(0).sqrt_pi);
  CHECK(gamma_half(2).rational_part == Rational(1));
  CHECK(gamma_half(4).rational_part == Rational(2));
  CHECK(gamma_half(6).rational_part == Rational(6));

  CHECK(gamma_half(1).rational_part == Rational(1, 2));
  CHECK(gamma_half(1).sqrt_pi);
  CHECK(gamma_half(3).rational_part == Rational(3, 4));
  CHECK(gamma_half(5).rational_part == Rational(15, 8));

  CHECK(gamma_half(2).value() == doctest::Approx(1.0));
  CHECK(gamma_half(1).value() == doctest::Approx(0.8862269254527580).epsilon(1e-14));
}
