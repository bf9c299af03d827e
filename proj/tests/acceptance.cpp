// Acceptance gate: ten self-contained checks, one pass/fail line each.
// Exit status is the number of failing checks, so the binary doubles as a
// ctest entry.  Tolerances and runtime budgets are fixed here, not flags.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "leafspec/catalog.hpp"

using namespace leafspec;

namespace {

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_budget(Clock::time_point start, double budget_ms, const std::string& what) {
  double elapsed = ms_since(start);
  require(elapsed <= budget_ms, what + " took " + std::to_string(elapsed) + " ms, budget " +
                                    std::to_string(budget_ms) + " ms");
}

GroupElement mat(unsigned n, const std::vector<long>& entries) {
  GroupElement m(n);
  for (unsigned i = 0; i < n * n; ++i) m.a[i] = CyclotomicElement(Rational(entries[i]));
  return m;
}

Poly<Rational> poly(std::vector<long> v) {
  std::vector<Rational> c(v.begin(), v.end());
  return Poly<Rational>(std::move(c));
}

using RF = RationalFunction<Rational>;

Rational two_to(unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= Rational(2);
  return r;
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

// 1: Molien series of three small groups, exact, under a second each.
void molien_regressions() {
  {
    auto start = Clock::now();
    FiniteMatrixGroup b2 = enumerate_group({mat(2, {0, -1, 1, 0}), mat(2, {1, 0, 0, -1})});
    require(b2.order() == 8, "signed permutations of the plane: order " +
                                 std::to_string(b2.order()) + ", expected 8");
    require(molien_series(b2) == RF(poly({1}), FactoredDenominator{{2, 1}, {4, 1}}),
            "B2 series is not 1/((1-z^2)(1-z^4))");
    require_budget(start, 1000, "B2 Molien");
  }
  {
    auto start = Clock::now();
    FiniteMatrixGroup s3 = enumerate_group(
        {mat(3, {0, 1, 0, 1, 0, 0, 0, 0, 1}), mat(3, {0, 0, 1, 1, 0, 0, 0, 1, 0})});
    require(s3.order() == 6, "permutation group: order " + std::to_string(s3.order()));
    require(molien_series(s3) == RF(poly({1}), FactoredDenominator{{1, 1}, {2, 1}, {3, 1}}),
            "S3 series is not 1/((1-z)(1-z^2)(1-z^3))");
    require_budget(start, 1000, "S3 Molien");
  }
  {
    auto start = Clock::now();
    FiniteMatrixGroup pm = enumerate_group({mat(2, {-1, 0, 0, -1})});
    require(pm.order() == 2, "{+-I}: order " + std::to_string(pm.order()));
    require(molien_series(pm) == RF(poly({1, 0, 1}), FactoredDenominator{{2, 2}}),
            "{+-I} series is not (1+z^2)/(1-z^2)^2");
    require_budget(start, 1000, "{+-I} Molien");
  }
}

// 2: exact (m, ratio) across the catalog, plus the closed forms the families
// must reproduce.
void volume_ratios() {
  auto start = Clock::now();
  auto expect = [](const std::string& name, unsigned m, const Rational& ratio) {
    VolumeReport rep = volume_ratio(entry_series(get_entry(name)));
    require(rep.m == m && rep.ratio == ratio,
            name + ": got (" + std::to_string(rep.m) + ", " + rep.ratio.str() +
                "), expected (" + std::to_string(m) + ", " + ratio.str() + ")");
  };
  expect("hopf_complex", 2, Rational(1, 4));
  expect("hopf_quaternionic", 4, Rational(1, 16));
  expect("hopf_octonionic", 8, Rational(1, 256));

  for (const std::string& name : list_entries()) {
    CatalogEntry entry = get_entry(name);
    if (!entry.has_group) continue;
    auto group = entry_group(entry);
    require(group.has_value(), name + ": group did not enumerate");
    VolumeReport rep = volume_ratio(entry_series(entry));
    require(rep.m == entry.ambient_n &&
                rep.ratio == Rational(1, static_cast<long>(group->order())),
            name + ": ratio " + rep.ratio.str() + " is not 1/" +
                std::to_string(group->order()));
  }

  for (auto [l, m] : std::vector<std::pair<unsigned, unsigned>>{
           {3, 1}, {4, 2}, {5, 3}, {6, 1}, {7, 5}, {10, 8}}) {
    std::string name = "clifford(" + std::to_string(l) + "," + std::to_string(m) + ")";
    VolumeReport rep = volume_ratio(entry_series(get_entry(name)));
    require(rep.m == m + 1 && rep.ratio == Rational(1) / two_to(m + 2),
            name + ": got (" + std::to_string(rep.m) + ", " + rep.ratio.str() + ")");
  }
  require_budget(start, 1000, "volume ratios");
}

// 3: the combinatorial ratio equals the Laurent leading coefficient on
// randomized module data.
void hironaka_vs_laurent() {
  auto start = Clock::now();
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 200; ++trial) {
    HironakaData data;
    unsigned params = 1 + rng() % 5;
    for (unsigned i = 0; i < params; ++i) data.hsop_degrees.push_back(1 + rng() % 12);
    unsigned gens = 1 + rng() % 8;
    data.generator_degrees.push_back(0);
    for (unsigned i = 1; i < gens; ++i) data.generator_degrees.push_back(1 + rng() % 15);

    HironakaRatio shortcut = ratio_from_hironaka(data);
    LaurentExpansion<Rational> lau = laurent_at_one(from_hironaka(data).function, 0);
    require(lau.pole_order == shortcut.m + 1,
            "trial " + std::to_string(trial) + ": pole order " +
                std::to_string(lau.pole_order) + " vs m+1 = " + std::to_string(shortcut.m + 1));
    require(lau.leading() == shortcut.ratio,
            "trial " + std::to_string(trial) + ": leading " + lau.leading().str() +
                " vs shortcut " + shortcut.ratio.str());
  }
  require_budget(start, 10000, "200 randomized comparisons");
}

// 4: partial fractions reassemble exactly, reproduce 500 coefficients, and
// expose the coefficient growth (1+z)H ~ A k^m.
void partial_fraction_soundness() {
  for (const std::string& name : list_entries()) {
    HilbertSeries h = entry_series(get_entry(name));
    PartialFractionForm pf = partial_fractions(h.function);
    require(pf_reconstruct(pf) == h.function, name + ": reconstruction differs");
    require(pf_series(pf, 500) == series_coefficients(h.function, 500),
            name + ": termwise series differs inside 500 coefficients");

    VolumeReport rep = volume_ratio(h);
    RF b(poly({1, 1}) * h.function.num, h.function.den);
    AsymptoticProfile prof = asymptotic_profile(b);
    require(prof.exponent == rep.m, name + ": growth exponent " +
                                        std::to_string(prof.exponent) + " vs m = " +
                                        std::to_string(rep.m));
    require(prof.is_constant, name + ": growth constant is periodic, expected constant");
    require(prof.constant == rep.weyl_constant,
            name + ": growth constant " + prof.constant.str() + " vs 2 ratio/m! = " +
                rep.weyl_constant.str());
  }
}

// 5: the partial-sum identity at depth 500 everywhere; exact square counts
// on the complex Hopf quotient.
void spectrum_identities() {
  for (const std::string& name : list_entries()) {
    CatalogEntry entry = get_entry(name);
    HilbertSeries h = entry_series(entry);
    require(b_series_identity(h, entry.ambient_n, 500),
            name + ": partial-sum identity fails inside k <= 500");
  }

  CatalogEntry hopf = get_entry("hopf_complex");
  HilbertSeries h = entry_series(hopf);
  BasicSpectrum spec = harmonic_multiplicities(h, hopf.ambient_n, 201);
  for (unsigned k = 0; k <= 200; k += 2) {
    mpz_class expect = k / 2 + 1;
    expect *= expect;
    mpz_class got =
        counting_function(spec, static_cast<double>(spec.eigenvalue(k)) + 0.5);
    require(got == expect, "hopf_complex: count through level " + std::to_string(k) +
                               " is " + got.get_str() + ", expected " + expect.get_str());
  }
}

// 6: the Weyl quotient sits within 1% by k = 1000 and its error shrinks
// across the checkpoints 100, 300, 1000.
void weyl_trend() {
  for (const std::string& name : list_entries()) {
    CatalogEntry entry = get_entry(name);
    HilbertSeries h = entry_series(entry);
    VolumeReport rep = volume_ratio(h);
    if (rep.m < 1) continue;
    auto start = Clock::now();
    BasicSpectrum spec = harmonic_multiplicities(h, entry.ambient_n, 1000);
    std::vector<WeylRow> rows = weyl_table(spec, rep, 1000);
    auto err = [&](unsigned k) { return std::fabs(rows[k - 1].ratio - 1.0); };
    require(err(1000) <= 0.01, name + ": |ratio - 1| = " + std::to_string(err(1000)) +
                                   " at k = 1000");
    require(err(100) > err(300) && err(300) > err(1000),
            name + ": error sequence " + std::to_string(err(100)) + ", " +
                std::to_string(err(300)) + ", " + std::to_string(err(1000)) +
                " is not strictly decreasing");
    require_budget(start, 5000, name);
  }
}

// 7: heat trace against its small-s limit, with the certified tail.
void heat_trace_check() {
  auto start = Clock::now();
  for (const std::string name : {"hopf_complex", "trivial(2)"}) {
    CatalogEntry entry = get_entry(name);
    HilbertSeries h = entry_series(entry);
    VolumeReport rep = volume_ratio(h);
    const double s = 1e-3;
    unsigned depth = heat_truncation(entry.ambient_n, s);
    BasicSpectrum spec = harmonic_multiplicities(h, entry.ambient_n, depth);
    HeatTrace trace = heat_trace(spec, s);
    require(trace.tail_bound < 1e-8, std::string(name) + ": certified tail " +
                                         std::to_string(trace.tail_bound));
    double scaled = trace.value * std::pow(s, rep.m / 2.0);
    double limit = rep.weyl_constant.to_double() * gamma_half(rep.m).value();
    require(std::fabs(scaled / limit - 1.0) <= 0.02,
            std::string(name) + ": Z(s) s^{m/2} = " + std::to_string(scaled) +
                " vs A Gamma(m/2+1) = " + std::to_string(limit));
  }
  require_budget(start, 5000, "heat traces");
}

// 8: omega_m Vol(S^m) = 2 (2 pi)^m / m!, exactly.
void volume_identity() {
  for (unsigned m = 0; m <= 20; ++m) {
    ExactConstant product = ball_volume(m) * sphere_volume(m);
    require(product.pi_power == m, "m = " + std::to_string(m) + ": pi power " +
                                       std::to_string(product.pi_power));
    Rational expect = Rational(2) * two_to(m) / factorial(m);
    require(product.rational_part == expect,
            "m = " + std::to_string(m) + ": " + product.rational_part.str() +
                " vs " + expect.str());
  }
}

// 9: every ratio is exact and its denominator divides the degree product
// (the group order, for group-only data).
void rationality() {
  for (const std::string& name : list_entries()) {
    CatalogEntry entry = get_entry(name);
    VolumeReport rep = volume_ratio(entry_series(entry));
    mpz_class modulus = 1;
    if (entry.hironaka) {
      for (unsigned d : entry.hironaka->hsop_degrees) modulus *= d;
    } else {
      auto group = entry_group(entry);
      require(group.has_value(), name + ": no data");
      modulus = static_cast<unsigned long>(group->order());
    }
    require(mpz_divisible_p(modulus.get_mpz_t(), rep.ratio.den().get_mpz_t()) != 0,
            name + ": denominator " + rep.ratio.den().get_str() +
                " does not divide " + modulus.get_str());
    EntryCheck check = check_entry(entry);
    require(check.divisibility_ok && check.pass, name + ": " + check.detail);
  }
}

// 10: the checks can say no: a non-geometric series trips the pole
// constraints, a corrupted spectrum trips the partial-sum identity.
void negative_controls() {
  HilbertSeries bad = from_raw(RF(poly({1}), FactoredDenominator{{3, 1}}));
  CMPoleReport rep = cm_pole_check(bad);
  require(!rep.pass, "1/(1-z^3) passed the pole constraints");
  require(rep.offenders.size() == 1 && rep.offenders[0].root_order == 3 &&
              rep.offenders[0].order == 1 && rep.offenders[0].allowed == 0,
          "1/(1-z^3): offender list does not name the cube root of unity");

  HilbertSeries h = entry_series(get_entry("hopf_complex"));
  BasicSpectrum spec = harmonic_multiplicities(h, 3, 100);
  require(b_series_identity(h, spec, 100), "sound spectrum rejected");
  BasicSpectrum corrupted = spec;
  corrupted.mult[50] += 1;
  require(!b_series_identity(h, corrupted, 100), "corrupted spectrum accepted");
}

struct Criterion {
  int id;
  const char* label;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Molien series regressions", molien_regressions},
      {2, "volume ratios across the catalog", volume_ratios},
      {3, "Hironaka shortcut vs Laurent leading coefficient", hironaka_vs_laurent},
      {4, "partial fractions: reconstruction, coefficients, growth", partial_fraction_soundness},
      {5, "partial-sum identity and exact quotient counts", spectrum_identities},
      {6, "Weyl quotient within 1% and improving", weyl_trend},
      {7, "heat trace against its small-s limit", heat_trace_check},
      {8, "ball-sphere volume identity", volume_identity},
      {9, "exact ratios with divisible denominators", rationality},
      {10, "negative controls reject corrupted input", negative_controls},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = Clock::now();
    std::string detail;
    try {
      c.run();
    } catch (const Failure& f) {
      detail = f.detail;
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    double elapsed = ms_since(start);
    if (detail.empty()) {
      std::printf("PASS  %2d  %s (%.0f ms)\n", c.id, c.label, elapsed);
    } else {
      ++failures;
      std::printf("FAIL  %2d  %s: %s\n", c.id, c.label, detail.c_str());
    }
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
