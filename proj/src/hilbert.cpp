#include "leafspec/hilbert.hpp"

namespace leafspec {

void validate_hilbert(const RationalFunction<Rational>& f, unsigned depth,
                      const std::string& context) {
  std::vector<Rational> coeffs;
  try {
    coeffs = series_coefficients(f, depth);
  } catch (const PoleAtOrigin&) {
    throw NotAHilbertSeries(context + ": pole at z = 0");
  }
  if (coeffs[0] != Rational(1))
    throw NotAHilbertSeries(context + ": coefficient 0 is " + coeffs[0].str() + ", not 1");
  for (unsigned k = 0; k <= depth; ++k)
    if (!coeffs[k].is_integer() || coeffs[k].sign() < 0)
      throw NotAHilbertSeries(context + ": coefficient " + std::to_string(k) + " is " +
                              coeffs[k].str());
}

HilbertSeries from_hironaka(const HironakaData& data, unsigned validation_depth) {
  if (data.hsop_degrees.empty())
    throw NotAHilbertSeries("Hironaka data needs at least one parameter degree");
  if (data.generator_degrees.empty())
    throw NotAHilbertSeries("Hironaka data needs at least one generator degree");
  for (unsigned d : data.hsop_degrees)
    if (d == 0) throw NotAHilbertSeries("parameter of degree 0");

  size_t top = 0;
  for (unsigned e : data.generator_degrees) top = std::max<size_t>(top, e);
  std::vector<Rational> num(top + 1, Rational(0));
  for (unsigned e : data.generator_degrees) num[e] += Rational(1);

  FactoredDenominator factors;
  for (unsigned d : data.hsop_degrees) {
    auto it = std::find_if(factors.begin(), factors.end(),
                           [d](const auto& p) { return p.first == d; });
    if (it == factors.end())
      factors.emplace_back(d, 1);
    else
      ++it->second;
  }

  HilbertSeries h;
  h.function = RationalFunction<Rational>(Poly<Rational>(std::move(num)), std::move(factors));
  h.source = SeriesSource::Hironaka;
  validate_hilbert(h.function, validation_depth, "Hironaka series");
  return h;
}

HilbertSeries from_molien(const FiniteMatrixGroup& group, unsigned validation_depth) {
  HilbertSeries h;
  h.function = molien_series(group);
  h.ambient_dim = group.dim;
  h.source = SeriesSource::Molien;
  validate_hilbert(h.function, validation_depth, "Molien series");
  return h;
}

HilbertSeries from_raw(const RationalFunction<Rational>& f, std::optional<unsigned> ambient_dim,
                       unsigned validation_depth) {
  HilbertSeries h;
  h.function = f;
  h.ambient_dim = ambient_dim;
  h.source = SeriesSource::Raw;
  validate_hilbert(h.function, validation_depth, "series");
  return h;
}

CMPoleReport cm_pole_check(const HilbertSeries& h) {
  CMPoleReport report;
  RationalFunction<Rational> r = h.function.normalized();
  CyclotomicFactorization fac = factor_into_cyclotomics(r.den);

  unsigned order_at_one = 0;
  for (auto [d, mult] : fac.phi_powers)
    if (d == 1) order_at_one = mult;
  report.m = static_cast<int>(order_at_one) - 1;

  if (fac.leftover.deg() > 0) {
    report.roots_of_unity_ok = false;
    report.offenders.push_back({0, static_cast<unsigned>(fac.leftover.deg()), 0});
  }

  const unsigned m = order_at_one > 0 ? order_at_one - 1 : 0;
  for (auto [d, mult] : fac.phi_powers) {
    if (d == 1) continue;
    if (d == 2) {
      if (mult > m + 1) {
        report.minus_one_ok = false;
        report.offenders.push_back({2, mult, m + 1});
      }
    } else if (mult > m) {
      report.others_ok = false;
      report.offenders.push_back({d, mult, m});
    }
  }
  report.pass = report.roots_of_unity_ok && report.minus_one_ok && report.others_ok &&
                order_at_one > 0;
  return report;
}

}  // namespace leafspec
