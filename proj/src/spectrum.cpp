#include "leafspec/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace leafspec {

BasicSpectrum harmonic_multiplicities(const HilbertSeries& h, unsigned n, unsigned k_max) {
  if (n == 0) throw Error(ErrorKind::Domain, "ambient sphere dimension must be >= 1");
  Poly<Rational> one_minus_z2(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  RationalFunction<Rational> g(one_minus_z2 * h.function.num, h.function.den);
  std::vector<Rational> coeffs = series_coefficients(g, k_max);

  BasicSpectrum spec;
  spec.n = n;
  spec.mult.reserve(coeffs.size());
  for (unsigned k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_integer() || coeffs[k].sign() < 0)
      throw NegativeMultiplicity("coefficient " + std::to_string(k) + " of (1-z^2)H is " +
                                 coeffs[k].str() + "; not a multiplicity");
    spec.mult.push_back(coeffs[k].num());
  }
  if (spec.mult[0] != 1)
    throw NegativeMultiplicity("constant functions missing: m_0 = " + spec.mult[0].get_str());
  return spec;
}

mpz_class counting_function(const BasicSpectrum& spec, double t) {
  unsigned k_top = spec.k_max();
  if (t > static_cast<double>(spec.eigenvalue(k_top)))
    throw TruncationTooSmall("counting needs eigenvalues to " + std::to_string(t) +
                             "; spectrum truncated at " +
                             std::to_string(spec.eigenvalue(k_top)));
  mpz_class count = 0;
  for (unsigned k = 0; k <= k_top; ++k) {
    if (static_cast<double>(spec.eigenvalue(k)) >= t) break;
    count += spec.mult[k];
  }
  return count;
}

std::vector<WeylRow> weyl_table(const BasicSpectrum& spec, const VolumeReport& report,
                                unsigned k_max) {
  if (k_max > spec.k_max())
    throw TruncationTooSmall("table to k = " + std::to_string(k_max) +
                             " but spectrum ends at k = " + std::to_string(spec.k_max()));
  const double a = report.weyl_constant.to_double();
  const double half_m = report.m / 2.0;
  std::vector<WeylRow> rows;
  rows.reserve(k_max);
  mpz_class prefix = spec.mult[0];
  for (unsigned k = 1; k <= k_max; ++k) {
    prefix += spec.mult[k];
    unsigned long t = spec.eigenvalue(k);
    double denom = a * std::pow(static_cast<double>(t), half_m);
    rows.push_back({k, t, prefix, prefix.get_d() / denom});
  }
  return rows;
}

bool b_series_identity(const HilbertSeries& h, const BasicSpectrum& spec, unsigned k_max) {
  if (k_max > spec.k_max())
    throw TruncationTooSmall("identity to k = " + std::to_string(k_max) +
                             " but spectrum ends at k = " + std::to_string(spec.k_max()));
  Poly<Rational> one_plus_z(std::vector<Rational>{Rational(1), Rational(1)});
  RationalFunction<Rational> b(one_plus_z * h.function.num, h.function.den);
  std::vector<Rational> lhs = series_coefficients(b, k_max);
  mpz_class prefix = 0;
  for (unsigned k = 0; k <= k_max; ++k) {
    prefix += spec.mult[k];
    if (lhs[k] != Rational(prefix)) return false;
  }
  return true;
}

bool b_series_identity(const HilbertSeries& h, unsigned n, unsigned k_max) {
  return b_series_identity(h, harmonic_multiplicities(h, n, k_max), k_max);
}

namespace {

// dim H_k(S^n) = C(k+n, n) - C(k+n-2, n): every multiplicity of the basic
// spectrum is bounded by the full spherical-harmonic one.
double harmonic_dim(unsigned long k, unsigned n) {
  auto binom = [](unsigned long top, unsigned r) {
    double v = 1.0;
    for (unsigned i = 1; i <= r; ++i) v *= static_cast<double>(top - r + i) / i;
    return v;
  };
  double full = binom(k + n, n);
  double lower = k >= 2 ? binom(k + n - 2, n) : 0.0;
  return full - lower;
}

double tail_bound_after(const BasicSpectrum& spec, double s) {
  const unsigned long k1 = spec.k_max() + 1;
  const unsigned n = spec.n;
  auto log_u = [&](unsigned long k) {
    return std::log(harmonic_dim(k, n)) -
           s * static_cast<double>(k) * static_cast<double>(k + n - 1);
  };
  const double r = std::exp(log_u(k1 + 1) - log_u(k1));
  if (!(r < 1.0))
    throw TailNotNegligible("heat trace tail does not yet decay at the truncation point");
  // Terms past k1 are dominated by the geometric sequence u(k1) r^j.
  double bound = std::exp(log_u(k1)) / (1.0 - r);
  return std::max(bound, std::numeric_limits<double>::min());
}

constexpr double kTailTolerance = 1e-6;

}  // namespace

HeatTrace heat_trace_serial(const BasicSpectrum& spec, double s) {
  if (!(s > 0)) throw Error(ErrorKind::Domain, "heat trace needs s > 0");
  double value = 0.0;
  for (unsigned k = 0; k <= spec.k_max(); ++k)
    value += spec.mult[k].get_d() *
             std::exp(-s * static_cast<double>(spec.eigenvalue(k)));
  double bound = tail_bound_after(spec, s);
  if (bound > kTailTolerance * value)
    throw TailNotNegligible("certified tail " + std::to_string(bound) +
                            " exceeds tolerance relative to " + std::to_string(value));
  return {value, bound};
}

HeatTrace heat_trace(const BasicSpectrum& spec, double s) {
  if (!(s > 0)) throw Error(ErrorKind::Domain, "heat trace needs s > 0");
  // Fixed-size blocks, each summed left to right and combined in block
  // order: bitwise-identical output whatever the thread count.
  constexpr unsigned long kBlock = 4096;
  const unsigned long count = spec.k_max() + 1ul;
  const unsigned long blocks = (count + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < static_cast<long>(blocks); ++b) {
    const unsigned long lo = static_cast<unsigned long>(b) * kBlock;
    const unsigned long hi = std::min(lo + kBlock, count);
    double local = 0.0;
    for (unsigned long k = lo; k < hi; ++k)
      local += spec.mult[k].get_d() *
               std::exp(-s * static_cast<double>(spec.eigenvalue(static_cast<unsigned>(k))));
    partial[static_cast<size_t>(b)] = local;
  }
  double value = 0.0;
  for (double p : partial) value += p;
  double bound = tail_bound_after(spec, s);
  if (bound > kTailTolerance * value)
    throw TailNotNegligible("certified tail " + std::to_string(bound) +
                            " exceeds tolerance relative to " + std::to_string(value));
  return {value, bound};
}

unsigned heat_truncation(unsigned n, double s) {
  if (!(s > 0)) throw Error(ErrorKind::Domain, "heat trace needs s > 0");
  // log C(k+n, n) bounds the log multiplicity from above; no need for the
  // exact dimension here, tail_bound_after recomputes the real certificate.
  auto log_u = [&](double k) {
    return std::lgamma(k + n + 1) - std::lgamma(k + 1) - std::lgamma(n + 1.0) -
           s * k * (k + n - 1);
  };
  for (unsigned long k = 8; k <= 10000000ul; k += 1 + k / 8) {
    double here = log_u(static_cast<double>(k));
    if (here < -30.0 && log_u(static_cast<double>(k + 1)) < here)
      return static_cast<unsigned>(k);
  }
  throw TailNotNegligible("no certifiable truncation below 10^7 terms; s is too small");
}

double GammaHalf::value() const {
  return rational_part.to_double() * (sqrt_pi ? std::sqrt(std::numbers::pi) : 1.0);
}

GammaHalf gamma_half(unsigned m) {
  if (m % 2 == 0) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m / 2);
    return {Rational(f), false};
  }
  // Gamma(j + 1/2) = (2j)! sqrt(pi) / (4^j j!) with j = (m+1)/2
  unsigned j = (m + 1) / 2;
  mpz_class top, bottom, pow4 = 1;
  mpz_fac_ui(top.get_mpz_t(), 2 * j);
  mpz_fac_ui(bottom.get_mpz_t(), j);
  mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), 2 * j);
  return {Rational(top, bottom * pow4), true};
}

}  // namespace leafspec
