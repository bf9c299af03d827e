#ifndef LEAFSPEC_SPECTRUM_HPP
#define LEAFSPEC_SPECTRUM_HPP

#include <vector>

#include "leafspec/hilbert.hpp"
#include "leafspec/volume.hpp"

namespace leafspec {

// Multiplicities of the basic Laplace spectrum on S^n: m_k eigenfunctions
// with eigenvalue k(k+n-1), truncated at some k_max.
struct BasicSpectrum {
  unsigned n = 1;
  std::vector<mpz_class> mult;  // m_0..m_{k_max}

  unsigned k_max() const { return static_cast<unsigned>(mult.size()) - 1; }
  unsigned long eigenvalue(unsigned k) const {
    return static_cast<unsigned long>(k) * (k + n - 1);
  }
};

// m_k as the Taylor coefficients of (1 - z^2) H(z).  NegativeMultiplicity if
// any coefficient fails to be a nonnegative integer.
BasicSpectrum harmonic_multiplicities(const HilbertSeries& h, unsigned n, unsigned k_max);

// N(t): number of eigenvalues strictly below t, counted with multiplicity.
// Ties resolve by exclusion; evaluate at t + 1/2 to include an eigenvalue t
// (spectral gaps here are >= 1).  TruncationTooSmall when t reaches past the
// truncated data.
mpz_class counting_function(const BasicSpectrum& spec, double t);

struct WeylRow {
  unsigned k;
  unsigned long t;  // the eigenvalue k(k+n-1)
  mpz_class count;  // eigenvalues through t, i.e. N(t + 1/2)
  double ratio;     // count / (A t^{m/2})
};

// One row per k = 1..k_max.  The count column includes the eigenvalue at k
// itself, so the ratio is the Weyl quotient sampled just past each
// eigenvalue; with strict counting the quotient of an entry whose cluster
// structure is exactly periodic can sit at 1 with zero error, which would
// hide the convergence trend the table exists to show.
std::vector<WeylRow> weyl_table(const BasicSpectrum& spec, const VolumeReport& report,
                                unsigned k_max);

// Taylor coefficients of (1+z) H against prefix sums of the multiplicities,
// exact, through k_max.  The two sides are computed by different routes, so
// a corrupted spectrum (or a series bug) flips this to false.
bool b_series_identity(const HilbertSeries& h, const BasicSpectrum& spec, unsigned k_max);
bool b_series_identity(const HilbertSeries& h, unsigned n, unsigned k_max);

struct HeatTrace {
  double value;       // sum m_k exp(-s k(k+n-1)) over the truncated data
  double tail_bound;  // certified bound on everything past the truncation
};

// Heat trace Z(s) with a certified truncation error: the tail is dominated
// by full spherical-harmonic multiplicities, which decay geometrically once
// s k outruns their polynomial growth.  TailNotNegligible when the bound
// cannot be brought below 1e-6 of the value.
HeatTrace heat_trace(const BasicSpectrum& spec, double s);
HeatTrace heat_trace_serial(const BasicSpectrum& spec, double s);

// A truncation depth past which the tail certificate is comfortably below
// tolerance: the first k where the dominating term drops under e^-30 and is
// falling.  TailNotNegligible when no such k <= 10^7 exists (s too small).
unsigned heat_truncation(unsigned n, double s);

// Gamma(m/2 + 1) exactly: a rational times an optional sqrt(pi).
struct GammaHalf {
  Rational rational_part;
  bool sqrt_pi = false;
  double value() const;
};

GammaHalf gamma_half(unsigned m);

}  // namespace leafspec

#endif
