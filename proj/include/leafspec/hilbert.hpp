#ifndef LEAFSPEC_HILBERT_HPP
#define LEAFSPEC_HILBERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspec/molien.hpp"
#include "leafspec/ratfunc.hpp"

namespace leafspec {

// Degrees of a homogeneous system of parameters f_1..f_{m+1} and of the
// module generators g_1..g_l of the invariant algebra over them; the Hilbert
// series is then (sum_j z^{e_j}) / prod_i (1 - z^{d_i}).  Repeats are
// meaningful; degree 0 is the unit generator and may appear once.
struct HironakaData {
  std::vector<unsigned> hsop_degrees;       // d_i >= 1
  std::vector<unsigned> generator_degrees;  // e_j >= 0
};

enum class SeriesSource { Hironaka, Molien, Raw };

struct HilbertSeries {
  RationalFunction<Rational> function;
  std::optional<unsigned> ambient_dim;  // n+1, when the construction knows it
  SeriesSource source = SeriesSource::Raw;
};

inline constexpr unsigned kDefaultValidationDepth = 64;

// Checks that the Taylor coefficients through `depth` are nonnegative
// integers with coefficient 0 equal to 1; NotAHilbertSeries otherwise.
void validate_hilbert(const RationalFunction<Rational>& f, unsigned depth,
                      const std::string& context);

HilbertSeries from_hironaka(const HironakaData& data,
                            unsigned validation_depth = kDefaultValidationDepth);

HilbertSeries from_molien(const FiniteMatrixGroup& group,
                          unsigned validation_depth = kDefaultValidationDepth);

HilbertSeries from_raw(const RationalFunction<Rational>& f,
                       std::optional<unsigned> ambient_dim = std::nullopt,
                       unsigned validation_depth = kDefaultValidationDepth);

struct OffendingPole {
  unsigned root_order;  // pole is a primitive root_order-th root of unity
  unsigned order;       // observed pole order
  unsigned allowed;     // maximum the constraint permits
};

// Pole-location constraints satisfied by the spherical-harmonic Hilbert
// series of a Laplacian-closed algebra: z = 1 has the maximal order m+1,
// z = -1 order at most m+1, every other pole is a root of unity of order at
// most m.  A series may be a perfectly good Hilbert series and still fail
// (1/(1-z^3) does), which is exactly what the report is for.
struct CMPoleReport {
  int m = -1;                  // pole order at z = 1, minus one; -1 if no pole there
  bool roots_of_unity_ok = true;
  bool minus_one_ok = true;
  bool others_ok = true;
  bool pass = false;
  std::vector<OffendingPole> offenders;
};

CMPoleReport cm_pole_check(const HilbertSeries& h);

}  // namespace leafspec

#endif
