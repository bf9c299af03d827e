#ifndef LEAFSPEC_VOLUME_HPP
#define LEAFSPEC_VOLUME_HPP

#include "leafspec/hilbert.hpp"
#include "leafspec/rational.hpp"

namespace leafspec {

// Exact value of the form rational_part * pi^pi_power.
struct ExactConstant {
  Rational rational_part;
  unsigned pi_power = 0;

  double value() const;
  friend ExactConstant operator*(const ExactConstant& a, const ExactConstant& b) {
    return {a.rational_part * b.rational_part, a.pi_power + b.pi_power};
  }
  friend bool operator==(const ExactConstant& a, const ExactConstant& b) {
    return a.rational_part == b.rational_part &&
           (a.pi_power == b.pi_power || a.rational_part.is_zero());
  }
};

// Vol(S^m), the round unit sphere.  sphere_volume(0) = 2, sphere_volume(2) = 4 pi.
ExactConstant sphere_volume(unsigned m);
// omega_m = Vol(D^m), the unit ball; ball_volume(0) = 1, ball_volume(4) = pi^2/2.
ExactConstant ball_volume(unsigned m);

struct VolumeReport {
  unsigned m = 0;            // dimension of the leaf space
  unsigned krull_dim = 1;    // m + 1
  Rational ratio;            // Vol(X) / Vol(S^m)
  Rational leading_laurent;  // leading coefficient at z = 1; equals ratio
  Rational weyl_constant;    // A = 2 ratio / m!
  ExactConstant absolute_volume;  // ratio * Vol(S^m)
  bool cm_warning = false;   // pole-constraint check failed
};

// Reads the dimension and normalized volume off the expansion
// H(z) = ratio * (1-z)^{-m-1} + O((1-z)^{-m}).  NoPoleAtOne when H is
// regular at z = 1.
VolumeReport volume_ratio(const HilbertSeries& h);

struct HironakaRatio {
  unsigned m = 0;
  Rational ratio;
};

// Combinatorial shortcut: a free module with l generators over parameters of
// degrees d_1..d_{m+1} gives ratio l / prod d_i on the nose.
HironakaRatio ratio_from_hironaka(const HironakaData& data);

}  // namespace leafspec

#endif
