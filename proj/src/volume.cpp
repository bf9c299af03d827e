#include "leafspec/volume.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace leafspec {

double ExactConstant::value() const {
  return rational_part.to_double() * std::pow(std::numbers::pi, pi_power);
}

namespace {

struct VolumeTables {
  std::vector<ExactConstant> sphere;  // Vol(S^i)
  std::vector<ExactConstant> ball;    // omega_i

  void extend(unsigned m) {
    if (sphere.empty()) {
      ball.push_back({Rational(1), 0});    // a point
      sphere.push_back({Rational(2), 0});  // two points
    }
    // omega_{i+1} = Vol(S^i)/(i+1),  Vol(S^{i+1}) = 2 pi omega_i
    while (sphere.size() <= m) {
      unsigned i = static_cast<unsigned>(sphere.size()) - 1;
      ball.push_back({sphere[i].rational_part / Rational(static_cast<long>(i) + 1),
                      sphere[i].pi_power});
      sphere.push_back({Rational(2) * ball[i].rational_part, ball[i].pi_power + 1});
    }
  }
};

Rational factorial_rat(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

std::mutex volume_tables_mutex;

VolumeTables& volume_tables() {
  static VolumeTables tables;
  return tables;
}

}  // namespace

ExactConstant sphere_volume(unsigned m) {
  std::lock_guard<std::mutex> lock(volume_tables_mutex);
  VolumeTables& tables = volume_tables();
  tables.extend(m);
  return tables.sphere[m];
}

ExactConstant ball_volume(unsigned m) {
  std::lock_guard<std::mutex> lock(volume_tables_mutex);
  VolumeTables& tables = volume_tables();
  tables.extend(m);
  return tables.ball[m];
}

VolumeReport volume_ratio(const HilbertSeries& h) {
  LaurentExpansion<Rational> lau = laurent_at_one(h.function, 0);
  if (lau.pole_order == 0)
    throw NoPoleAtOne("Hilbert series is regular at z = 1; no positive-dimensional leaf space");
  VolumeReport report;
  report.m = lau.pole_order - 1;
  report.krull_dim = lau.pole_order;
  report.leading_laurent = lau.leading();
  report.ratio = lau.leading();
  report.weyl_constant = Rational(2) * report.ratio / factorial_rat(report.m);
  report.absolute_volume = ExactConstant{report.ratio, 0} * sphere_volume(report.m);
  report.cm_warning = !cm_pole_check(h).pass;
  return report;
}

HironakaRatio ratio_from_hironaka(const HironakaData& data) {
  if (data.hsop_degrees.empty())
    throw Error(ErrorKind::Domain, "Hironaka ratio needs at least one parameter degree");
  Rational prod(1);
  for (unsigned d : data.hsop_degrees) prod *= Rational(static_cast<long>(d));
  return {static_cast<unsigned>(data.hsop_degrees.size()) - 1,
          Rational(static_cast<long>(data.generator_degrees.size())) / prod};
}

}  // namespace leafspec
