// Timings for the two kernels that fan out across threads, against their
// serial references.  Exact arithmetic means the Molien results must match
// bit for bit; the heat trace combines fixed blocks in order, so it must too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <omp.h>

#include "leafspec/molien.hpp"
#include "leafspec/spectrum.hpp"

using namespace leafspec;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Dihedral group of order 2q acting on the plane: rotation by 2 pi / q plus
// one reflection.  Entries live in Q(zeta_lcm(4,q)).
std::vector<GroupElement> dihedral_generators(unsigned q) {
  unsigned conductor = std::lcm(4u, q);
  CyclotomicElement w = CyclotomicElement::root_of_unity(conductor, conductor / q);
  CyclotomicElement i = CyclotomicElement::root_of_unity(conductor, conductor / 4);
  CyclotomicElement half(Rational(1, 2));
  CyclotomicElement cos = half * (w + w.inverse());
  CyclotomicElement sin = (w - w.inverse()) / (CyclotomicElement(2) * i);

  GroupElement rot(2);
  rot.at(0, 0) = cos;
  rot.at(0, 1) = -sin;
  rot.at(1, 0) = sin;
  rot.at(1, 1) = cos;
  GroupElement flip = GroupElement::identity(2);
  flip.at(1, 1) = CyclotomicElement(-1);
  return {rot, flip};
}

BasicSpectrum synthetic_spectrum(unsigned n, unsigned k_max) {
  BasicSpectrum spec;
  spec.n = n;
  spec.mult.reserve(k_max + 1);
  spec.mult.emplace_back(1);
  for (unsigned k = 1; k <= k_max; ++k) spec.mult.emplace_back(1 + k % 5);
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  unsigned q = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 24;
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    FiniteMatrixGroup group = enumerate_group(dihedral_generators(q));
    std::printf("molien, dihedral order %zu (conductor %u)\n", group.order(), group.conductor);

    auto t0 = std::chrono::steady_clock::now();
    RationalFunction<Rational> serial = molien_series_serial(group);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    RationalFunction<Rational> parallel = molien_series(group);
    double parallel_ms = ms_since(t0);

    std::printf("  serial   %9.2f ms\n", serial_ms);
    std::printf("  parallel %9.2f ms   speedup %.2fx   identical: %s\n\n", parallel_ms,
                serial_ms / parallel_ms, serial == parallel ? "yes" : "NO");
    if (!(serial == parallel)) return 1;
  }

  {
    const unsigned k_max = 1000000;
    const double s = 1e-9;
    BasicSpectrum spec = synthetic_spectrum(7, k_max);
    std::printf("heat trace, k_max %u, s %.1e\n", k_max, s);

    auto t0 = std::chrono::steady_clock::now();
    HeatTrace serial = heat_trace_serial(spec, s);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    HeatTrace parallel = heat_trace(spec, s);
    double parallel_ms = ms_since(t0);

    std::printf("  serial   %9.2f ms   value %.12e\n", serial_ms, serial.value);
    std::printf("  parallel %9.2f ms   value %.12e   speedup %.2fx\n", parallel_ms,
                parallel.value, serial_ms / parallel_ms);
    double drift = std::abs(serial.value - parallel.value);
    std::printf("  |serial - parallel| = %.3e (tolerance 1e-12 relative)\n", drift);
    if (drift > 1e-12 * serial.value) return 1;
  }
  return 0;
}
