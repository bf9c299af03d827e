#include "leafspec/ratfunc.hpp"

#include <numeric>
#include <tuple>

namespace leafspec {

namespace {

using Cyc = CyclotomicElement;

Poly<Cyc> embed_poly(const Poly<Rational>& p) {
  std::vector<Cyc> c;
  c.reserve(p.c.size());
  for (const auto& x : p.c) c.emplace_back(x);
  return Poly<Cyc>(std::move(c));
}

Poly<Rational> descend_poly(const Poly<Cyc>& p, const char* what) {
  std::vector<Rational> c;
  c.reserve(p.c.size());
  for (const auto& x : p.c) {
    auto r = x.as_rational();
    if (!r) throw InternalIrrationality(std::string(what) + ": irrational coefficient survived");
    c.push_back(*r);
  }
  return Poly<Rational>(std::move(c));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace

unsigned pole_order(const RationalFunction<Rational>& f, const CyclotomicElement& omega) {
  RationalFunction<Rational> r = f.normalized();
  if (r.is_zero() || r.den.deg() < 1) return 0;
  // After gcd reduction over Q the numerator and denominator stay coprime in
  // every extension field, so the multiplicity in the denominator is the
  // pole order.
  Poly<Cyc> den = embed_poly(r.den);
  Poly<Cyc> lin(std::vector<Cyc>{-omega, Cyc(1)});  // z - omega
  unsigned count = 0;
  while (true) {
    auto [q, rem] = poly_divmod(den, lin);
    if (!rem.is_zero()) break;
    den = std::move(q);
    ++count;
  }
  return count;
}

CyclotomicFactorization factor_into_cyclotomics(Poly<Rational> p) {
  // Trial division.  phi(d) >= sqrt(d/2), so any cyclotomic divisor of a
  // degree-D polynomial has d <= 2 D^2.
  CyclotomicFactorization out;
  const unsigned degree = p.deg() > 0 ? p.deg() : 0;
  const unsigned bound = 2 * degree * degree + 1;
  for (unsigned d = 1; d <= bound && p.deg() > 0; ++d) {
    const Poly<Rational>& phi = cyclotomic_polynomial(d);
    if (phi.deg() > p.deg()) continue;
    unsigned mult = 0;
    while (true) {
      auto [q, rr] = poly_divmod(p, phi);
      if (!rr.is_zero()) break;
      p = std::move(q);
      ++mult;
    }
    if (mult) out.phi_powers.emplace_back(d, mult);
  }
  out.leftover = std::move(p);
  return out;
}

PartialFractionForm partial_fractions(const RationalFunction<Rational>& f) {
  PartialFractionForm out;
  RationalFunction<Rational> r = f.normalized();
  if (r.is_zero()) return out;
  auto [quot, rem] = poly_divmod(r.num, r.den);
  out.polynomial_part = quot;
  if (rem.is_zero()) return out;

  CyclotomicFactorization fac = factor_into_cyclotomics(r.den);
  if (fac.leftover.deg() > 0)
    throw NonCyclotomicPole("denominator has a pole that is not a root of unity: remaining factor " +
                            fac.leftover.str());

  RationalFunction<Rational> proper(rem, r.den);  // already coprime
  for (auto [d, mult] : fac.phi_powers) {
    for (unsigned a = 0; a < d; ++a) {
      if (std::gcd(a, d) != 1 && !(d == 1 && a == 0)) continue;
      Cyc omega = Cyc::root_of_unity(d, a);
      RationalFunction<Cyc> fc(embed_poly(proper.num), embed_poly(proper.den));
      LaurentExpansion<Cyc> lau = laurent_at(fc, omega, mult ? mult - 1 : 0);
      if (lau.pole_order != mult)
        throw InternalIrrationality("pole multiplicity mismatch in partial fractions");
      for (unsigned i = 0; i < mult; ++i) {
        const Cyc& coeff = lau.coeffs[i];  // multiplies t^{i - mult}, t = omega - z
        if (coeff.is_zero()) continue;
        out.terms.push_back({omega, mult - i, coeff, d, a});
      }
    }
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& s, const auto& t) {
    return std::tie(s.root_order, s.exponent, s.order) <
           std::tie(t.root_order, t.exponent, t.order);
  });
  return out;
}

RationalFunction<Rational> pf_reconstruct(const PartialFractionForm& pf) {
  RationalFunction<Cyc> acc(embed_poly(pf.polynomial_part), Poly<Cyc>::constant(Cyc(1)));
  for (const auto& term : pf.terms) {
    Poly<Cyc> lin(std::vector<Cyc>{term.pole, Cyc(-1)});  // omega - z
    RationalFunction<Cyc> t(Poly<Cyc>::constant(term.coeff), poly_pow(lin, term.order));
    acc = acc + t;
  }
  return RationalFunction<Rational>(descend_poly(acc.num, "partial fraction reconstruction"),
                                    descend_poly(acc.den, "partial fraction reconstruction"))
      .normalized();
}

std::vector<Rational> pf_series(const PartialFractionForm& pf, unsigned k_max) {
  std::vector<Cyc> acc(k_max + 1, Cyc(0));
  for (unsigned k = 0; k <= k_max; ++k) acc[k] = Cyc(pf.polynomial_part.at(k));
  for (const auto& term : pf.terms) {
    // (omega - z)^{-j} = omega^{-j} sum_k C(k+j-1, k) omega^{-k} z^k
    Cyc inv = term.pole.inverse();
    Cyc w = term.coeff * inv.pow(term.order);
    for (unsigned k = 0; k <= k_max; ++k) {
      acc[k] = acc[k] + w * Cyc(binomial(k + term.order - 1, k));
      w = w * inv;
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (const auto& x : acc) {
    auto r = x.as_rational();
    if (!r) throw InternalIrrationality("partial fraction series: irrational coefficient");
    out.push_back(*r);
  }
  return out;
}

AsymptoticProfile asymptotic_profile(const RationalFunction<Rational>& f) {
  AsymptoticProfile out;
  out.constant = Rational(0);
  out.cycle = {Rational(0)};
  out.average = Rational(0);
  PartialFractionForm pf = partial_fractions(f);
  if (pf.terms.empty()) return out;  // polynomial or zero: no growth to report

  unsigned p = 0;
  for (const auto& t : pf.terms) p = std::max(p, t.order);
  out.exponent = p - 1;

  unsigned period = 1;
  for (const auto& t : pf.terms)
    if (t.order == p) period = std::lcm(period, t.root_order);

  // Coefficient of z^k from a term of maximal order p is
  // coeff * omega^{-k-p} * C(k+p-1, k), and C(k+p-1, k) ~ k^{p-1}/(p-1)!.
  // The leading weight is periodic in k with the period of the pole set;
  // Galois symmetry of the decomposition makes each value rational.
  Rational fact = factorial(p - 1);
  std::vector<Rational> cycle;
  for (unsigned k = 0; k < period; ++k) {
    Cyc sum(0);
    for (const auto& t : pf.terms) {
      if (t.order != p) continue;
      sum = sum + t.coeff * t.pole.pow(-static_cast<long>(p + k));
    }
    auto r = sum.as_rational();
    if (!r) throw InternalIrrationality("asymptotic profile: irrational leading weight");
    cycle.push_back(*r / fact);
  }
  out.cycle = cycle;
  Rational total(0);
  for (const auto& v : cycle) total += v;
  out.average = total / Rational(static_cast<long>(period));
  out.is_constant = std::all_of(cycle.begin(), cycle.end(),
                                [&](const Rational& v) { return v == cycle[0]; });
  if (out.is_constant) out.constant = cycle[0];
  return out;
}

}  // namespace leafspec
