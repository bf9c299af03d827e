#ifndef LEAFSPEC_RATFUNC_HPP
#define LEAFSPEC_RATFUNC_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "leafspec/cyclotomic.hpp"
#include "leafspec/polynomial.hpp"
#include "leafspec/rational.hpp"

namespace leafspec {

// Multiset of denominator factors (1 - z^d)^mult, kept sorted by d.
using FactoredDenominator = std::vector<std::pair<unsigned, unsigned>>;

template <class F>
Poly<F> expand_factors(const FactoredDenominator& factors) {
  Poly<F> acc = Poly<F>::constant(F(1));
  for (auto [d, mult] : factors) {
    std::vector<F> c(d + 1, F(0));
    c[0] = F(1);
    c[d] = F(-1);
    acc = acc * poly_pow(Poly<F>(std::move(c)), mult);
  }
  return acc;
}

// Quotient of polynomials over an exact field.  The stored pair is not
// automatically reduced (a factored denominator, when present, stays in the
// form it was given in); normalized() produces the canonical reduced form.
template <class F>
struct RationalFunction {
  Poly<F> num;
  Poly<F> den;
  std::optional<FactoredDenominator> factored_denominator;

  RationalFunction() : num(), den(Poly<F>::constant(F(1))) {}
  RationalFunction(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  }
  RationalFunction(Poly<F> n, FactoredDenominator factors)
      : num(std::move(n)), den(expand_factors<F>(factors)),
        factored_denominator(std::move(factors)) {
    FactoredDenominator& f = *factored_denominator;
    std::sort(f.begin(), f.end());
  }

  static RationalFunction constant(const F& a) {
    return RationalFunction(Poly<F>::constant(a), Poly<F>::constant(F(1)));
  }

  bool is_zero() const { return num.is_zero(); }

  // gcd-reduced, denominator scaled to constant term 1 (or monic when the
  // denominator vanishes at the origin).  Drops the factored form unless the
  // denominator survives reduction unchanged.
  RationalFunction normalized() const {
    Poly<F> g = poly_gcd(num, den);
    Poly<F> n = poly_divmod(num, g).first;
    Poly<F> d = poly_divmod(den, g).first;
    F scale = !d.at(0).is_zero() ? F(1) / d.at(0) : F(1) / d.lead();
    n = scale * n;
    d = scale * d;
    RationalFunction r(std::move(n), std::move(d));
    if (factored_denominator && r.den == den) r.factored_denominator = factored_denominator;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den).normalized();
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den).normalized();
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.num, a.den * b.den).normalized();
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(a.num * b.den, a.den * b.num).normalized();
  }

  // Equality as functions, independent of representation.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }
};

// Power series division a/b to K+1 terms; requires b[0] != 0.
template <class F>
std::vector<F> series_divide(const std::vector<F>& a, const std::vector<F>& b, unsigned k_max) {
  F inv_b0 = F(1) / b[0];
  std::vector<F> c(k_max + 1, F(0));
  for (unsigned k = 0; k <= k_max; ++k) {
    F acc = k < a.size() ? a[k] : F(0);
    for (unsigned j = 1; j < b.size() && j <= k; ++j) acc = acc - b[j] * c[k - j];
    c[k] = acc * inv_b0;
  }
  return c;
}

// Taylor coefficients c_0..c_K via the linear recurrence from the
// denominator; never expands intermediate series products.
template <class F>
std::vector<F> series_coefficients(const RationalFunction<F>& f, unsigned k_max) {
  const Poly<F>* den = &f.den;
  RationalFunction<F> reduced;
  if (f.den.at(0).is_zero()) {
    reduced = f.normalized();
    den = &reduced.den;
    if (den->at(0).is_zero()) throw PoleAtOrigin();
    return series_divide(reduced.num.c, den->c, k_max);
  }
  return series_divide(f.num.c, f.den.c, k_max);
}

template <class F>
struct LaurentExpansion {
  unsigned pole_order = 0;
  // coeffs[i] multiplies t^{i - pole_order} where t is the local parameter;
  // for an expansion at z = 1 the parameter is t = 1 - z.
  std::vector<F> coeffs;
  const F& leading() const { return coeffs.front(); }
};

// Laurent data of f at z = omega in the parameter t = omega - z, to
// pole_order + depth + 1 terms starting at the leading one.
template <class F>
LaurentExpansion<F> laurent_at(const RationalFunction<F>& f, const F& omega, unsigned depth) {
  RationalFunction<F> r = f.normalized();
  if (r.is_zero()) return {0, std::vector<F>(depth + 1, F(0))};
  // z = omega - t
  Poly<F> sub(std::vector<F>{omega, F(-1)});
  Poly<F> num_t = poly_compose(r.num, sub);
  Poly<F> den_t = poly_compose(r.den, sub);
  unsigned p = 0;
  while (den_t.at(p).is_zero()) ++p;  // den_t != 0, so this terminates
  den_t.c.erase(den_t.c.begin(), den_t.c.begin() + p);
  return {p, series_divide(num_t.c, den_t.c, depth)};
}

// Expansion around z = 1 in powers of (1 - z): pole order p and the
// coefficients of (1-z)^{-p} .. (1-z)^{-p+depth}.
inline LaurentExpansion<Rational> laurent_at_one(const RationalFunction<Rational>& f,
                                                 unsigned depth) {
  return laurent_at(f, Rational(1), depth);
}

// Order of the pole of f at omega (0 when f is regular there), computed on
// the gcd-reduced representative.
unsigned pole_order(const RationalFunction<Rational>& f, const CyclotomicElement& omega);

struct CyclotomicFactorization {
  // Phi_d powers, ascending d.  Note these are cyclotomic polynomials, not
  // the (1 - z^d) factors of a FactoredDenominator.
  std::vector<std::pair<unsigned, unsigned>> phi_powers;
  Poly<Rational> leftover;  // what trial division could not explain; degree 0 iff none
};

CyclotomicFactorization factor_into_cyclotomics(Poly<Rational> p);

struct PartialFractionTerm {
  CyclotomicElement pole;   // a primitive root_order-th root of unity
  unsigned order;           // j >= 1: the term is coeff * (pole - z)^{-j}
  CyclotomicElement coeff;  // nonzero
  unsigned root_order;      // d with pole = zeta_d^exponent
  unsigned exponent;        // gcd(exponent, d) = 1
};

struct PartialFractionForm {
  Poly<Rational> polynomial_part;
  std::vector<PartialFractionTerm> terms;  // sorted by (root_order, exponent, order)
};

// Decomposition f = polynomial_part + sum coeff * (pole - z)^{-order} over
// the poles of f, which must all be roots of unity (NonCyclotomicPole
// otherwise).  Coefficients come from the exact Laurent data at each pole.
PartialFractionForm partial_fractions(const RationalFunction<Rational>& f);

// Exact reassembly of a decomposition; inverse of partial_fractions up to
// representation.
RationalFunction<Rational> pf_reconstruct(const PartialFractionForm& pf);

// Taylor coefficients 0..K of a decomposition, summed termwise through the
// binomial series of (pole - z)^{-order}.  An independent route to the
// coefficients of the original function.
std::vector<Rational> pf_series(const PartialFractionForm& pf, unsigned k_max);

struct AsymptoticProfile {
  unsigned exponent = 0;  // m': coefficients grow like k^{m'}
  bool is_constant = true;
  Rational constant;           // leading constant C when is_constant
  std::vector<Rational> cycle;  // general case: leading value as a function of k mod period
  Rational average;             // mean of the cycle
};

// Dominant coefficient growth b_k ~ L(k) * k^{m'} read off the maximal-order
// poles; L is constant when those poles conspire to a k-independent leading
// sum, periodic otherwise.
AsymptoticProfile asymptotic_profile(const RationalFunction<Rational>& f);

inline Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace leafspec

#endif
