#ifndef LEAFSPEC_POLYNOMIAL_HPP
#define LEAFSPEC_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "leafspec/errors.hpp"

namespace leafspec {

// Dense univariate polynomial over an exact field F.  Trailing zero
// coefficients are stripped, so the zero polynomial has an empty coefficient
// vector and degree -1.
template <class F>
struct Poly {
  std::vector<F> c;  // c[i] multiplies z^i

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { strip(); }
  static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
  static Poly monomial(const F& a, size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = a;
    return Poly(std::move(v));
  }

  void strip() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const F& lead() const { return c.back(); }
  F at(size_t k) const { return k < c.size() ? c[k] : F(0); }

  F eval(const F& x) const {
    F acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c.size() + b.c.size() - 1, F(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& p) {
    Poly r = p;
    for (auto& x : r.c) x = s * x;
    r.strip();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c[i].str() + ")z^" + std::to_string(i);
    }
    return s;
  }
};

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly<F> r = a;
  if (a.deg() < b.deg()) return {Poly<F>(), r};
  std::vector<F> q(a.deg() - b.deg() + 1, F(0));
  F inv_lead = F(1) / b.lead();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    size_t shift = r.deg() - b.deg();
    F t = r.lead() * inv_lead;
    q[shift] = t;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = r.c[shift + i] - t * b.c[i];
    r.strip();
  }
  return {Poly<F>(std::move(q)), r};
}

template <class F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
  return poly_divmod(a, d).second.is_zero();
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return (F(1) / p.lead()) * p;
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_divmod(a, b).second;
    a = std::move(b);
    b = monic(r);  // keeps coefficient growth in check
  }
  return monic(a);
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> u0 = Poly<F>::constant(F(1)), u1;
  Poly<F> v0, v1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    r0 = std::move(r1); r1 = std::move(r2);
    Poly<F> u2 = u0 - q * u1;
    u0 = std::move(u1); u1 = std::move(u2);
    Poly<F> v2 = v0 - q * v1;
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  F s = F(1) / r0.lead();
  return {s * r0, s * u0, s * v0};
}

// p(q(z)) by Horner.
template <class F>
Poly<F> poly_compose(const Poly<F>& p, const Poly<F>& q) {
  Poly<F> acc;
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * q + Poly<F>::constant(p.c[i]);
  return acc;
}

template <class F>
Poly<F> poly_pow(const Poly<F>& p, unsigned e) {
  Poly<F> acc = Poly<F>::constant(F(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace leafspec

#endif
