#include "leafspec/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace leafspec {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// z^n - 1
Poly<Rational> power_minus_one(unsigned n) {
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = Rational(-1);
  c[n] = Rational(1);
  return Poly<Rational>(std::move(c));
}

std::mutex phi_cache_mutex;
std::map<unsigned, Poly<Rational>> phi_cache;

}  // namespace

const Poly<Rational>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorKind::Domain, "cyclotomic polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(phi_cache_mutex);
  auto it = phi_cache.find(n);
  if (it != phi_cache.end()) return it->second;
  // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d; build divisors bottom-up so
  // the recursion never re-enters the lock.
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || phi_cache.count(d)) continue;
    Poly<Rational> q = power_minus_one(d);
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) q = poly_divmod(q, phi_cache.at(e)).first;
    phi_cache.emplace(d, std::move(q));
  }
  return phi_cache.at(n);
}

CyclotomicElement::CyclotomicElement(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor) {
  if (conductor == 0) throw Error(ErrorKind::Domain, "conductor must be >= 1");
  unsigned phi = euler_phi(conductor);
  Poly<Rational> p(std::move(coeffs));
  if (p.deg() >= static_cast<int>(phi))
    p = poly_divmod(p, cyclotomic_polynomial(conductor)).second;
  coeffs_.assign(phi, Rational(0));
  for (size_t i = 0; i < p.c.size(); ++i) coeffs_[i] = p.c[i];
}

CyclotomicElement CyclotomicElement::root_of_unity(unsigned n, long a) {
  if (n == 0) throw Error(ErrorKind::Domain, "root of unity needs n >= 1");
  long r = a % static_cast<long>(n);
  if (r < 0) r += n;
  std::vector<Rational> c(static_cast<size_t>(r) + 1, Rational(0));
  c.back() = Rational(1);
  return CyclotomicElement(n, std::move(c));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& x : coeffs_)
    if (!x.is_zero()) return false;
  return true;
}

bool CyclotomicElement::is_one() const {
  if (coeffs_[0] != Rational(1)) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> CyclotomicElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CyclotomicElement CyclotomicElement::embed(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw Error(ErrorKind::Domain, "embedding target is not a conductor multiple");
  // zeta_N = zeta_M^{M/N}: re-expand the power basis representation.
  unsigned step = m / conductor_;
  std::vector<Rational> c(static_cast<size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return CyclotomicElement(m, std::move(c));
}

namespace {

std::pair<CyclotomicElement, CyclotomicElement> unify(const CyclotomicElement& a,
                                                      const CyclotomicElement& b) {
  unsigned m = std::lcm(a.conductor(), b.conductor());
  return {a.embed(m), b.embed(m)};
}

Poly<Rational> as_poly(const CyclotomicElement& a) {
  return Poly<Rational>(a.coeffs());
}

}  // namespace

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
  if (is_rational()) return CyclotomicElement(Rational(1) / coeffs_[0]).embed(conductor_);
  // Phi_N is irreducible over Q, so gcd(a, Phi_N) = 1 and the Bezout
  // coefficient of a is the inverse mod Phi_N.
  auto [g, u, v] = poly_ext_gcd(as_poly(*this), cyclotomic_polynomial(conductor_));
  (void)v;
  if (g.deg() != 0)
    throw InternalIrrationality("cyclotomic inverse: nontrivial gcd with Phi_N");
  return CyclotomicElement(conductor_, u.c);
}

CyclotomicElement CyclotomicElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicElement acc(1);
  CyclotomicElement base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc.embed(conductor_);
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  auto [x, y] = unify(a, b);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  auto [x, y] = unify(a, b);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  return x;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  auto [x, y] = unify(a, b);
  Poly<Rational> prod = as_poly(x) * as_poly(y);
  return CyclotomicElement(x.conductor(), std::move(prod.c));
}

CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a * b.inverse();
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  auto [x, y] = unify(a, b);
  return x.coeffs_ == y.coeffs_;
}

bool operator<(const CyclotomicElement& a, const CyclotomicElement& b) {
  auto [x, y] = unify(a, b);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] < y.coeffs_[i]) return true;
    if (y.coeffs_[i] < x.coeffs_[i]) return false;
  }
  return false;
}

std::string CyclotomicElement::str() const {
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].str();
  }
  return s + "] @ " + std::to_string(conductor_);
}

}  // namespace leafspec
