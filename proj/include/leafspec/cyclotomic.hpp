#ifndef LEAFSPEC_CYCLOTOMIC_HPP
#define LEAFSPEC_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspec/polynomial.hpp"
#include "leafspec/rational.hpp"

namespace leafspec {

unsigned euler_phi(unsigned n);

// N-th cyclotomic polynomial, exact integer coefficients.
// cyclotomic_polynomial(1) = z - 1.  Results are cached.
const Poly<Rational>& cyclotomic_polynomial(unsigned n);

// Element of the cyclotomic field Q(zeta_N), stored as the canonical
// representative mod Phi_N in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
// Elements of different conductors combine by embedding into the lcm field.
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(Rational(0)) {}
  CyclotomicElement(long n) : CyclotomicElement(Rational(n)) {}  // NOLINT
  explicit CyclotomicElement(const Rational& r) : conductor_(1), coeffs_{r} {}
  // Coefficients of a polynomial in zeta_N; reduced mod Phi_N if too long,
  // zero-padded to phi(N) if short.
  CyclotomicElement(unsigned conductor, std::vector<Rational> coeffs);

  static CyclotomicElement root_of_unity(unsigned n, long a);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Descends to Q when the element lies there; empty otherwise.  Not a
  // failure: callers branch on it.
  std::optional<Rational> as_rational() const;

  // Embedding into Q(zeta_M); requires conductor | M.
  CyclotomicElement embed(unsigned m) const;

  CyclotomicElement inverse() const;  // throws DivisionByZero on 0
  CyclotomicElement pow(long e) const;

  CyclotomicElement operator-() const;
  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) {
    return !(a == b);
  }
  // Lexicographic on (conductor-unified) coefficients; a total order used for
  // deterministic dedup maps, no arithmetic meaning.
  friend bool operator<(const CyclotomicElement& a, const CyclotomicElement& b);

  std::string str() const;

 private:
  unsigned conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

}  // namespace leafspec

#endif
