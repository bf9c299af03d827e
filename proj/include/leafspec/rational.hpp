#ifndef LEAFSPEC_RATIONAL_HPP
#define LEAFSPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "leafspec/errors.hpp"

namespace leafspec {

// Arbitrary-precision rational, kept canonical at all times: gcd(num, den) = 1,
// den > 0, zero is 0/1.  Thin wrapper over GMP's mpq, which preserves
// canonical form under arithmetic once inputs are canonical.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
  Rational(long n, long d) : q_(n, d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
  }
  Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : q_(n) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p/q" or a bare integer "p"; sign on the numerator.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
}

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace leafspec

#endif
