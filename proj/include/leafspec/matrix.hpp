#ifndef LEAFSPEC_MATRIX_HPP
#define LEAFSPEC_MATRIX_HPP

#include <vector>

#include "leafspec/errors.hpp"

namespace leafspec {

// Dense square matrix over an exact field.
template <class F>
struct Matrix {
  unsigned n = 0;
  std::vector<F> a;  // row-major

  Matrix() = default;
  explicit Matrix(unsigned dim) : n(dim), a(static_cast<size_t>(dim) * dim, F(0)) {}

  F& at(unsigned i, unsigned j) { return a[static_cast<size_t>(i) * n + j]; }
  const F& at(unsigned i, unsigned j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Matrix identity(unsigned dim) {
    Matrix m(dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = F(1);
    return m;
  }

  F trace() const {
    F t(0);
    for (unsigned i = 0; i < n; ++i) t = t + at(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.n);
    for (unsigned i = 0; i < x.n; ++i)
      for (unsigned k = 0; k < x.n; ++k) {
        const F& s = x.at(i, k);
        if (s.is_zero()) continue;
        for (unsigned j = 0; j < x.n; ++j) r.at(i, j) = r.at(i, j) + s * y.at(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }

  friend Matrix operator*(const F& s, const Matrix& x) {
    Matrix r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.n == y.n && x.a == y.a;
  }
  // Lexicographic entry order; deterministic dedup key, no arithmetic meaning.
  friend bool operator<(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) return x.n < y.n;
    for (size_t i = 0; i < x.a.size(); ++i) {
      if (x.a[i] < y.a[i]) return true;
      if (y.a[i] < x.a[i]) return false;
    }
    return false;
  }
};

// Rank by Gaussian elimination with exact pivots.
template <class F>
unsigned rank(Matrix<F> m) {
  unsigned r = 0;
  for (unsigned col = 0; col < m.n && r < m.n; ++col) {
    unsigned pivot = r;
    while (pivot < m.n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.n) continue;
    for (unsigned j = 0; j < m.n; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    F inv = F(1) / m.at(r, col);
    for (unsigned j = col; j < m.n; ++j) m.at(r, j) = inv * m.at(r, j);
    for (unsigned i = 0; i < m.n; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      F s = m.at(i, col);
      for (unsigned j = col; j < m.n; ++j) m.at(i, j) = m.at(i, j) - s * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace leafspec

#endif
