#ifndef LEAFSPEC_MOLIEN_HPP
#define LEAFSPEC_MOLIEN_HPP

#include <vector>

#include "leafspec/cyclotomic.hpp"
#include "leafspec/matrix.hpp"
#include "leafspec/ratfunc.hpp"

namespace leafspec {

using GroupElement = Matrix<CyclotomicElement>;

struct FiniteMatrixGroup {
  unsigned dim = 0;        // size of the matrices
  unsigned conductor = 1;  // field the entries live in
  std::vector<GroupElement> elements;  // identity first, then closure order

  size_t order() const { return elements.size(); }
};

inline constexpr unsigned kDefaultGroupCap = 10000;

// Closure of the generators under multiplication, breadth-first, so the
// element order is reproducible.  Throws GroupTooLarge past cap and
// NotInvertible for a singular generator.  No generators yields the trivial
// group; dim must then be supplied.
FiniteMatrixGroup enumerate_group(const std::vector<GroupElement>& generators,
                                  unsigned cap = kDefaultGroupCap, unsigned dim = 0);

// det(I - z g), exact, constant term 1; degree dim exactly when g is
// invertible.  Faddeev-LeVerrier on the reversed characteristic polynomial.
Poly<CyclotomicElement> char_det(const GroupElement& g);

// Molien series (1/|G|) sum_g 1/det(I - z g) as a rational function over Q.
// The cyclotomic sum is exact, so the parallel partition cannot change the
// result; molien_series_serial is the single-loop reference.
RationalFunction<Rational> molien_series(const FiniteMatrixGroup& group);
RationalFunction<Rational> molien_series_serial(const FiniteMatrixGroup& group);

// Dimension of the fixed subspace, as the rank of the averaged projector.
unsigned fixed_subspace_dimension(const FiniteMatrixGroup& group);

}  // namespace leafspec

#endif
