#include "leafspec/molien.hpp"

#include <map>
#include <numeric>

namespace leafspec {

namespace {

using Cyc = CyclotomicElement;

RationalFunction<Cyc> one_over(const Poly<Cyc>& den) {
  return RationalFunction<Cyc>(Poly<Cyc>::constant(Cyc(1)), den);
}

RationalFunction<Rational> descend(const RationalFunction<Cyc>& f) {
  auto down = [](const Poly<Cyc>& p) {
    std::vector<Rational> c;
    c.reserve(p.c.size());
    for (const auto& x : p.c) {
      auto r = x.as_rational();
      if (!r)
        throw InternalIrrationality(
            "Molien sum did not descend to Q; a cyclotomic coefficient survived averaging");
      c.push_back(*r);
    }
    return Poly<Rational>(std::move(c));
  };
  return RationalFunction<Rational>(down(f.num), down(f.den)).normalized();
}

void validate_molien(const RationalFunction<Rational>& f) {
  auto coeffs = series_coefficients(f, 64);
  if (coeffs[0] != Rational(1))
    throw InternalIrrationality("Molien series has constant term != 1");
  for (const auto& c : coeffs)
    if (!c.is_integer() || c.sign() < 0)
      throw InternalIrrationality("Molien series has a non-natural Taylor coefficient");
}

}  // namespace

Poly<Cyc> char_det(const GroupElement& g) {
  const unsigned n = g.n;
  // Faddeev-LeVerrier: charpoly(g) = l^n + c_1 l^{n-1} + ... + c_n, and
  // det(I - z g) is the reversed sequence 1 + c_1 z + ... + c_n z^n.
  std::vector<Cyc> c(n + 1, Cyc(0));
  c[0] = Cyc(1);
  Matrix<Cyc> m = g;
  for (unsigned k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix<Cyc> shifted = m;
      for (unsigned i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + c[k - 1];
      m = g * shifted;
    }
    c[k] = Cyc(Rational(-1, static_cast<long>(k))) * m.trace();
  }
  return Poly<Cyc>(std::move(c));
}

FiniteMatrixGroup enumerate_group(const std::vector<GroupElement>& generators, unsigned cap,
                                  unsigned dim) {
  if (!generators.empty()) dim = generators[0].n;
  if (dim == 0) throw Error(ErrorKind::Domain, "group dimension not determined");

  unsigned conductor = 1;
  for (const auto& g : generators) {
    if (g.n != dim)
      throw Error(ErrorKind::Domain, "generators of mixed dimensions");
    if (char_det(g).deg() != static_cast<int>(dim))
      throw NotInvertible("singular generator: det(I - z g) has degree < dim");
    for (const auto& e : g.a) conductor = std::lcm(conductor, e.conductor());
  }

  FiniteMatrixGroup group;
  group.dim = dim;
  group.conductor = conductor;

  GroupElement id = GroupElement::identity(dim);
  std::map<GroupElement, unsigned> seen;
  group.elements.push_back(id);
  seen.emplace(id, 0);

  // The element list doubles as the BFS queue: i walks it while it grows.
  for (size_t i = 0; i < group.elements.size(); ++i) {
    GroupElement current = group.elements[i];  // copy; the vector reallocates below
    for (const auto& g : generators) {
      GroupElement next = current * g;
      if (seen.count(next)) continue;
      if (group.elements.size() >= cap)
        throw GroupTooLarge("group closure exceeded cap of " + std::to_string(cap) +
                            " elements");
      seen.emplace(next, static_cast<unsigned>(group.elements.size()));
      group.elements.push_back(std::move(next));
    }
  }
  return group;
}

RationalFunction<Rational> molien_series_serial(const FiniteMatrixGroup& group) {
  if (group.elements.empty())
    throw Error(ErrorKind::Domain, "Molien series of an empty element list");
  RationalFunction<Cyc> acc;
  for (const auto& g : group.elements) acc = acc + one_over(char_det(g));
  acc = acc * RationalFunction<Cyc>::constant(Cyc(Rational(1, static_cast<long>(group.order()))));
  auto result = descend(acc);
  validate_molien(result);
  return result;
}

RationalFunction<Rational> molien_series(const FiniteMatrixGroup& group) {
  if (group.elements.empty())
    throw Error(ErrorKind::Domain, "Molien series of an empty element list");
  const long count = static_cast<long>(group.elements.size());
  RationalFunction<Cyc> acc;
#pragma omp parallel
  {
    RationalFunction<Cyc> local;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < count; ++i)
      local = local + one_over(char_det(group.elements[static_cast<size_t>(i)]));
#pragma omp critical(leafspec_molien_combine)
    acc = acc + local;
  }
  acc = acc * RationalFunction<Cyc>::constant(Cyc(Rational(1, static_cast<long>(group.order()))));
  auto result = descend(acc);
  validate_molien(result);
  return result;
}

unsigned fixed_subspace_dimension(const FiniteMatrixGroup& group) {
  Matrix<Cyc> avg(group.dim);
  for (const auto& g : group.elements) avg = avg + g;
  avg = Cyc(Rational(1, static_cast<long>(group.order()))) * avg;
  return rank(avg);  // a projector's rank is its fixed dimension
}

}  // namespace leafspec
