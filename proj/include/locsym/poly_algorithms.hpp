#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "locsym/points.hpp"
#include "locsym/poly.hpp"

namespace locsym {

/// Classical Sylvester resultant of p and q with respect to `var`, as a
/// polynomial in the remaining variables. Zero iff p and q share a factor of
/// positive degree in `var` (or one of them is zero).
Poly resultant(const Poly& p, const Poly& q, int var);

/// gcd of two binary forms in (s,t), normalized; the constant 1 when coprime.
Poly binary_gcd(const Poly& a, const Poly& b);

/// True iff the two homogeneous polynomials have no common nonconstant factor.
bool coprime(const HomPoly& a, const HomPoly& b);

struct RationalRoots {
  std::vector<std::pair<ProjPoint1, int>> roots;  // sorted by point
  bool nonsplit = false;                         // an irrational factor remains
  Poly remainder{Space::Line};                   // that factor (constant 1 if split)
};

/// All rational roots of a binary form with multiplicities.
RationalRoots rational_roots(const HomPoly& b);

/// Irreducibility over Q for degree <= 3; throws DegreeTooHigh above.
bool low_degree_irreducible(const HomPoly& p);

/// p(X,Y,Z) composed with a triple of binary forms. nullopt is the zero
/// report (the composition vanishes identically).
std::optional<HomPoly> substitute_param(const HomPoly& p, const std::array<Poly, 3>& forms);

/// Throws InvalidParametrization unless the nonzero forms share one degree
/// and have no common root on P^1.
void validate_param_forms(const std::array<Poly, 3>& forms);

/// Order of vanishing of a binary form at a point of P^1.
int order_at(const Poly& binary_form, const ProjPoint1& p);

/// Evaluates a homogeneous polynomial at the integer coordinates of a point.
template <int N>
BigRational evaluate_at(const Poly& p, const ProjectivePoint<N>& point) {
  auto c = point.rational_coords();
  return p.evaluate(std::span<const BigRational>(c.data(), c.size()));
}

}  // namespace locsym
