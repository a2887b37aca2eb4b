#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locsym/poly.hpp"

namespace locsym {

struct Factor {
  HomPoly poly;
  long exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// c * prod f_i^{e_i}: a nonzero constant times normalized, sorted,
/// pairwise distinct homogeneous factors with nonzero exponents and total
/// degree zero. Functions built through make() are also checked for pairwise
/// coprimality and (up to degree 3) irreducibility.
class FactoredFunction {
 public:
  /// Validating constructor. Factors may be unnormalized and repeated; they
  /// are normalized, merged, and checked. `trust_irreducible` skips the
  /// irreducibility test (required above degree 3).
  static FactoredFunction make(Space space, const BigRational& constant,
                               std::vector<std::pair<Poly, long>> factors, bool trust_irreducible = false);

  /// Normalizes and merges but checks only the degree sum. Used for
  /// restrictions, whose nonsplit remainders need not be irreducible.
  static FactoredFunction unchecked(Space space, const BigRational& constant,
                                    std::vector<std::pair<Poly, long>> factors);

  static FactoredFunction constant(Space space, const BigRational& value);

  Space space() const { return space_; }
  const BigRational& constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool trusted() const { return trusted_; }

  bool is_constant() const { return factors_.empty(); }
  /// Every factor linear.
  bool is_split() const;

  /// Exponent of the factor proportional to `p`; 0 if absent.
  long exponent_of(const Poly& p) const;

  /// c * prod f_i(coords)^{e_i}; throws NotAUnit if a factor vanishes there.
  BigRational evaluate(std::span<const BigRational> coords) const;

  FactoredFunction inverse() const;
  FactoredFunction pow(long k) const;
  friend FactoredFunction operator*(const FactoredFunction& a, const FactoredFunction& b);
  friend FactoredFunction operator/(const FactoredFunction& a, const FactoredFunction& b) {
    return a * b.inverse();
  }
  friend bool operator==(const FactoredFunction& a, const FactoredFunction& b) {
    return a.space_ == b.space_ && a.constant_ == b.constant_ && a.factors_ == b.factors_;
  }

  /// "3 * (s)^1 * (t)^-1"; a bare constant prints as the rational.
  std::string to_string() const;

 private:
  FactoredFunction(Space space, BigRational constant) : space_(space), constant_(std::move(constant)) {}
  void absorb(const Poly& p, long exponent);
  void check_degree() const;

  Space space_;
  BigRational constant_;
  std::vector<Factor> factors_;
  bool trusted_ = false;
};

using P1Function = FactoredFunction;
using SurfaceFunction = FactoredFunction;

}  // namespace locsym
