#include "locsym/factored.hpp"

#include <algorithm>

#include "locsym/error.hpp"
#include "locsym/poly_algorithms.hpp"

namespace locsym {

void FactoredFunction::absorb(const Poly& p, long exponent) {
  if (p.space() != space_) throw Error(ErrorKind::ValidationError, "factor in the wrong variables: " + p.to_string());
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero factor in a rational function");
  if (exponent == 0) return;
  if (p.is_constant()) {
    constant_ *= locsym::pow(p.leading_coefficient(), exponent);
    return;
  }
  BigRational scale;
  HomPoly h = normalize(HomPoly(p), &scale);
  constant_ *= locsym::pow(scale, exponent);
  auto it = std::lower_bound(factors_.begin(), factors_.end(), h,
                             [](const Factor& f, const HomPoly& q) { return f.poly < q; });
  if (it != factors_.end() && it->poly == h) {
    it->exponent += exponent;
    if (it->exponent == 0) factors_.erase(it);
  } else {
    factors_.insert(it, Factor{std::move(h), exponent});
  }
}

void FactoredFunction::check_degree() const {
  long sum = 0;
  for (const auto& f : factors_) sum += f.exponent * f.poly.degree();
  if (sum != 0)
    throw Error(ErrorKind::ValidationError,
                "total degree of a rational function must be 0, got " + std::to_string(sum));
}

FactoredFunction FactoredFunction::unchecked(Space space, const BigRational& constant,
                                             std::vector<std::pair<Poly, long>> factors) {
  if (constant == 0) throw Error(ErrorKind::ValidationError, "constant of a rational function must be nonzero");
  FactoredFunction f(space, constant);
  for (const auto& [p, e] : factors) f.absorb(p, e);
  f.check_degree();
  return f;
}

FactoredFunction FactoredFunction::make(Space space, const BigRational& constant,
                                        std::vector<std::pair<Poly, long>> factors, bool trust_irreducible) {
  FactoredFunction f = unchecked(space, constant, std::move(factors));
  f.trusted_ = trust_irreducible;
  for (const auto& fac : f.factors_) {
    if (fac.poly.degree() > 3) {
      if (!trust_irreducible)
        throw Error(ErrorKind::DegreeTooHigh,
                    "factor " + fac.poly.to_string() + " has degree > 3; mark it trusted to assert irreducibility");
      continue;
    }
    if (!trust_irreducible && !low_degree_irreducible(fac.poly))
      throw Error(ErrorKind::ValidationError, "factor " + fac.poly.to_string() + " is reducible over Q");
  }
  for (size_t i = 0; i < f.factors_.size(); ++i)
    for (size_t j = i + 1; j < f.factors_.size(); ++j)
      if (!coprime(f.factors_[i].poly, f.factors_[j].poly))
        throw Error(ErrorKind::ValidationError, "factors " + f.factors_[i].poly.to_string() + " and " +
                                                    f.factors_[j].poly.to_string() + " share a common factor");
  return f;
}

FactoredFunction FactoredFunction::constant(Space space, const BigRational& value) {
  if (value == 0) throw Error(ErrorKind::ValidationError, "constant of a rational function must be nonzero");
  return FactoredFunction(space, value);
}

bool FactoredFunction::is_split() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.poly.degree() == 1; });
}

long FactoredFunction::exponent_of(const Poly& p) const {
  if (p.is_zero() || p.is_constant() || p.space() != space_) return 0;
  Poly n = normalize(p);
  for (const auto& f : factors_)
    if (f.poly.poly() == n) return f.exponent;
  return 0;
}

BigRational FactoredFunction::evaluate(std::span<const BigRational> coords) const {
  BigRational value = constant_;
  for (const auto& f : factors_) {
    BigRational v = f.poly.poly().evaluate(coords);
    if (v == 0) throw Error(ErrorKind::NotAUnit, "factor " + f.poly.to_string() + " vanishes at the point");
    value *= locsym::pow(v, f.exponent);
  }
  return value;
}

FactoredFunction FactoredFunction::inverse() const { return pow(-1); }

FactoredFunction FactoredFunction::pow(long k) const {
  FactoredFunction r(space_, locsym::pow(constant_, k));
  if (k == 0) return r;
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exponent *= k;
  r.trusted_ = trusted_;
  return r;
}

FactoredFunction operator*(const FactoredFunction& a, const FactoredFunction& b) {
  if (a.space_ != b.space_) throw Error(ErrorKind::ValidationError, "product of functions in different spaces");
  FactoredFunction r = a;
  r.constant_ *= b.constant_;
  for (const auto& f : b.factors_) r.absorb(f.poly.poly(), f.exponent);
  r.trusted_ = a.trusted_ || b.trusted_;
  return r;
}

std::string FactoredFunction::to_string() const {
  if (factors_.empty()) return to_short_string(constant_);
  std::string out;
  if (constant_ != 1) out = to_short_string(constant_) + " * ";
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " * ";
    out += "(" + factors_[i].poly.to_string() + ")^" + std::to_string(factors_[i].exponent);
  }
  return out;
}

}  // namespace locsym
