#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "locsym/rational.hpp"

namespace locsym {

/// Variable sets in scope: the projective line (s,t) and plane (X,Y,Z).
enum class Space { Line, Plane };

inline int variable_count(Space space) { return space == Space::Line ? 2 : 3; }
char variable_name(Space space, int index);

using Exponent = std::array<int, 3>;

/// Sparse polynomial over Q in the variables of one Space. May be zero or
/// inhomogeneous; HomPoly below carries the stronger invariants. Terms are
/// kept in descending lexicographic order (X > Y > Z, s > t), which on a
/// homogeneous polynomial is the graded-lex order, so the first term is the
/// leading one.
class Poly {
 public:
  using Terms = std::map<Exponent, BigRational, std::greater<>>;

  explicit Poly(Space space = Space::Plane) : space_(space) {}
  Poly(Space space, const BigRational& constant);

  static Poly variable(Space space, int index);
  static Poly monomial(Space space, const Exponent& exponent, const BigRational& coefficient);

  Space space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  int degree_in(int var) const;
  /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
  int min_degree_in(int var) const;

  /// Coefficient of var^k, viewed as a polynomial in the remaining variables.
  Poly coefficient_in(int var, int k) const;
  const BigRational& leading_coefficient() const;
  const Exponent& leading_exponent() const;
  BigRational coefficient(const Exponent& e) const;

  Poly derivative(int var) const;
  BigRational evaluate(std::span<const BigRational> point) const;

  /// Replaces variable i by images[i]; all images share one space.
  Poly compose(std::span<const Poly> images) const;

  void add_term(const Exponent& e, const BigRational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const BigRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRational& c) { return a *= c; }
  friend Poly operator*(const BigRational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned exponent) const;

  /// Exact quotient when `divisor` divides *this, otherwise nullopt-style
  /// false return. Uses lexicographic division, which is exact whenever the
  /// division is.
  bool divide_exact(const Poly& divisor, Poly& quotient) const;

  /// gcd of numerators over lcm of denominators, positive; zero for zero.
  BigRational content() const;

  std::string to_string() const;

 private:
  Space space_;
  Terms terms_;
};

/// Strict total order on polynomials: by degree, then term by term.
bool poly_less(const Poly& a, const Poly& b);

/// Nonzero homogeneous polynomial.
class HomPoly {
 public:
  /// Throws ZeroPolynomial or ValidationError (inhomogeneous).
  explicit HomPoly(Poly p);

  const Poly& poly() const { return poly_; }
  Space space() const { return poly_.space(); }
  int degree() const { return degree_; }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.poly_ == b.poly_; }
  friend bool operator<(const HomPoly& a, const HomPoly& b) { return poly_less(a.poly_, b.poly_); }

 private:
  Poly poly_;
  int degree_;
};

/// Content 1 and positive leading coefficient; `scale` receives the factor
/// with input == scale * result.
HomPoly normalize(const HomPoly& p, BigRational* scale = nullptr);
/// Same for a raw polynomial; throws ZeroPolynomial on zero.
Poly normalize(const Poly& p, BigRational* scale = nullptr);

}  // namespace locsym
