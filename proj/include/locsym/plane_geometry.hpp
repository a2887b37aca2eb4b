#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "locsym/factored.hpp"
#include "locsym/points.hpp"

namespace locsym {

/// Irreducible plane curve, stored normalized.
class PlaneCurve {
 public:
  /// Throws ValidationError when reducible (checked up to degree 3) or
  /// DegreeTooHigh above that unless trusted.
  explicit PlaneCurve(const Poly& p, bool trust_irreducible = false);

  const HomPoly& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  std::string to_string() const { return poly_.to_string(); }
  bool contains(const ProjPoint2& P) const;
  /// Gradient at P is nonzero.
  bool smooth_at(const ProjPoint2& P) const;

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.poly_ == b.poly_; }
  friend bool operator<(const PlaneCurve& a, const PlaneCurve& b) { return a.poly_ < b.poly_; }

 private:
  HomPoly poly_;
};

/// [F1 : F2 : F3] with C(F1,F2,F3) = 0, forms of degree deg C without a
/// common root.
class CurveParam {
 public:
  /// Validates; throws InvalidParametrization.
  CurveParam(PlaneCurve curve, std::array<Poly, 3> forms);

  const PlaneCurve& curve() const { return curve_; }
  const std::array<Poly, 3>& forms() const { return forms_; }
  ProjPoint2 point_at(const ProjPoint1& p) const;
  /// Unique parameter over P. Throws PointNotOnCurve or NonUniquePreimage.
  ProjPoint1 preimage(const ProjPoint2& P) const;
  std::string to_string() const;

 private:
  PlaneCurve curve_;
  std::array<Poly, 3> forms_;
};

/// Smallest-height rational point on a conic, heights 1..max_height.
std::optional<ProjPoint2> find_rational_point(const HomPoly& conic, int max_height = 20);

/// Lines by solving for the last variable present; conics by projection
/// from a searched rational point; anything else needs `user`.
CurveParam parametrize(const PlaneCurve& C, const std::optional<std::array<Poly, 3>>& user = std::nullopt);

/// Composes the forms with s -> m0*s + m1*t, t -> m2*s + m3*t.
CurveParam reparametrize(const CurveParam& param, const std::array<BigRational, 4>& m);

long ord_along_curve(const SurfaceFunction& f, const PlaneCurve& C);

/// The line at position `skip` among the admissible members of Z, Y, X,
/// X+Y+Z, X+Y+2Z, ...: no avoided point on it, not proportional to C.
Poly uniformizer_line(const PlaneCurve& C, const std::vector<ProjPoint2>& avoid, int skip = 0);

/// x = C / L^{deg C} with L from uniformizer_line.
SurfaceFunction choose_uniformizer(const PlaneCurve& C, const std::vector<ProjPoint2>& avoid, int skip = 0);

/// g composed with the parametrization and refactored over Q into linear
/// factors plus irreducible-over-Q remainders. Throws RestrictionVanishes.
P1Function restrict_to_curve(const SurfaceFunction& g, const CurveParam& param);

struct LocalData {
  std::vector<long> a;
  std::vector<long> b;
  std::vector<P1Function> restricted;
  ProjPoint1 preimage;
  std::optional<ProjPoint2> site;

  size_t size() const { return a.size(); }
};

LocalData local_data(const std::vector<SurfaceFunction>& fs, const CurveParam& param, const ProjPoint2& P,
                     const SurfaceFunction& x);

/// Order at the preimage of P of D composed with C's parametrization.
long intersection_multiplicity(const CurveParam& C, const Poly& D, const ProjPoint2& P);

/// Distinct normalized factor polynomials of all functions, sorted.
std::vector<HomPoly> components(const std::vector<SurfaceFunction>& fs);

/// Points of C on some other component of the divisors, sorted.
/// Throws NonRationalSite.
std::vector<ProjPoint2> enumerate_sites(const std::vector<SurfaceFunction>& fs, const CurveParam& param);

/// Empty when every site of C is an ordinary double point of the divisor
/// with C as one branch; otherwise one message per violation.
std::vector<std::string> validate_normal_crossings(const std::vector<SurfaceFunction>& fs, const CurveParam& param);
/// The same test at a single point of C; a point on no other component passes.
std::vector<std::string> normal_crossing_issues_at(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                                                   const ProjPoint2& P);

/// Empty when every component through P is smooth there with pairwise
/// distinct tangent lines.
std::vector<std::string> validate_distinct_tangents(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P);

std::vector<PlaneCurve> components_through(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P);

/// Local data on the exceptional curve over P: (a, b) -> (a+b, a), with the
/// restrictions replaced by lead * (s/t)^{a}, at the parameter [0:1].
LocalData exceptional_data(const LocalData& data);

/// Everything a first-type computation along C needs: the parametrization,
/// the sites, and the uniformizer chosen to avoid them and the extra points.
struct CurveContext {
  CurveParam param;
  std::vector<ProjPoint2> sites;
  SurfaceFunction x;
};

/// With `require_sites` false, irrational sites leave `sites` empty and the
/// uniformizer avoids only `extra_avoid`.
CurveContext curve_context(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                           const std::vector<ProjPoint2>& extra_avoid = {}, int skip = 0,
                           bool require_sites = true);

}  // namespace locsym
