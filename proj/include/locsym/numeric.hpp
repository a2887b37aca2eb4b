#pragma once

#include <complex>
#include <string>
#include <vector>

#include "locsym/factored.hpp"

namespace locsym::numeric {

using Complex = std::complex<double>;

struct Segment {
  enum class Kind { Line, Arc } kind;
  Complex from, to;  // line endpoints
  Complex center;    // arc data; angles in radians, end < start for clockwise
  double radius = 0, start_angle = 0, end_angle = 0;

  Complex point(double u) const;
  Complex derivative(double u) const;
  Segment reversed() const;
};

/// Piecewise-smooth path parametrized segment by segment on [0,1].
class ComplexPath {
 public:
  static ComplexPath line(Complex a, Complex b);
  /// Full counterclockwise circle starting (and ending) at angle `start`.
  static ComplexPath circle(Complex center, double radius, double start = 0.0);
  static ComplexPath arc(Complex center, double radius, double start, double end);

  ComplexPath& then(const ComplexPath& next);
  ComplexPath reversed() const;
  Complex start() const;
  Complex end() const;
  const std::vector<Segment>& segments() const { return segments_; }

  /// Throws SingularityOnPath if some point of the path comes closer than
  /// `clearance` to one of the points.
  void check_clearance(const std::vector<Complex>& singularities, double clearance = 1e-6) const;

 private:
  std::vector<Segment> segments_;
};

struct NumericResult {
  Complex value;
  double error_estimate = 0;
};

/// df/f in the affine coordinate z = s/t of a split function.
class DlogForm {
 public:
  explicit DlogForm(const P1Function& f);
  Complex operator()(Complex z) const;
  /// Finite zeros and poles.
  const std::vector<Complex>& singularities() const { return roots_; }

 private:
  std::vector<Complex> roots_;
  std::vector<double> exponents_;
};

/// Gauss-Legendre nodes and weights of order n on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

NumericResult dlog_integral(const P1Function& f, const ComplexPath& path, double tol = 1e-8);

/// Integral of df1/f1 followed by df2/f2 over 0 < t1 < t2 < 1.
NumericResult iterated_dlog_integral(const P1Function& f1, const P1Function& f2, const ComplexPath& path,
                                     double tol = 1e-8);

struct ComparisonRow {
  std::string label;
  Complex numeric;
  Complex expected;
  double deviation = 0;
};

struct NumericReport {
  std::string name;
  std::vector<ComparisonRow> rows;
  double max_deviation = 0;
  bool pass = false;
};

/// Loop from Q to a circle of the given radius around P, once around, back.
ComplexPath bilocal_loop(Complex P, Complex Q, double radius);

/// exp of the loop integral over 2 pi i against the exact bi-local symbol.
NumericReport verify_bilocal(const P1Function& f1, const P1Function& f2, const BigRational& P, const BigRational& Q,
                             double radius, double tol = 1e-8, double accept = 1e-6);

/// Iterated integrals over shrinking circles around P against
/// (2 pi i)^2 a1 a2 / 2. Passes when every deviation is below 10*tol or the
/// deviations decrease strictly.
NumericReport verify_residue_limit(const P1Function& f1, const P1Function& f2, const BigRational& P,
                                   const std::vector<double>& radii, double tol = 1e-8);

/// Homotopy invariance, path composition and the commutator formula for
/// f1 = s/t and f2 = (s-t)/t around the punctures 0 and 1.
NumericReport verify_homotopy(double tol = 1e-8, double accept = 1e-6);
NumericReport verify_composition(double tol = 1e-8, double accept = 1e-6);
NumericReport verify_commutator(double tol = 1e-8, double accept = 1e-6);

}  // namespace locsym::numeric
