#include "locsym/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "locsym/error.hpp"
#include "locsym/riemann_sphere.hpp"

namespace locsym::numeric {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kTwoPiI{0.0, 2.0 * kPi};

double normalize_angle(double x) {
  x = std::fmod(x, 2 * kPi);
  return x < 0 ? x + 2 * kPi : x;
}

double distance_to_line(Complex p, Complex a, Complex b) {
  Complex d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0) return std::abs(p - a);
  double u = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + u * d));
}

double distance_to_arc(Complex p, const Segment& s) {
  double lo = std::min(s.start_angle, s.end_angle), hi = std::max(s.start_angle, s.end_angle);
  double best = std::min(std::abs(p - s.point(0)), std::abs(p - s.point(1)));
  Complex rel = p - s.center;
  if (std::abs(rel) == 0) return s.radius;
  if (hi - lo >= 2 * kPi || normalize_angle(std::arg(rel) - lo) <= hi - lo)
    best = std::min(best, std::abs(std::abs(rel) - s.radius));
  return best;
}

}  // namespace

Complex Segment::point(double u) const {
  if (kind == Kind::Line) return from + u * (to - from);
  return center + std::polar(radius, start_angle + u * (end_angle - start_angle));
}

Complex Segment::derivative(double u) const {
  if (kind == Kind::Line) return to - from;
  double theta = start_angle + u * (end_angle - start_angle);
  return Complex(0, end_angle - start_angle) * std::polar(radius, theta);
}

Segment Segment::reversed() const {
  Segment r = *this;
  std::swap(r.from, r.to);
  std::swap(r.start_angle, r.end_angle);
  return r;
}

ComplexPath ComplexPath::line(Complex a, Complex b) {
  ComplexPath p;
  p.segments_.push_back(Segment{Segment::Kind::Line, a, b, {}, 0, 0, 0});
  return p;
}

ComplexPath ComplexPath::arc(Complex center, double radius, double start, double end) {
  if (!(radius > 0)) throw Error(ErrorKind::ValidationError, "arc radius must be positive");
  ComplexPath p;
  p.segments_.push_back(Segment{Segment::Kind::Arc, {}, {}, center, radius, start, end});
  return p;
}

ComplexPath ComplexPath::circle(Complex center, double radius, double start) {
  return arc(center, radius, start, start + 2 * kPi);
}

ComplexPath& ComplexPath::then(const ComplexPath& next) {
  if (!segments_.empty() && std::abs(end() - next.start()) > 1e-9 * (1 + std::abs(end())))
    throw Error(ErrorKind::ValidationError, "path segments do not join");
  segments_.insert(segments_.end(), next.segments_.begin(), next.segments_.end());
  return *this;
}

ComplexPath ComplexPath::reversed() const {
  ComplexPath r;
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) r.segments_.push_back(it->reversed());
  return r;
}

Complex ComplexPath::start() const { return segments_.front().point(0); }
Complex ComplexPath::end() const { return segments_.back().point(1); }

void ComplexPath::check_clearance(const std::vector<Complex>& singularities, double clearance) const {
  for (const auto& seg : segments_)
    for (Complex z : singularities) {
      double d = seg.kind == Segment::Kind::Line ? distance_to_line(z, seg.from, seg.to) : distance_to_arc(z, seg);
      if (d < clearance)
        throw Error(ErrorKind::SingularityOnPath, "path passes within " + std::to_string(d) + " of the singularity (" +
                                                      std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    }
}

DlogForm::DlogForm(const P1Function& f) {
  if (f.space() != Space::Line) throw Error(ErrorKind::ValidationError, "numeric integrals need a function of (s,t)");
  for (const auto& fac : f.factors()) {
    if (fac.poly.degree() != 1)
      throw Error(ErrorKind::NonSplitFunction, "numeric integrals need linear factors, got " + fac.poly.to_string());
    // c_s * s + c_t * t vanishes at z = -c_t / c_s in the chart t = 1.
    BigRational cs = fac.poly.poly().coefficient({1, 0, 0}), ct = fac.poly.poly().coefficient({0, 1, 0});
    if (cs == 0) continue;  // the factor t has its zero at infinity
    BigRational root = -ct / cs;
    roots_.push_back(Complex(root.get_d(), 0.0));
    exponents_.push_back(static_cast<double>(fac.exponent));
  }
}

Complex DlogForm::operator()(Complex z) const {
  Complex sum = 0;
  for (size_t i = 0; i < roots_.size(); ++i) sum += exponents_[i] / (z - roots_[i]);
  return sum;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = x;
    weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
}

namespace {

struct Rule {
  std::vector<double> x, w;
  Rule() { gauss_legendre(16, x, w); }
};

const Rule& rule16() {
  static const Rule rule;
  return rule;
}

template <class F>
Complex gl16(const F& g, double a, double b) {
  const Rule& r = rule16();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Complex sum = 0;
  for (size_t i = 0; i < r.x.size(); ++i) sum += r.w[i] * g(mid + half * r.x[i]);
  return half * sum;
}

template <class F>
Complex adaptive(const F& g, double a, double b, Complex whole, double tol, int depth, double& error) {
  double mid = 0.5 * (a + b);
  Complex left = gl16(g, a, mid), right = gl16(g, mid, b);
  double diff = std::abs(left + right - whole);
  if (diff < tol) {
    error += diff;
    return left + right;
  }
  if (depth >= 20) throw Error(ErrorKind::NoConvergence, "adaptive quadrature exceeded 20 bisection levels");
  return adaptive(g, a, mid, left, tol / 2, depth + 1, error) + adaptive(g, mid, b, right, tol / 2, depth + 1, error);
}

}  // namespace

NumericResult dlog_integral(const P1Function& f, const ComplexPath& path, double tol) {
  DlogForm omega(f);
  path.check_clearance(omega.singularities());
  NumericResult result{0, 0};
  const double share = tol / static_cast<double>(path.segments().size());
  for (const auto& seg : path.segments()) {
    auto g = [&](double u) { return omega(seg.point(u)) * seg.derivative(u); };
    result.value += adaptive(g, 0.0, 1.0, gl16(g, 0.0, 1.0), share, 0, result.error_estimate);
  }
  return result;
}

NumericResult iterated_dlog_integral(const P1Function& f1, const P1Function& f2, const ComplexPath& path, double tol) {
  DlogForm w1(f1), w2(f2);
  path.check_clearance(w1.singularities());
  path.check_clearance(w2.singularities());
  const double n = static_cast<double>(path.segments().size());
  Complex y1 = 0, y2 = 0;
  double error = 0;
  for (const auto& seg : path.segments()) {
    auto rhs = [&](double u, Complex a, Complex& d1, Complex& d2) {
      Complex z = seg.point(u), dz = seg.derivative(u);
      d1 = w1(z) * dz;
      d2 = a * w2(z) * dz;
    };
    auto rk4 = [&](double u, double h, Complex& a, Complex& b) {
      Complex k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
      rhs(u, a, k1a, k1b);
      rhs(u + h / 2, a + h / 2 * k1a, k2a, k2b);
      rhs(u + h / 2, a + h / 2 * k2a, k3a, k3b);
      rhs(u + h, a + h * k3a, k4a, k4b);
      a += h / 6 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
      b += h / 6 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    };
    double u = 0, h = 1.0 / 64;
    while (u < 1.0) {
      h = std::min(h, 1.0 - u);
      Complex a_big = y1, b_big = y2, a_small = y1, b_small = y2;
      rk4(u, h, a_big, b_big);
      rk4(u, h / 2, a_small, b_small);
      rk4(u + h / 2, h / 2, a_small, b_small);
      double err = (std::abs(a_small - a_big) + std::abs(b_small - b_big)) / 15.0;
      double allowed = tol * h / n;
      if (err <= allowed) {
        u += h;
        // Richardson extrapolation of the accepted step.
        y1 = a_small + (a_small - a_big) / 15.0;
        y2 = b_small + (b_small - b_big) / 15.0;
        error += err;
      }
      double factor = err == 0 ? 2.0 : std::clamp(0.9 * std::pow(allowed / err, 0.2), 0.2, 2.0);
      h *= factor;
      if (h < 1e-12) throw Error(ErrorKind::NoConvergence, "iterated integral step size underflow");
    }
  }
  return NumericResult{y2, error};
}

ComplexPath bilocal_loop(Complex P, Complex Q, double radius) {
  Complex dir = (Q - P) / std::abs(Q - P);
  Complex R = P + radius * dir;
  ComplexPath gamma = ComplexPath::line(Q, R);
  ComplexPath loop = gamma;
  loop.then(ComplexPath::circle(P, radius, std::arg(dir))).then(gamma.reversed());
  return loop;
}

namespace {

ProjPoint1 affine_point(const BigRational& z) { return ProjPoint1(std::array<BigRational, 2>{z, BigRational(1)}); }

void add_row(NumericReport& r, std::string label, Complex numeric, Complex expected) {
  double d = std::abs(numeric - expected);
  r.rows.push_back(ComparisonRow{std::move(label), numeric, expected, d});
  r.max_deviation = std::max(r.max_deviation, d);
}

P1Function chart_function(const char* which) {
  // s/t and (s - t)/t: the affine functions z and z - 1.
  Poly s = Poly::variable(Space::Line, 0), t = Poly::variable(Space::Line, 1);
  if (std::string(which) == "z") return P1Function::unchecked(Space::Line, BigRational(1), {{s, 1}, {t, -1}});
  return P1Function::unchecked(Space::Line, BigRational(1), {{s - t, 1}, {t, -1}});
}

}  // namespace

NumericReport verify_bilocal(const P1Function& f1, const P1Function& f2, const BigRational& P, const BigRational& Q,
                             double radius, double tol, double accept) {
  NumericReport report;
  report.name = "verify-bilocal";
  BigRational exact = bilocal_symbol(f1, f2, affine_point(P), affine_point(Q));
  ComplexPath loop = bilocal_loop(Complex(P.get_d(), 0), Complex(Q.get_d(), 0), radius);
  NumericResult I = iterated_dlog_integral(f1, f2, loop, tol);
  add_row(report, "exp(I/2pi i)", std::exp(I.value / kTwoPiI), Complex(exact.get_d(), 0));
  report.pass = report.max_deviation < accept;
  return report;
}

NumericReport verify_residue_limit(const P1Function& f1, const P1Function& f2, const BigRational& P,
                                   const std::vector<double>& radii, double tol) {
  NumericReport report;
  report.name = "verify-limit";
  const ProjPoint1 p = affine_point(P);
  const double a1 = static_cast<double>(ord_at(f1, p)), a2 = static_cast<double>(ord_at(f2, p));
  const Complex target = kTwoPiI * kTwoPiI / 2.0 * a1 * a2;
  const Complex center(P.get_d(), 0);
  bool decreasing = true, tiny = true;
  double previous = INFINITY;
  for (double r : radii) {
    NumericResult I = iterated_dlog_integral(f1, f2, ComplexPath::circle(center, r), tol);
    add_row(report, "radius " + std::to_string(r), I.value, target);
    double d = report.rows.back().deviation;
    decreasing = decreasing && d < previous;
    tiny = tiny && d < 10 * tol;
    previous = d;
  }
  report.pass = !radii.empty() && (tiny || decreasing);
  return report;
}

NumericReport verify_homotopy(double tol, double accept) {
  NumericReport report;
  report.name = "verify-homotopy";
  P1Function f1 = chart_function("z"), f2 = chart_function("z-1");
  ComplexPath box = ComplexPath::line({2, 0}, {2, 1});
  box.then(ComplexPath::line({2, 1}, {-1, 1})).then(ComplexPath::line({-1, 1}, {-1, 0}));
  ComplexPath round = ComplexPath::arc({0.5, 0}, 1.5, 0.0, kPi);
  NumericResult a = iterated_dlog_integral(f1, f2, box, tol), b = iterated_dlog_integral(f1, f2, round, tol);
  add_row(report, "I(f1,f2) box vs arc", a.value, b.value);
  NumericResult c = iterated_dlog_integral(f2, f1, box, tol), d = iterated_dlog_integral(f2, f1, round, tol);
  add_row(report, "I(f2,f1) box vs arc", c.value, d.value);
  report.pass = report.max_deviation < accept;
  return report;
}

NumericReport verify_composition(double tol, double accept) {
  NumericReport report;
  report.name = "verify-composition";
  P1Function f1 = chart_function("z"), f2 = chart_function("z-1");
  ComplexPath g1 = ComplexPath::circle({0, 0}, 0.5, 0.0);
  ComplexPath g2 = ComplexPath::circle({1, 0}, 0.5, kPi);
  ComplexPath both = g1;
  both.then(g2);
  Complex lhs = iterated_dlog_integral(f1, f2, both, tol).value;
  Complex rhs = iterated_dlog_integral(f1, f2, g1, tol).value + iterated_dlog_integral(f1, f2, g2, tol).value +
                dlog_integral(f1, g1, tol).value * dlog_integral(f2, g2, tol).value;
  add_row(report, "I(g1 g2) - I(g1) - I(g2) - int_g1 w1 int_g2 w2", lhs - rhs, 0);
  report.pass = report.max_deviation < accept;
  return report;
}

NumericReport verify_commutator(double tol, double accept) {
  NumericReport report;
  report.name = "verify-commutator";
  P1Function f1 = chart_function("z"), f2 = chart_function("z-1");
  ComplexPath alpha = ComplexPath::circle({0, 0}, 0.5, 0.0);
  ComplexPath beta = ComplexPath::circle({1, 0}, 0.5, kPi);
  ComplexPath loop = alpha;
  loop.then(beta).then(alpha.reversed()).then(beta.reversed());
  Complex lhs = iterated_dlog_integral(f1, f2, loop, tol).value;
  Complex rhs = dlog_integral(f1, alpha, tol).value * dlog_integral(f2, beta, tol).value -
                dlog_integral(f2, alpha, tol).value * dlog_integral(f1, beta, tol).value;
  add_row(report, "I(commutator) vs determinant", lhs, rhs);
  report.pass = report.max_deviation < accept;
  return report;
}

}  // namespace locsym::numeric
