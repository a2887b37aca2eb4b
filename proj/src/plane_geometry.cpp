#include "locsym/plane_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>
#include <set>

#include "locsym/error.hpp"
#include "locsym/poly_algorithms.hpp"
#include "locsym/riemann_sphere.hpp"

namespace locsym {

namespace {

HomPoly checked_curve_poly(const Poly& p, bool trust) {
  if (p.space() != Space::Plane) throw Error(ErrorKind::ValidationError, "a plane curve needs X,Y,Z");
  HomPoly h = normalize(HomPoly(p));
  if (h.degree() < 1) throw Error(ErrorKind::ValidationError, "a plane curve needs positive degree");
  if (h.degree() > 3) {
    if (!trust) throw Error(ErrorKind::DegreeTooHigh, "curve " + h.to_string() + " has degree > 3 and is not trusted");
  } else if (!trust && !low_degree_irreducible(h)) {
    throw Error(ErrorKind::ValidationError, "curve " + h.to_string() + " is reducible over Q");
  }
  return h;
}

std::array<BigRational, 3> gradient(const Poly& p, const ProjPoint2& P) {
  auto c = P.rational_coords();
  return {p.derivative(0).evaluate(c), p.derivative(1).evaluate(c), p.derivative(2).evaluate(c)};
}

bool proportional(const std::array<BigRational, 3>& u, const std::array<BigRational, 3>& v) {
  return u[0] * v[1] == u[1] * v[0] && u[0] * v[2] == u[2] * v[0] && u[1] * v[2] == u[2] * v[1];
}

Poly line_poly(const BigRational& a, const BigRational& b, const BigRational& c) {
  return Poly::monomial(Space::Plane, {1, 0, 0}, a) + Poly::monomial(Space::Plane, {0, 1, 0}, b) +
         Poly::monomial(Space::Plane, {0, 0, 1}, c);
}

}  // namespace

PlaneCurve::PlaneCurve(const Poly& p, bool trust_irreducible) : poly_(checked_curve_poly(p, trust_irreducible)) {}

bool PlaneCurve::contains(const ProjPoint2& P) const { return evaluate_at(poly_.poly(), P) == 0; }

bool PlaneCurve::smooth_at(const ProjPoint2& P) const {
  auto g = gradient(poly_.poly(), P);
  return g[0] != 0 || g[1] != 0 || g[2] != 0;
}

CurveParam::CurveParam(PlaneCurve curve, std::array<Poly, 3> forms) : curve_(std::move(curve)), forms_(std::move(forms)) {
  validate_param_forms(forms_);
  int degree = -1;
  for (const auto& f : forms_) degree = std::max(degree, f.total_degree());
  if (degree != curve_.degree())
    throw Error(ErrorKind::InvalidParametrization, "parametrization degree " + std::to_string(degree) +
                                                       " differs from curve degree " + std::to_string(curve_.degree()));
  if (!curve_.poly().poly().compose(forms_).is_zero())
    throw Error(ErrorKind::InvalidParametrization, "forms do not lie on " + curve_.to_string());
}

ProjPoint2 CurveParam::point_at(const ProjPoint1& p) const {
  auto c = p.rational_coords();
  std::array<BigRational, 3> v{forms_[0].evaluate(c), forms_[1].evaluate(c), forms_[2].evaluate(c)};
  return ProjPoint2(v);
}

ProjPoint1 CurveParam::preimage(const ProjPoint2& P) const {
  if (!curve_.contains(P)) throw Error(ErrorKind::PointNotOnCurve, P.to_string() + " is not on " + curve_.to_string());
  Poly g(Space::Line);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Poly cross = forms_[i] * BigRational(P[j]) - forms_[j] * BigRational(P[i]);
      if (cross.is_zero()) continue;
      g = g.is_zero() ? normalize(cross) : binary_gcd(g, cross);
    }
  if (g.is_zero() || g.total_degree() == 0)
    throw Error(ErrorKind::PointNotOnCurve, P.to_string() + " is not in the image of " + to_string());
  RationalRoots roots = rational_roots(HomPoly(g));
  if (roots.roots.size() != 1 || roots.nonsplit)
    throw Error(ErrorKind::NonUniquePreimage, "parametrization is not injective over " + P.to_string());
  return roots.roots.front().first;
}

std::string CurveParam::to_string() const {
  return "[" + forms_[0].to_string() + " : " + forms_[1].to_string() + " : " + forms_[2].to_string() + "]";
}

std::optional<ProjPoint2> find_rational_point(const HomPoly& conic, int max_height) {
  for (int h = 1; h <= max_height; ++h) {
    std::vector<std::array<int, 3>> candidates;
    for (int x = 0; x <= h; ++x)
      for (int y = -h; y <= h; ++y)
        for (int z = -h; z <= h; ++z) {
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != h) continue;
          // First nonzero coordinate positive.
          if (x == 0 && (y < 0 || (y == 0 && z <= 0))) continue;
          if (std::gcd(std::gcd(x, std::abs(y)), std::abs(z)) != 1) continue;
          candidates.push_back({x, y, z});
        }
    auto key = [](const std::array<int, 3>& c) {
      int nonzero = (c[0] != 0) + (c[1] != 0) + (c[2] != 0);
      return std::make_tuple(nonzero, -std::abs(c[0]), -std::abs(c[1]), -std::abs(c[2]), c[1] < 0, c[2] < 0);
    };
    std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    for (const auto& c : candidates) {
      ProjPoint2 P{c[0], c[1], c[2]};
      if (evaluate_at(conic.poly(), P) == 0) return P;
    }
  }
  return std::nullopt;
}

namespace {

std::array<Poly, 3> tidy_forms(std::array<Poly, 3> forms) {
  BigInt g = 0, l = 1;
  const Poly* first = nullptr;
  for (const auto& f : forms)
    for (const auto& [e, c] : f.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
  for (const auto& f : forms)
    if (!f.is_zero()) {
      first = &f;
      break;
    }
  BigRational scale = make_rational(l, g);
  if (first && first->leading_coefficient() < 0) scale = -scale;
  for (auto& f : forms) f *= scale;
  return forms;
}

std::array<Poly, 3> line_forms(const HomPoly& line) {
  std::array<BigRational, 3> coef;
  for (int i = 0; i < 3; ++i) {
    Exponent e{0, 0, 0};
    e[i] = 1;
    coef[i] = line.poly().coefficient(e);
  }
  int solved = 2;
  while (coef[solved] == 0) --solved;
  std::array<Poly, 3> forms{Poly(Space::Line), Poly(Space::Line), Poly(Space::Line)};
  int next = 0;
  for (int i = 0; i < 3; ++i)
    if (i != solved) forms[i] = Poly::variable(Space::Line, next++);
  for (int i = 0; i < 3; ++i)
    if (i != solved) forms[solved] -= forms[i] * (coef[i] / coef[solved]);
  return forms;
}

std::array<Poly, 3> conic_forms(const HomPoly& conic, const ProjPoint2& O) {
  const Poly& q = conic.poly();
  int k = 0;
  while (O[k] == 0) ++k;
  std::array<Poly, 3> w{Poly(Space::Line), Poly(Space::Line), Poly(Space::Line)};
  int next = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) w[i] = Poly::variable(Space::Line, next++);
  std::array<Poly, 3> o{Poly(Space::Line, BigRational(O[0])), Poly(Space::Line, BigRational(O[1])),
                        Poly(Space::Line, BigRational(O[2]))};
  std::array<Poly, 3> sum{o[0] + w[0], o[1] + w[1], o[2] + w[2]};
  Poly qw = q.compose(w);
  // 2B(O,w) = q(O+w) - q(O) - q(w), and q(O) = 0.
  Poly two_b = q.compose(sum) - qw;
  std::array<Poly, 3> forms;
  for (int i = 0; i < 3; ++i) forms[i] = qw * o[i] - two_b * w[i];
  return forms;
}

}  // namespace

CurveParam parametrize(const PlaneCurve& C, const std::optional<std::array<Poly, 3>>& user) {
  if (user) return CurveParam(C, *user);
  if (C.degree() == 1) return CurveParam(C, tidy_forms(line_forms(C.poly())));
  if (C.degree() == 2) {
    auto O = find_rational_point(C.poly());
    if (!O) throw Error(ErrorKind::NoRationalPointFound, "no rational point of height <= 20 on " + C.to_string());
    return CurveParam(C, tidy_forms(conic_forms(C.poly(), *O)));
  }
  throw Error(ErrorKind::UnsupportedDegree,
              "curve " + C.to_string() + " has degree " + std::to_string(C.degree()) + "; supply a parametrization");
}

CurveParam reparametrize(const CurveParam& param, const std::array<BigRational, 4>& m) {
  if (m[0] * m[3] - m[1] * m[2] == 0) throw Error(ErrorKind::InvalidParametrization, "singular change of parameter");
  std::array<Poly, 2> images{Poly::monomial(Space::Line, {1, 0, 0}, m[0]) + Poly::monomial(Space::Line, {0, 1, 0}, m[1]),
                             Poly::monomial(Space::Line, {1, 0, 0}, m[2]) + Poly::monomial(Space::Line, {0, 1, 0}, m[3])};
  std::array<Poly, 3> forms;
  for (int i = 0; i < 3; ++i) forms[i] = param.forms()[i].compose(images);
  return CurveParam(param.curve(), forms);
}

long ord_along_curve(const SurfaceFunction& f, const PlaneCurve& C) { return f.exponent_of(C.poly().poly()); }

Poly uniformizer_line(const PlaneCurve& C, const std::vector<ProjPoint2>& avoid, int skip) {
  // Every X + jY + kZ passes through [j:-1:0]; if that point is avoided the
  // family never yields a line, so move on to the next j.
  long j = 1;
  while (std::find(avoid.begin(), avoid.end(), ProjPoint2{j, -1, 0}) != avoid.end()) ++j;
  for (long index = 0;; ++index) {
    Poly L = index == 0   ? Poly::variable(Space::Plane, 2)
             : index == 1 ? Poly::variable(Space::Plane, 1)
             : index == 2 ? Poly::variable(Space::Plane, 0)
                          : line_poly(BigRational(1), BigRational(j), BigRational(index - 2));
    if (C.degree() == 1 && normalize(L) == C.poly().poly()) continue;
    bool hits = std::any_of(avoid.begin(), avoid.end(), [&](const ProjPoint2& P) { return evaluate_at(L, P) == 0; });
    if (hits) continue;
    if (skip-- == 0) return L;
  }
}

SurfaceFunction choose_uniformizer(const PlaneCurve& C, const std::vector<ProjPoint2>& avoid, int skip) {
  Poly L = uniformizer_line(C, avoid, skip);
  return SurfaceFunction::unchecked(Space::Plane, BigRational(1), {{C.poly().poly(), 1}, {L, -C.degree()}});
}

P1Function restrict_to_curve(const SurfaceFunction& g, const CurveParam& param) {
  std::vector<std::pair<Poly, long>> factors;
  BigRational constant = g.constant();
  for (const auto& fac : g.factors()) {
    auto r = substitute_param(fac.poly, param.forms());
    if (!r)
      throw Error(ErrorKind::RestrictionVanishes,
                  "factor " + fac.poly.to_string() + " vanishes identically on " + param.curve().to_string());
    Poly rest = r->poly();
    for (const auto& [pt, m] : rational_roots(*r).roots) {
      Poly l = linear_form_through(pt);
      for (int i = 0; i < m; ++i) {
        Poly q(Space::Line);
        if (!rest.divide_exact(l, q)) throw Error(ErrorKind::InternalInconsistency, "root does not divide");
        rest = q;
      }
      factors.emplace_back(l, m * fac.exponent);
    }
    factors.emplace_back(rest, fac.exponent);
  }
  return P1Function::unchecked(Space::Line, constant, std::move(factors));
}

LocalData local_data(const std::vector<SurfaceFunction>& fs, const CurveParam& param, const ProjPoint2& P,
                     const SurfaceFunction& x) {
  const PlaneCurve& C = param.curve();
  if (!C.contains(P)) throw Error(ErrorKind::PointNotOnCurve, P.to_string() + " is not on " + C.to_string());
  if (x.exponent_of(C.poly().poly()) != 1)
    throw Error(ErrorKind::ValidationError, "uniformizer must vanish to order 1 along " + C.to_string());
  for (const auto& fac : x.factors()) {
    if (fac.poly == C.poly()) continue;
    if (evaluate_at(fac.poly.poly(), P) == 0)
      throw Error(ErrorKind::UniformizerThroughPoint,
                  "uniformizer component " + fac.poly.to_string() + " passes through " + P.to_string());
  }
  LocalData data;
  data.preimage = param.preimage(P);
  data.site = P;
  for (const auto& f : fs) {
    const long a = ord_along_curve(f, C);
    P1Function r = restrict_to_curve(x.pow(-a) * f, param);
    data.a.push_back(a);
    data.b.push_back(ord_at(r, data.preimage));
    data.restricted.push_back(std::move(r));
  }
  return data;
}

long intersection_multiplicity(const CurveParam& C, const Poly& D, const ProjPoint2& P) {
  ProjPoint1 p = C.preimage(P);
  auto r = substitute_param(HomPoly(D), C.forms());
  if (!r) throw Error(ErrorKind::ValidationError, D.to_string() + " contains the curve " + C.curve().to_string());
  return order_at(r->poly(), p);
}

std::vector<HomPoly> components(const std::vector<SurfaceFunction>& fs) {
  std::set<HomPoly> out;
  for (const auto& f : fs)
    for (const auto& fac : f.factors()) out.insert(fac.poly);
  return {out.begin(), out.end()};
}

std::vector<ProjPoint2> enumerate_sites(const std::vector<SurfaceFunction>& fs, const CurveParam& param) {
  std::set<ProjPoint2> sites;
  for (const auto& comp : components(fs)) {
    if (comp == param.curve().poly()) continue;
    auto r = substitute_param(comp, param.forms());
    if (!r)
      throw Error(ErrorKind::RestrictionVanishes,
                  "component " + comp.to_string() + " contains " + param.curve().to_string());
    RationalRoots roots = rational_roots(*r);
    if (roots.nonsplit)
      throw Error(ErrorKind::NonRationalSite, "component " + comp.to_string() + " meets " + param.curve().to_string() +
                                                  " at irrational points");
    for (const auto& [pt, m] : roots.roots) sites.insert(param.point_at(pt));
  }
  return {sites.begin(), sites.end()};
}

std::vector<std::string> normal_crossing_issues_at(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                                                   const ProjPoint2& P) {
  std::vector<std::string> issues;
  const PlaneCurve& C = param.curve();
  const std::string at = " at " + P.to_string();
  if (!C.smooth_at(P)) issues.push_back(C.to_string() + " is singular" + at);
  std::vector<HomPoly> others;
  for (const auto& comp : components(fs))
    if (!(comp == C.poly()) && evaluate_at(comp.poly(), P) == 0) others.push_back(comp);
  if (others.empty()) return issues;
  if (others.size() > 1) {
    std::string names;
    for (const auto& o : others) names += ", " + o.to_string();
    issues.push_back(std::to_string(others.size() + 1) + " components meet" + at + " (" + C.to_string() + names + ")");
    return issues;
  }
  const HomPoly& D = others.front();
  auto g = gradient(D.poly(), P);
  if (g[0] == 0 && g[1] == 0 && g[2] == 0) {
    issues.push_back(D.to_string() + " is singular" + at);
    return issues;
  }
  const long m = intersection_multiplicity(param, D.poly(), P);
  if (m != 1)
    issues.push_back(C.to_string() + " and " + D.to_string() + " meet with multiplicity " + std::to_string(m) + at);
  return issues;
}

std::vector<std::string> validate_normal_crossings(const std::vector<SurfaceFunction>& fs, const CurveParam& param) {
  std::vector<std::string> issues;
  for (const auto& P : enumerate_sites(fs, param))
    for (auto& issue : normal_crossing_issues_at(fs, param, P)) issues.push_back(std::move(issue));
  return issues;
}

std::vector<PlaneCurve> components_through(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P) {
  std::vector<PlaneCurve> out;
  for (const auto& comp : components(fs))
    if (evaluate_at(comp.poly(), P) == 0) out.emplace_back(comp.poly(), true);
  return out;
}

std::vector<std::string> validate_distinct_tangents(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P) {
  std::vector<std::string> issues;
  const auto through = components_through(fs, P);
  std::vector<std::array<BigRational, 3>> grads;
  for (const auto& C : through) {
    auto g = gradient(C.poly().poly(), P);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) issues.push_back(C.to_string() + " is singular at " + P.to_string());
    grads.push_back(g);
  }
  for (size_t i = 0; i < through.size(); ++i)
    for (size_t j = i + 1; j < through.size(); ++j)
      if (proportional(grads[i], grads[j]))
        issues.push_back(through[i].to_string() + " and " + through[j].to_string() + " share a tangent at " +
                         P.to_string());
  return issues;
}

LocalData exceptional_data(const LocalData& data) {
  LocalData out;
  out.preimage = ProjPoint1{0, 1};
  out.site = data.site;
  const P1Function s_over_t = P1Function::unchecked(
      Space::Line, BigRational(1), {{Poly::variable(Space::Line, 0), 1}, {Poly::variable(Space::Line, 1), -1}});
  for (size_t k = 0; k < data.size(); ++k) {
    BigRational lead = unit_value(unit_part(data.restricted[k], data.preimage), data.preimage);
    out.a.push_back(data.a[k] + data.b[k]);
    out.b.push_back(data.a[k]);
    out.restricted.push_back(P1Function::constant(Space::Line, lead) * s_over_t.pow(data.a[k]));
  }
  return out;
}

CurveContext curve_context(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                           const std::vector<ProjPoint2>& extra_avoid, int skip, bool require_sites) {
  std::vector<ProjPoint2> sites;
  try {
    sites = enumerate_sites(fs, param);
  } catch (const Error& e) {
    if (require_sites || e.kind() != ErrorKind::NonRationalSite) throw;
  }
  std::vector<ProjPoint2> avoid = sites;
  avoid.insert(avoid.end(), extra_avoid.begin(), extra_avoid.end());
  SurfaceFunction x = choose_uniformizer(param.curve(), avoid, skip);
  return CurveContext{param, std::move(sites), std::move(x)};
}

}  // namespace locsym
