#include "locsym/riemann_sphere.hpp"

#include <map>
#include <set>

#include "locsym/error.hpp"
#include "locsym/poly_algorithms.hpp"

namespace locsym {

Poly linear_form_through(const ProjPoint1& P) {
  Poly l = Poly::monomial(Space::Line, {1, 0, 0}, BigRational(P[1])) -
           Poly::monomial(Space::Line, {0, 1, 0}, BigRational(P[0]));
  return normalize(l);
}

namespace {

void require_line(const P1Function& f) {
  if (f.space() != Space::Line) throw Error(ErrorKind::ValidationError, "expected a function of (s,t)");
}

}  // namespace

long ord_at(const P1Function& f, const ProjPoint1& P) {
  require_line(f);
  long total = 0;
  for (const auto& fac : f.factors()) total += fac.exponent * order_at(fac.poly.poly(), P);
  return total;
}

BigRational unit_value(const P1Function& f, const ProjPoint1& P) {
  require_line(f);
  const Poly l = linear_form_through(P);
  const auto coords = P.rational_coords();
  BigRational value = f.constant();
  long total = 0;
  for (const auto& fac : f.factors()) {
    Poly q = fac.poly.poly(), next(Space::Line);
    int k = 0;
    while (q.divide_exact(l, next)) {
      q = next;
      ++k;
    }
    total += fac.exponent * k;
    value *= locsym::pow(q.evaluate(coords), fac.exponent);
  }
  if (total != 0)
    throw Error(ErrorKind::NotAUnit, "function has order " + std::to_string(total) + " at " + P.to_string());
  return value;
}

BigRational tame_symbol(const P1Function& f, const P1Function& g, const ProjPoint1& P) {
  const long a = ord_at(f, P), b = ord_at(g, P);
  return sign_power(a * b) * unit_value(f.pow(b) * g.pow(-a), P);
}

BigRational bilocal_symbol(const P1Function& f1, const P1Function& f2, const ProjPoint1& P, const ProjPoint1& Q) {
  if (P == Q) throw Error(ErrorKind::CoincidentPoints, "bilocal symbol needs P != Q, both are " + P.to_string());
  const auto q = Q.rational_coords();
  for (const P1Function* f : {&f1, &f2})
    for (const auto& fac : f->factors())
      if (fac.poly.poly().evaluate(q) == 0)
        throw Error(ErrorKind::BasePointOnDivisor,
                    "base point " + Q.to_string() + " lies on the zero set of " + fac.poly.to_string());
  const long a1 = ord_at(f1, P), a2 = ord_at(f2, P);
  P1Function h = f1.pow(a2) * f2.pow(-a1);
  return sign_power(a1 * a2) * unit_value(h, P) / h.evaluate(q);
}

Divisor1 divisor(const P1Function& f) {
  require_line(f);
  std::map<ProjPoint1, long> points;
  for (const auto& fac : f.factors()) {
    if (fac.poly.degree() != 1)
      throw Error(ErrorKind::NonSplitFunction, "factor " + fac.poly.to_string() + " is not linear");
    for (const auto& [pt, m] : rational_roots(fac.poly).roots) points[pt] += m * fac.exponent;
  }
  Divisor1 out;
  for (const auto& [pt, m] : points)
    if (m != 0) out.emplace_back(pt, m);
  return out;
}

ReciprocityReport check_weil(const P1Function& f, const P1Function& g) {
  ReciprocityReport report;
  report.law = "weil";
  std::set<ProjPoint1> sites;
  for (const auto& [pt, m] : divisor(f)) sites.insert(pt);
  for (const auto& [pt, m] : divisor(g)) sites.insert(pt);
  for (const auto& P : sites) report.add(P.to_string(), tame_symbol(f, g, P));
  report.finish();
  return report;
}

P1Function unit_part(const P1Function& f, const ProjPoint1& P) {
  const long b = ord_at(f, P);
  if (b == 0) return f;
  Poly l = Poly::monomial(Space::Line, {1, 0, 0}, BigRational(P[0])) +
           Poly::monomial(Space::Line, {0, 1, 0}, BigRational(P[1]));
  return f * P1Function::unchecked(Space::Line, BigRational(1), {{linear_form_through(P), -b}, {l, b}});
}

}  // namespace locsym
