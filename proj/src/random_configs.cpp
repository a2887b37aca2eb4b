#include "locsym/random_configs.hpp"

#include <algorithm>

#include "locsym/error.hpp"
#include "locsym/riemann_sphere.hpp"

namespace locsym {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(Rng& rng, long bound) {
  long v = 0;
  while (v == 0) v = uniform(rng, -bound, bound);
  return v;
}

Poly line(long a, long b, long c) {
  return Poly::monomial(Space::Plane, {1, 0, 0}, BigRational(a)) + Poly::monomial(Space::Plane, {0, 1, 0}, BigRational(b)) +
         Poly::monomial(Space::Plane, {0, 0, 1}, BigRational(c));
}

void add_distinct(std::vector<Poly>& lines, const Poly& l) {
  if (l.is_zero()) return;
  Poly n = normalize(l);
  if (std::find(lines.begin(), lines.end(), n) == lines.end()) lines.push_back(n);
}

std::vector<SurfaceFunction> random_functions(Rng& rng, const std::vector<Poly>& lines, int count) {
  std::vector<SurfaceFunction> fs;
  while (static_cast<int>(fs.size()) < count) {
    std::vector<std::pair<Poly, long>> factors;
    long degree = 0;
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
      long e = uniform(rng, -1, 1);
      if (e == 0) continue;
      factors.emplace_back(lines[i], e);
      degree += e;
    }
    if (degree != 0) factors.emplace_back(lines.back(), -degree);
    if (factors.empty()) continue;
    fs.push_back(SurfaceFunction::make(Space::Plane, BigRational(nonzero(rng, 5)), std::move(factors)));
  }
  return fs;
}

}  // namespace

P1Function random_split_function(Rng& rng, int max_factors, int coef) {
  std::vector<std::pair<Poly, long>> factors;
  const int n = static_cast<int>(uniform(rng, 0, max_factors - 1));
  long degree = 0;
  for (int i = 0; i < n; ++i) {
    long a = uniform(rng, -coef, coef), b = uniform(rng, -coef, coef);
    if (a == 0 && b == 0) continue;
    long e = nonzero(rng, 3);
    factors.emplace_back(Poly::monomial(Space::Line, {1, 0, 0}, BigRational(a)) +
                             Poly::monomial(Space::Line, {0, 1, 0}, BigRational(b)),
                         e);
    degree += e;
  }
  if (degree != 0) factors.emplace_back(Poly::variable(Space::Line, 1), -degree);
  return P1Function::make(Space::Line, BigRational(nonzero(rng, coef)), std::move(factors));
}

Arrangement random_arrangement(Rng& rng, int line_count, int function_count, int coef) {
  std::vector<Poly> lines;
  while (static_cast<int>(lines.size()) < line_count)
    add_distinct(lines, line(uniform(rng, -coef, coef), uniform(rng, -coef, coef), uniform(rng, -coef, coef)));
  auto fs = random_functions(rng, lines, function_count);
  const auto& first = fs.front().factors();
  const Poly& base = first[uniform(rng, 0, static_cast<long>(first.size()) - 1)].poly.poly();
  return Arrangement{lines, fs, PlaneCurve(base)};
}

Arrangement random_arrangement_through(Rng& rng, const ProjPoint2& P, int through_count, int other_count,
                                       int function_count, int coef) {
  std::vector<Poly> lines;
  const auto p = P.rational_coords();
  while (static_cast<int>(lines.size()) < through_count) {
    // Random line with P on it: pick a normal vector orthogonal to P.
    long a = uniform(rng, -coef, coef), b = uniform(rng, -coef, coef), c = uniform(rng, -coef, coef);
    Poly l = line(a, b, c);
    BigRational v = l.evaluate(p);
    if (v != 0) {
      // Shift along the first nonzero coordinate of P to pass through it.
      int k = P[0] != 0 ? 0 : (P[1] != 0 ? 1 : 2);
      Exponent e{0, 0, 0};
      e[k] = 1;
      l -= Poly::monomial(Space::Plane, e, v / p[k]);
    }
    add_distinct(lines, l);
  }
  const size_t through_end = lines.size();
  while (lines.size() < through_end + static_cast<size_t>(other_count)) {
    Poly l = line(uniform(rng, -coef, coef), uniform(rng, -coef, coef), uniform(rng, -coef, coef));
    if (l.is_zero() || l.evaluate(p) == 0) continue;
    add_distinct(lines, l);
  }
  std::shuffle(lines.begin(), lines.end(), rng);
  auto fs = random_functions(rng, lines, function_count);
  for (const auto& l : lines)
    if (l.evaluate(p) == 0) return Arrangement{lines, fs, PlaneCurve(l)};
  throw Error(ErrorKind::InternalInconsistency, "no generated line passes through the point");
}

LocalData random_local_data(Rng& rng, int n, int range) {
  LocalData data;
  data.preimage = ProjPoint1{0, 1};
  const Poly s = Poly::variable(Space::Line, 0), t = Poly::variable(Space::Line, 1);
  for (int k = 0; k < n; ++k) {
    data.a.push_back(uniform(rng, -range, range));
    const long b = uniform(rng, -range, range);
    data.b.push_back(b);
    long r1 = 0, r2 = 0;
    while (r1 == 0 || r1 == -1) r1 = nonzero(rng, 9);
    while (r2 == 0 || r2 == -1 || r2 == r1) r2 = nonzero(rng, 9);
    BigRational c = make_rational(nonzero(rng, 9), uniform(rng, 1, 9));
    data.restricted.push_back(P1Function::unchecked(
        Space::Line, c, {{s, b}, {t, -b}, {s + t * BigRational(r1), 1}, {s + t * BigRational(r2), -1}}));
  }
  return data;
}

}  // namespace locsym
