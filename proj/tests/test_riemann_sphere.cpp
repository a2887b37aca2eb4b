#include "helpers.hpp"

#include "locsym/poly_algorithms.hpp"
#include "locsym/random_configs.hpp"
#include "locsym/riemann_sphere.hpp"

using namespace testing;

namespace {

ProjPoint1 pt(long u, long v) { return ProjPoint1{u, v}; }

using Fraction = std::pair<Poly, Poly>;

Fraction expand(const P1Function& f) {
  Poly num(Space::Line, f.constant()), den(Space::Line, BigRational(1));
  for (const auto& fac : f.factors()) {
    Poly p = fac.poly.poly().pow(static_cast<unsigned>(std::abs(fac.exponent)));
    if (fac.exponent > 0)
      num = num * p;
    else
      den = den * p;
  }
  return {num, den};
}

Fraction power(const Fraction& f, long e) {
  unsigned k = static_cast<unsigned>(std::abs(e));
  return e >= 0 ? Fraction{f.first.pow(k), f.second.pow(k)} : Fraction{f.second.pow(k), f.first.pow(k)};
}

// Works on expanded numerators and denominators, strips the linear form
// through P by exact division, then evaluates.
BigRational oracle_tame(const P1Function& f, const P1Function& g, const ProjPoint1& P) {
  long a = ord_at(f, P), b = ord_at(g, P);
  Fraction x = power(expand(f), b), y = power(expand(g), -a);
  Poly num = x.first * y.first, den = x.second * y.second;
  Poly l = Poly::variable(Space::Line, 0) * BigRational(P[1]) - Poly::variable(Space::Line, 1) * BigRational(P[0]);
  Poly qn(Space::Line), qd(Space::Line);
  while (num.divide_exact(l, qn) && den.divide_exact(l, qd)) {
    num = qn;
    den = qd;
  }
  return BigRational(sign_power(a * b)) * evaluate_at(num, P) / evaluate_at(den, P);
}

ProjPoint1 random_point(std::mt19937_64& rng) {
  long u = uniform(rng, -9, 9), v = uniform(rng, -9, 9);
  if (u == 0 && v == 0) v = 1;
  return ProjPoint1{u, v};
}

}  // namespace

TEST_CASE("ord_at") {
  CHECK(ord_at(p1("s/t"), pt(0, 1)) == 1);
  CHECK(ord_at(p1("s/t"), pt(1, 0)) == -1);
  CHECK(ord_at(p1("s^2*(s - t)/t^3"), pt(1, 1)) == 1);
  CHECK(ord_at(p1("s^2*(s - t)/t^3"), pt(2, 1)) == 0);
}

TEST_CASE("unit_value") {
  CHECK(unit_value(p1("(s - t)/t"), pt(2, 1)) == 1);
  CHECK(unit_value(p1("(s + 2t)/t"), pt(0, 1)) == 2);
  CHECK(unit_value(p1("s/(s + t)"), pt(1, 0)) == 1);
  CHECK(error_kind([] { unit_value(p1("s/t"), ProjPoint1{0, 1}); }) == ErrorKind::NotAUnit);
}

TEST_CASE("tame_symbol examples") {
  CHECK(tame_symbol(p1("s/t"), p1("s/t"), pt(0, 1)) == -1);
  CHECK(tame_symbol(p1("s/t"), p1("(t - s)/t"), pt(0, 1)) == 1);
  CHECK(tame_symbol(p1("s^2*(s - t)/t^3"), p1("s^3/t^3"), pt(0, 1)) == -1);
}

TEST_CASE("bilocal_symbol examples") {
  CHECK(bilocal_symbol(p1("s/t"), p1("s/t"), pt(0, 1), pt(2, 1)) == -1);
  CHECK(bilocal_symbol(p1("s/t"), p1("(s - t)/t"), pt(0, 1), pt(1, 2)) == q(1, 2));
  CHECK(bilocal_symbol(p1("s/t"), p1("5"), pt(0, 1), pt(3, 1)) == 1);
  CHECK(bilocal_symbol(p1("s/t"), p1("5"), pt(1, 0), pt(3, 1)) == 1);
  CHECK(error_kind([] { bilocal_symbol(p1("s/t"), p1("s/t"), ProjPoint1{0, 1}, ProjPoint1{0, 1}); }) ==
        ErrorKind::CoincidentPoints);
  CHECK(error_kind([] { bilocal_symbol(p1("s/t"), p1("(s-t)/t"), ProjPoint1{0, 1}, ProjPoint1{1, 1}); }) ==
        ErrorKind::BasePointOnDivisor);
}

TEST_CASE("divisor") {
  Divisor1 d = divisor(p1("s/t"));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == std::pair{pt(0, 1), 1L});
  CHECK(d[1] == std::pair{pt(1, 0), -1L});
  Divisor1 d2 = divisor(p1("s*(s - t)/t^2"));
  REQUIRE(d2.size() == 3);
  long total = 0;
  for (auto& [p, m] : d2) total += m;
  CHECK(total == 0);
  CHECK(divisor(p1("3")).empty());
  CHECK(error_kind([] { divisor(p1("(s^2 + t^2)/t^2")); }) == ErrorKind::NonSplitFunction);
}

TEST_CASE("check_weil examples") {
  auto r = check_weil(p1("s/t"), p1("(t - s)/t"));
  CHECK(r.sites.size() == 3);
  for (auto& s : r.sites) CHECK(s.value == 1);
  CHECK(r.pass);
  auto r2 = check_weil(p1("s/t"), p1("s/t"));
  REQUIRE(r2.sites.size() == 2);
  CHECK(r2.sites[0].value == -1);
  CHECK(r2.sites[1].value == -1);
  CHECK(r2.pass);
  auto r3 = check_weil(p1("s*(s-t)/t^2"), p1("7"));
  CHECK(r3.product == 1);
  CHECK(r3.exit_code() == 0);
}

TEST_CASE("property: tame symbol agrees with an expanded-polynomial oracle") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    auto f = random_split_function(rng), g = random_split_function(rng);
    ProjPoint1 P = uniform(rng, 0, 2) == 0 ? random_point(rng) : divisor(f).empty() ? random_point(rng)
                                                                                      : divisor(f).front().first;
    CHECK(tame_symbol(f, g, P) == oracle_tame(f, g, P));
  }
}

TEST_CASE("property: antisymmetry, bimultiplicativity, additivity of ord") {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    auto f = random_split_function(rng), f2 = random_split_function(rng), g = random_split_function(rng);
    auto dv = divisor(f * g);
    ProjPoint1 P = dv.empty() ? random_point(rng) : dv[uniform(rng, 0, static_cast<long>(dv.size()) - 1)].first;
    CHECK(tame_symbol(f, g, P) * tame_symbol(g, f, P) == 1);
    CHECK(tame_symbol(f * f2, g, P) == tame_symbol(f, g, P) * tame_symbol(f2, g, P));
    CHECK(ord_at(f * g, P) == ord_at(f, P) + ord_at(g, P));
  }
}

TEST_CASE("property: Steinberg relation") {
  Rng rng(23);
  int done = 0;
  while (done < 200) {
    // f = c (s - alpha t)/(s - beta t), so 1 - f = ((1-c)s + (c alpha - beta)t)/(s - beta t).
    BigRational c = make_rational(uniform(rng, -9, 9), uniform(rng, 1, 9));
    BigRational alpha = make_rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
    BigRational beta = make_rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
    if (c == 0 || c == 1 || alpha == beta) continue;
    Poly s = Poly::variable(Space::Line, 0), t = Poly::variable(Space::Line, 1);
    Poly num = s - alpha * t, den = s - beta * t, one_minus = (1 - c) * s + (c * alpha - beta) * t;
    auto f = FactoredFunction::make(Space::Line, c, {{num, 1}, {den, -1}});
    auto g = FactoredFunction::make(Space::Line, BigRational(1), {{one_minus, 1}, {den, -1}});
    for (auto& [P, m] : divisor(f * g)) CHECK(tame_symbol(f, g, P) == 1);
    CHECK(tame_symbol(f, g, random_point(rng)) == 1);
    ++done;
  }
  // A quadratic instance: f = s^2/t^2, 1 - f = (t - s)(t + s)/t^2.
  for (auto& [P, m] : divisor(p1("(s-t)*(s+t)/t^2"))) CHECK(tame_symbol(p1("s^2/t^2"), p1("-(s-t)*(s+t)/t^2"), P) == 1);
  CHECK(tame_symbol(p1("s^2/t^2"), p1("-(s-t)*(s+t)/t^2"), pt(0, 1)) == 1);
  CHECK(tame_symbol(p1("s^2/t^2"), p1("-(s-t)*(s+t)/t^2"), pt(1, 0)) == 1);
}

TEST_CASE("property: Weil reciprocity on random split pairs") {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    auto r = check_weil(random_split_function(rng), random_split_function(rng));
    CHECK(r.product == 1);
    CHECK(r.pass);
  }
}

TEST_CASE("property: bilocal factorization and reciprocity") {
  Rng rng(25);
  int done = 0;
  while (done < 150) {
    auto f1 = random_split_function(rng), f2 = random_split_function(rng);
    ProjPoint1 Q = random_point(rng);
    if (ord_at(f1, Q) != 0 || ord_at(f2, Q) != 0) continue;
    std::vector<ProjPoint1> support;
    for (const auto& f : {f1, f2})
      for (auto& [P, m] : divisor(f))
        if (std::find(support.begin(), support.end(), P) == support.end()) support.push_back(P);
    BigRational product = 1;
    for (const auto& P : support) {
      BigRational b = bilocal_symbol(f1, f2, P, Q);
      long a1 = ord_at(f1, P), a2 = ord_at(f2, P);
      BigRational correction = unit_value(f1.pow(a2) / f2.pow(a1), Q);
      CHECK(b == tame_symbol(f1, f2, P) / correction);
      product *= b;
    }
    // Points off both divisors contribute 1.
    ProjPoint1 R = random_point(rng);
    if (R != Q && ord_at(f1, R) == 0 && ord_at(f2, R) == 0) CHECK(bilocal_symbol(f1, f2, R, Q) == 1);
    CHECK(product == 1);
    ++done;
  }
}

TEST_CASE("unit_part") {
  auto f = p1("s^2*(s - t)/t^3");
  auto u = unit_part(f, pt(0, 1));
  CHECK(ord_at(u, pt(0, 1)) == 0);
  CHECK(unit_value(u, pt(0, 1)) == -1);
  CHECK(linear_form_through(pt(2, -1)) == normalize(line_poly("s + 2t")));
}
