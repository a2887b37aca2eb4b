#include "helpers.hpp"

#include "locsym/poly_algorithms.hpp"

using namespace testing;

TEST_CASE("normalize") {
  CHECK(normalize(HomPoly(plane_poly("2X + 2Y"))) == HomPoly(plane_poly("X + Y")));
  CHECK(normalize(HomPoly(line_poly("-3*s*t"))) == HomPoly(line_poly("s*t")));
  CHECK(normalize(HomPoly(plane_poly("X^2"))) == HomPoly(plane_poly("X^2")));
  BigRational scale;
  HomPoly n = normalize(HomPoly(plane_poly("(2/3)*X - 4/3*Z")), &scale);
  CHECK(n == HomPoly(plane_poly("X - 2Z")));
  CHECK(scale == q(2, 3));
  CHECK(error_kind([] { HomPoly h(Poly(Space::Plane)); }) == ErrorKind::ZeroPolynomial);
  CHECK(error_kind([] { HomPoly h(plane_poly("X + Y^2")); }) == ErrorKind::ValidationError);
}

TEST_CASE("parse_poly") {
  CHECK(plane_poly("X*Z - Y^2") == plane_poly("-Y^2 + Z*X"));
  CHECK(plane_poly("2Z") == plane_poly("Z + Z"));
  CHECK(line_poly("s + 2t").coefficient({0, 1, 0}) == 2);
  CHECK(plane_poly("X/2").coefficient({1, 0, 0}) == q(1, 2));
  CHECK(error_kind([] { plane_poly("X + s"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { plane_poly("X +"); }) == ErrorKind::ParseError);
  CHECK(error_kind([] { plane_poly("X/Y"); }) == ErrorKind::ParseError);
}

TEST_CASE("resultant examples") {
  // The 2x2 Sylvester determinant |1 -1; 1 1| times s gives 2s with t
  // ordered last; this library orders coefficients by descending power of
  // t, which flips the sign.
  Poly r = resultant(line_poly("s - t"), line_poly("s + t"), 1);
  CHECK(r == line_poly("-2s"));
  CHECK(normalize(r) == line_poly("s"));
  Poly r2 = resultant(line_poly("s*t"), line_poly("s^2"), 1);
  CHECK(normalize(r2) == line_poly("s^2"));
  CHECK(resultant(line_poly("s^2 + t^2"), line_poly("s^2 + t^2"), 1).is_zero());
  CHECK(resultant(plane_poly("X - Y"), plane_poly("X + Z"), 0) == plane_poly("Y + Z"));
}

TEST_CASE("property: resultant sign rule and vanishing against gcd") {
  std::mt19937_64 rng(11);
  int shared = 0;
  for (int i = 0; i < 300; ++i) {
    int m = static_cast<int>(uniform(rng, 1, 4)), n = static_cast<int>(uniform(rng, 1, 4));
    Poly p = random_binary_form(rng, m), q2 = random_binary_form(rng, n);
    if (uniform(rng, 0, 1) == 1 && m + n <= 6) {
      Poly common = random_binary_form(rng, 1);
      if (common.degree_in(1) == 0) continue;
      p = p * common;
      q2 = q2 * common;
    }
    Poly rpq = resultant(p, q2, 1), rqp = resultant(q2, p, 1);
    long dp = p.degree_in(1), dq = q2.degree_in(1);
    CHECK(rqp == rpq * BigRational(sign_power(dp * dq)));
    Poly g = binary_gcd(p, q2);
    bool common_in_t = g.degree_in(1) > 0;
    if (common_in_t) ++shared;
    CHECK(rpq.is_zero() == common_in_t);
  }
  CHECK(shared > 50);
}

TEST_CASE("coprime") {
  CHECK(coprime(HomPoly(plane_poly("X")), HomPoly(plane_poly("Y"))));
  CHECK_FALSE(coprime(HomPoly(plane_poly("X*Y")), HomPoly(plane_poly("Y*Z"))));
  CHECK_FALSE(coprime(HomPoly(plane_poly("X^2 - Y^2")), HomPoly(plane_poly("X*Z + Y*Z"))));
  CHECK(coprime(HomPoly(plane_poly("X*Z - Y^2")), HomPoly(plane_poly("X + Y + Z"))));
}

TEST_CASE("substitute_param examples") {
  std::array<Poly, 3> line{Poly(Space::Line), line_poly("s"), line_poly("t")};
  CHECK_FALSE(substitute_param(HomPoly(plane_poly("X")), line).has_value());
  CHECK(substitute_param(HomPoly(plane_poly("Y + 2Z")), line)->poly() == line_poly("s + 2t"));
  std::array<Poly, 3> conic{line_poly("s^2"), line_poly("s*t"), line_poly("t^2")};
  CHECK_FALSE(substitute_param(HomPoly(plane_poly("X*Z - Y^2")), conic).has_value());
  std::array<Poly, 3> bad{line_poly("s^2"), line_poly("s*t"), line_poly("s*(s+t)")};
  CHECK(error_kind([&] { validate_param_forms(bad); }) == ErrorKind::InvalidParametrization);
  std::array<Poly, 3> mixed{line_poly("s^2"), line_poly("t"), line_poly("t^2")};
  CHECK(error_kind([&] { validate_param_forms(mixed); }) == ErrorKind::InvalidParametrization);
}

TEST_CASE("property: substitute_param is a ring morphism") {
  std::mt19937_64 rng(12);
  auto sub = [](const Poly& p, const std::array<Poly, 3>& f) {
    auto r = substitute_param(HomPoly(p), f);
    return r ? r->poly() : Poly(Space::Line);
  };
  int done = 0;
  while (done < 100) {
    int e = static_cast<int>(uniform(rng, 1, 2));
    std::array<Poly, 3> forms{random_binary_form(rng, e, 3), random_binary_form(rng, e, 3),
                              random_binary_form(rng, e, 3)};
    try {
      validate_param_forms(forms);
    } catch (const Error&) {
      continue;
    }
    int d = static_cast<int>(uniform(rng, 1, 3));
    Poly p = random_plane_form(rng, d), q2 = random_plane_form(rng, d);
    CHECK(sub(p * q2, forms) == sub(p, forms) * sub(q2, forms));
    if (!(p + q2).is_zero()) CHECK(sub(p + q2, forms) == sub(p, forms) + sub(q2, forms));
    ++done;
  }
}

TEST_CASE("rational_roots examples") {
  auto r = rational_roots(HomPoly(line_poly("s*(s + 2t)")));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].first == ProjPoint1{0, 1});
  // [-2:1] and [2:-1] are the same point; the first nonzero coordinate is
  // made positive.
  CHECK(r.roots[1].first == ProjPoint1{-2, 1});
  CHECK(r.roots[1].first.to_string() == "[2:-1]");
  CHECK_FALSE(r.nonsplit);

  auto irr = rational_roots(HomPoly(line_poly("s^2 + t^2")));
  CHECK(irr.roots.empty());
  CHECK(irr.nonsplit);

  auto inf = rational_roots(HomPoly(line_poly("t^3")));
  REQUIRE(inf.roots.size() == 1);
  CHECK(inf.roots[0].first == ProjPoint1{1, 0});
  CHECK(inf.roots[0].second == 3);
}

TEST_CASE("property: root multiplicities plus remainder degree equal the degree") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Poly b(Space::Line, BigRational(uniform(rng, 1, 9)));
    int nlin = static_cast<int>(uniform(rng, 0, 3));
    for (int k = 0; k < nlin; ++k) {
      Poly l = random_binary_form(rng, 1, 7);
      b = b * l.pow(static_cast<unsigned>(uniform(rng, 1, 2)));
    }
    bool quad = uniform(rng, 0, 1) == 1;
    if (quad) b = b * line_poly("s^2 - 2t^2");
    if (b.is_constant()) continue;
    auto r = rational_roots(HomPoly(b));
    int total = 0;
    for (auto& [pt, m] : r.roots) {
      total += m;
      CHECK(order_at(b, pt) == m);
      CHECK(evaluate_at(b, pt) == 0);
    }
    CHECK(total + r.remainder.total_degree() == b.total_degree());
    CHECK(r.nonsplit == quad);
  }
}

TEST_CASE("low_degree_irreducible") {
  CHECK(low_degree_irreducible(HomPoly(plane_poly("X + Y"))));
  CHECK(low_degree_irreducible(HomPoly(plane_poly("X*Z - Y^2"))));
  CHECK_FALSE(low_degree_irreducible(HomPoly(plane_poly("X*Y"))));
  // Rank 2 over Q but the two lines are conjugate.
  CHECK(low_degree_irreducible(HomPoly(plane_poly("X^2 + Y^2"))));
  CHECK_FALSE(low_degree_irreducible(HomPoly(plane_poly("X^2 - 2*X*Y + Y^2"))));
  CHECK(low_degree_irreducible(HomPoly(plane_poly("X^2 + Y^2 + Z^2"))));
  CHECK(low_degree_irreducible(HomPoly(plane_poly("Y^2*Z - X^3 - X*Z^2"))));
  CHECK_FALSE(low_degree_irreducible(HomPoly(plane_poly("(X + Y)*(X*Z - Y^2)"))));
  CHECK(low_degree_irreducible(HomPoly(line_poly("s^2 + t^2"))));
  CHECK_FALSE(low_degree_irreducible(HomPoly(line_poly("s^2 - t^2"))));
  CHECK(error_kind([] { low_degree_irreducible(HomPoly(plane_poly("X^4 + Y^4 + Z^4"))); }) ==
        ErrorKind::DegreeTooHigh);
}

TEST_CASE("property: products of two forms are reducible") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    int d1 = static_cast<int>(uniform(rng, 1, 2));
    int d2 = static_cast<int>(uniform(rng, 1, 3 - d1));
    Poly p = random_plane_form(rng, d1) * random_plane_form(rng, d2);
    CHECK_FALSE(low_degree_irreducible(HomPoly(p)));
  }
}
