#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "locsym/error.hpp"
#include "locsym/poly_parser.hpp"

namespace testing {

using namespace locsym;

inline BigRational q(long n, long d = 1) { return make_rational(n, d); }
inline Poly line_poly(const char* s) { return parse_poly(s, Space::Line); }
inline Poly plane_poly(const char* s) { return parse_poly(s, Space::Plane); }
inline FactoredFunction p1(const char* s) { return parse_function(s, Space::Line); }
inline FactoredFunction p2(const char* s) { return parse_function(s, Space::Plane); }

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::InternalInconsistency;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random binary form of the given degree with small integer coefficients.
inline Poly random_binary_form(std::mt19937_64& rng, int degree, int coef = 5) {
  Poly p(Space::Line);
  while (p.is_zero())
    for (int i = 0; i <= degree; ++i) p.add_term({i, degree - i, 0}, BigRational(uniform(rng, -coef, coef)));
  return p;
}

inline Poly random_plane_form(std::mt19937_64& rng, int degree, int coef = 4) {
  Poly p(Space::Plane);
  while (p.is_zero())
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j)
        p.add_term({i, j, degree - i - j}, BigRational(uniform(rng, -coef, coef)));
  return p;
}

}  // namespace testing
