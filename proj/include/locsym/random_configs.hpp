#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "locsym/plane_geometry.hpp"

namespace locsym {

using Rng = std::mt19937_64;

/// Split function on P^1: a random constant times up to `max_factors`
/// linear forms with coefficients in [-coef, coef], degree balanced by t.
P1Function random_split_function(Rng& rng, int max_factors = 6, int coef = 9);

struct Arrangement {
  std::vector<Poly> lines;
  std::vector<SurfaceFunction> functions;
  PlaneCurve curve;
};

/// `line_count` distinct random lines, `function_count` ratios of them, and
/// a base curve taken among the lines used by the first function.
Arrangement random_arrangement(Rng& rng, int line_count, int function_count, int coef = 3);

/// As above, but `through_count` of the lines pass through `P`. The curve is
/// one of those.
Arrangement random_arrangement_through(Rng& rng, const ProjPoint2& P, int through_count, int other_count,
                                       int function_count, int coef = 3);

/// Synthetic local data at the parameter [0:1]: orders a_k, b_k in
/// [-range, range] and restrictions c * (s/t)^{b_k} * (s + r t)/(s + r' t)
/// that are units at [1:1].
LocalData random_local_data(Rng& rng, int n, int range = 3);

}  // namespace locsym
