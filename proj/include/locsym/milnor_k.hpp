#pragma once

#include <vector>

#include "locsym/plane_geometry.hpp"
#include "locsym/report.hpp"

namespace locsym {

/// Exponent a1a2a3b4 + a2a3a4b1 + a3a4a1b2 + a4a1a2b3 of the sign symbol.
long sign_exponent(const LocalData& data);
/// The variant with the roles of a and b swapped:
/// a1b2b3b4 + b1a2b3b4 + b1b2a3b4 + b1b2b3a4.
long sign_exponent_alternative(const LocalData& data);

BigRational sign_symbol_first(const LocalData& data);

/// Tame_C{f_i, f_j} pulled back to P^1: (-1)^{a_i a_j} g_i^{a_j} / g_j^{a_i}.
P1Function tame_along_curve(const LocalData& data, int i, int j);

/// Tame_P of Tame_C{f1,f2} and Tame_C{f3,f4}.
BigRational k_symbol_first(const LocalData& data);

/// First-type symbols on the exceptional data, inverted.
BigRational sign_symbol_second(const LocalData& data);
BigRational k_symbol_second(const LocalData& data);

ReciprocityReport check_sign_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param);
ReciprocityReport check_k_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param);
ReciprocityReport check_sign_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P);
ReciprocityReport check_k_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P);

}  // namespace locsym
