#pragma once

#include <utility>
#include <vector>

#include "locsym/factored.hpp"
#include "locsym/points.hpp"
#include "locsym/report.hpp"

namespace locsym {

using Divisor1 = std::vector<std::pair<ProjPoint1, long>>;

/// Sum of e_i * (order of factor i at P).
long ord_at(const P1Function& f, const ProjPoint1& P);

/// Value at P of a function with ord_P = 0. Vanishing factors are divided by
/// the matching power of the linear form through P first, so the result is
/// correct even when zeros of separate factors cancel. Throws NotAUnit.
BigRational unit_value(const P1Function& f, const ProjPoint1& P);

/// {f,g}_P = (-1)^{ab} (f^b / g^a)(P).
BigRational tame_symbol(const P1Function& f, const P1Function& g, const ProjPoint1& P);

/// {f1,f2}_P^Q: the tame-type quotient at P divided by the same expression
/// at the base point Q.
BigRational bilocal_symbol(const P1Function& f1, const P1Function& f2, const ProjPoint1& P,
                           const ProjPoint1& Q);

/// Throws NonSplitFunction when a factor of degree >= 2 remains.
Divisor1 divisor(const P1Function& f);

/// Product of tame symbols over |div f| u |div g|.
ReciprocityReport check_weil(const P1Function& f, const P1Function& g);

/// f * (n/l)^{-ord_P f} with n the normalized linear form vanishing at
/// P = [u:v] and l = u*s + v*t. The result is a unit at P whose value is
/// the leading coefficient of f in the local parameter n/l.
P1Function unit_part(const P1Function& f, const ProjPoint1& P);

/// Linear form v*s - u*t through [u:v], normalized.
Poly linear_form_through(const ProjPoint1& P);

}  // namespace locsym
