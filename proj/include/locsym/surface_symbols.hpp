#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locsym/plane_geometry.hpp"
#include "locsym/report.hpp"

namespace locsym {

/// Value at the site of prod restricted_k^{e_k}; requires sum e_k b_k = 0.
BigRational restricted_monomial(const LocalData& data, const std::vector<long>& e);
/// The same monomial at another parameter point, where every factor is a unit.
BigRational restricted_monomial_at(const LocalData& data, const std::vector<long>& e, const ProjPoint1& q);

/// Reorders (or repeats) the functions of a local data record.
LocalData select(const LocalData& data, const std::vector<int>& indices);

enum class MembraneKind { I11, I12, I21, I22 };

/// I11 carries the coefficient of (2 pi i)^2; I12 carries the exponent of -1
/// in `coefficient` and the resulting sign in `value`; I21 and I22 carry an
/// exact value.
struct MembraneLimit {
  MembraneKind kind;
  long coefficient = 0;
  BigRational value{1};
};

// Indices select functions inside `data`; defaults follow the numbering 1..4.
MembraneLimit membrane_limit_11(const LocalData& data, int i = 0, int j = 1);
/// a_j b_i - a_i b_j: the combination I^{(1,1)}(f_i,f_j) - I^{(1,1)}(f_j,f_i).
long membrane_limit_11_antisymmetric(const LocalData& data, int i = 0, int j = 1);
MembraneLimit membrane_limit_12(const LocalData& data, int i = 0, int j = 1, int k = 2);
MembraneLimit membrane_limit_21(const LocalData& data, const ProjPoint1& q, int i = 0, int j = 1, int k = 2);
MembraneLimit membrane_limit_22(const LocalData& data, const ProjPoint1& q, int i = 0, int j = 1, int k = 2,
                                int l = 3);

long parshin_K(const LocalData& data);
std::vector<long> parshin_D(const LocalData& data);

/// (-1)^K g^D at the site.
BigRational parshin_symbol(const LocalData& data);
/// Product of the six limits; cross-checked against (-1)^K g^D(P)/g^D(Q).
BigRational parshin_refinement(const LocalData& data, const ProjPoint1& q);
/// Parshin symbol on the exceptional data, cross-checked against the inverse
/// of the Parshin symbol.
BigRational parshin_symbol_second(const LocalData& data);

/// (-1)^L [(g1^{a2}/g2^{a1})^{M34} / (g3^{a4}/g4^{a3})^{M12}] at the site.
BigRational four_symbol_first(const LocalData& data);
/// Product of four (2,2)-limits; cross-checked against the closed form
/// divided by its value at q.
BigRational four_bilocal(const LocalData& data, const ProjPoint1& q);
/// (-1)^L [(g1^{c2}/g2^{c1})^{M34} / (g3^{c4}/g4^{c3})^{M12}]^{-1} with c = a + b.
BigRational four_symbol_second(const LocalData& data);

/// R_ijkl R_jikl = R_ijkl R_ijlk = R_ijkl R_klij = 1 for all index choices.
bool riemann_symmetry_check(const LocalData& data);

/// Local data at (C, P) with a uniformizer avoiding every site of C, P and
/// the optional base point.
LocalData site_data(const std::vector<SurfaceFunction>& fs, const CurveParam& param, const ProjPoint2& P,
                    const std::optional<ProjPoint2>& base = std::nullopt, int skip = 0);

using LocalSymbol = BigRational (*)(const LocalData&);

/// Product of `symbol` over the sites of C after checking normal crossings.
ReciprocityReport check_first_type(const std::string& law, const std::vector<SurfaceFunction>& fs,
                                   const CurveParam& param, LocalSymbol symbol);
/// Product of `symbol` over the components through P after checking
/// distinct tangents. Components need a built-in parametrization.
ReciprocityReport check_second_type(const std::string& law, const std::vector<SurfaceFunction>& fs,
                                    const ProjPoint2& P, LocalSymbol symbol);

ReciprocityReport check_parshin_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param);
ReciprocityReport check_parshin_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P);
ReciprocityReport check_four_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param);
ReciprocityReport check_four_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P);

/// Products of the bi-local refinements over the sites of C with base point Q.
ReciprocityReport check_parshin_bilocal(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                                       const ProjPoint2& Q);
ReciprocityReport check_four_bilocal(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                                     const ProjPoint2& Q);

std::string site_label(const PlaneCurve& C, const ProjPoint2& P);

}  // namespace locsym
