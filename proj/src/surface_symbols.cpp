#include "locsym/surface_symbols.hpp"

#include "locsym/error.hpp"
#include "locsym/riemann_sphere.hpp"

namespace locsym {

namespace {

void require_size(const LocalData& data, size_t n, const char* what) {
  if (data.size() < n)
    throw Error(ErrorKind::ValidationError, std::string(what) + " needs local data for " + std::to_string(n) + " functions");
}

P1Function monomial_function(const LocalData& data, const std::vector<long>& e) {
  P1Function f = P1Function::constant(Space::Line, BigRational(1));
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) f = f * data.restricted[k].pow(e[k]);
  return f;
}

}  // namespace

BigRational restricted_monomial(const LocalData& data, const std::vector<long>& e) {
  long order = 0;
  for (size_t k = 0; k < e.size(); ++k) order += e[k] * data.b[k];
  if (order != 0) throw Error(ErrorKind::InternalInconsistency, "symbol exponents do not cancel the orders at the site");
  return unit_value(monomial_function(data, e), data.preimage);
}

BigRational restricted_monomial_at(const LocalData& data, const std::vector<long>& e, const ProjPoint1& q) {
  auto c = q.rational_coords();
  P1Function f = monomial_function(data, e);
  for (const auto& fac : f.factors())
    if (fac.poly.poly().evaluate(c) == 0)
      throw Error(ErrorKind::BasePointOnDivisor, "base point " + q.to_string() + " lies on a divisor");
  return f.evaluate(c);
}

LocalData select(const LocalData& data, const std::vector<int>& indices) {
  LocalData out;
  out.preimage = data.preimage;
  out.site = data.site;
  for (int i : indices) {
    out.a.push_back(data.a.at(i));
    out.b.push_back(data.b.at(i));
    out.restricted.push_back(data.restricted.at(i));
  }
  return out;
}

MembraneLimit membrane_limit_11(const LocalData& data, int i, int j) {
  return MembraneLimit{MembraneKind::I11, data.a.at(j) * data.b.at(i), BigRational(1)};
}

long membrane_limit_11_antisymmetric(const LocalData& data, int i, int j) {
  return data.a.at(j) * data.b.at(i) - data.a.at(i) * data.b.at(j);
}

MembraneLimit membrane_limit_12(const LocalData& data, int i, int j, int k) {
  const long e = data.a.at(j) * data.a.at(k) * data.b.at(i);
  return MembraneLimit{MembraneKind::I12, e % 2 == 0 ? 0 : 1, BigRational(sign_power(e))};
}

MembraneLimit membrane_limit_21(const LocalData& data, const ProjPoint1& q, int i, int j, int k) {
  const long a = data.a.at(i);
  if (a == 0) return MembraneLimit{MembraneKind::I21, 0, BigRational(1)};
  BigRational v = bilocal_symbol(data.restricted.at(j), data.restricted.at(k), data.preimage, q);
  return MembraneLimit{MembraneKind::I21, 0, locsym::pow(v, -a)};
}

MembraneLimit membrane_limit_22(const LocalData& data, const ProjPoint1& q, int i, int j, int k, int l) {
  const long e = data.a.at(j) * data.a.at(l);
  if (e == 0) return MembraneLimit{MembraneKind::I22, 0, BigRational(1)};
  BigRational v = bilocal_symbol(data.restricted.at(i), data.restricted.at(k), data.preimage, q);
  return MembraneLimit{MembraneKind::I22, 0, locsym::pow(v, -e)};
}

std::vector<long> parshin_D(const LocalData& data) {
  require_size(data, 3, "Parshin symbol");
  const auto& a = data.a;
  const auto& b = data.b;
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long parshin_K(const LocalData& data) {
  require_size(data, 3, "Parshin symbol");
  const auto& a = data.a;
  const auto& b = data.b;
  return a[0] * a[1] * b[2] + a[1] * a[2] * b[0] + a[2] * a[0] * b[1] + b[0] * b[1] * a[2] + b[1] * b[2] * a[0] +
         b[2] * b[0] * a[1];
}

BigRational parshin_symbol(const LocalData& data) {
  return sign_power(parshin_K(data)) * restricted_monomial(data, parshin_D(data));
}

BigRational parshin_refinement(const LocalData& data, const ProjPoint1& q) {
  require_size(data, 3, "Parshin refinement");
  BigRational limits(1);
  const int cyclic[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& c : cyclic) {
    limits *= membrane_limit_12(data, c[0], c[1], c[2]).value;
    limits *= membrane_limit_21(data, q, c[0], c[1], c[2]).value;
  }
  const auto D = parshin_D(data);
  BigRational closed = parshin_symbol(data) / restricted_monomial_at(data, D, q);
  if (limits != closed)
    throw Error(ErrorKind::InternalInconsistency, "Parshin refinement: limits give " + to_fraction_string(limits) +
                                                      ", closed form gives " + to_fraction_string(closed));
  return limits;
}

BigRational parshin_symbol_second(const LocalData& data) {
  BigRational via_exceptional = parshin_symbol(exceptional_data(select(data, {0, 1, 2})));
  BigRational inverse = BigRational(1) / parshin_symbol(data);
  if (via_exceptional != inverse)
    throw Error(ErrorKind::InternalInconsistency, "second Parshin symbol: exceptional data give " +
                                                      to_fraction_string(via_exceptional) + ", inverse gives " +
                                                      to_fraction_string(inverse));
  return via_exceptional;
}

namespace {

struct FourPattern {
  long L;
  std::vector<long> e;
};

// Exponents of (g1^{p2}/g2^{p1})^{M34} / (g3^{p4}/g4^{p3})^{M12}.
FourPattern four_pattern(const LocalData& data, const std::vector<long>& p) {
  require_size(data, 4, "4-function symbol");
  const auto& a = data.a;
  const auto& b = data.b;
  const long m12 = a[0] * b[1] - b[0] * a[1];
  const long m34 = a[2] * b[3] - b[2] * a[3];
  return FourPattern{m12 * m34, {p[1] * m34, -p[0] * m34, -p[3] * m12, p[2] * m12}};
}

}  // namespace

BigRational four_symbol_first(const LocalData& data) {
  FourPattern f = four_pattern(data, {data.a.begin(), data.a.begin() + 4});
  return sign_power(f.L) * restricted_monomial(data, f.e);
}

BigRational four_bilocal(const LocalData& data, const ProjPoint1& q) {
  require_size(data, 4, "4-function bi-local symbol");
  const auto& a = data.a;
  auto bl = [&](int i, int j, long e) {
    if (e == 0) return BigRational(1);
    return locsym::pow(bilocal_symbol(data.restricted[i], data.restricted[j], data.preimage, q), e);
  };
  BigRational limits = bl(0, 2, -a[1] * a[3]) * bl(0, 3, a[1] * a[2]) * bl(1, 2, a[0] * a[3]) * bl(1, 3, -a[0] * a[2]);
  FourPattern f = four_pattern(data, {a.begin(), a.begin() + 4});
  BigRational closed = four_symbol_first(data) / restricted_monomial_at(data, f.e, q);
  if (limits != closed)
    throw Error(ErrorKind::InternalInconsistency, "4-function bi-local symbol: limits give " +
                                                      to_fraction_string(limits) + ", closed form gives " +
                                                      to_fraction_string(closed));
  return limits;
}

BigRational four_symbol_second(const LocalData& data) {
  require_size(data, 4, "4-function symbol");
  std::vector<long> c(4);
  for (int k = 0; k < 4; ++k) c[k] = data.a[k] + data.b[k];
  FourPattern f = four_pattern(data, c);
  return sign_power(f.L) / restricted_monomial(data, f.e);
}

bool riemann_symmetry_check(const LocalData& data) {
  require_size(data, 4, "Riemann symmetry");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          BigRational r = four_symbol_first(select(data, {i, j, k, l}));
          if (r * four_symbol_first(select(data, {j, i, k, l})) != 1) return false;
          if (r * four_symbol_first(select(data, {i, j, l, k})) != 1) return false;
          if (r * four_symbol_first(select(data, {k, l, i, j})) != 1) return false;
        }
  return true;
}

LocalData site_data(const std::vector<SurfaceFunction>& fs, const CurveParam& param, const ProjPoint2& P,
                    const std::optional<ProjPoint2>& base, int skip) {
  std::vector<ProjPoint2> extra{P};
  if (base) extra.push_back(*base);
  CurveContext ctx = curve_context(fs, param, extra, skip, false);
  return local_data(fs, param, P, ctx.x);
}

std::string site_label(const PlaneCurve& C, const ProjPoint2& P) { return C.to_string() + " @ " + P.to_string(); }

ReciprocityReport check_first_type(const std::string& law, const std::vector<SurfaceFunction>& fs,
                                   const CurveParam& param, LocalSymbol symbol) {
  ReciprocityReport report;
  report.law = law;
  for (auto& issue : validate_normal_crossings(fs, param)) report.violation(std::move(issue));
  if (report.hypotheses_ok) {
    CurveContext ctx = curve_context(fs, param);
    for (const auto& P : ctx.sites)
      report.add(site_label(param.curve(), P), symbol(local_data(fs, param, P, ctx.x)));
  }
  report.finish();
  return report;
}

ReciprocityReport check_second_type(const std::string& law, const std::vector<SurfaceFunction>& fs,
                                    const ProjPoint2& P, LocalSymbol symbol) {
  ReciprocityReport report;
  report.law = law;
  for (auto& issue : validate_distinct_tangents(fs, P)) report.violation(std::move(issue));
  if (report.hypotheses_ok) {
    for (const auto& C : components_through(fs, P)) {
      CurveParam param = parametrize(C);
      report.add(site_label(C, P), symbol(site_data(fs, param, P)));
    }
  }
  report.finish();
  return report;
}

namespace {

// Parshin symbol with the second-type dual path exercised alongside.
BigRational parshin_checked(const LocalData& data) {
  BigRational value = parshin_symbol(data);
  parshin_symbol_second(data);
  return value;
}

}  // namespace

ReciprocityReport check_parshin_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param) {
  return check_first_type("parshin-first", fs, param, parshin_checked);
}

ReciprocityReport check_parshin_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P) {
  return check_second_type("parshin-second", fs, P, parshin_checked);
}

ReciprocityReport check_four_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param) {
  return check_first_type("four-first", fs, param, four_symbol_first);
}

ReciprocityReport check_four_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P) {
  return check_second_type("four-second", fs, P, four_symbol_second);
}

namespace {

ReciprocityReport check_bilocal(const std::string& law, const std::vector<SurfaceFunction>& fs,
                                const CurveParam& param, const ProjPoint2& Q,
                                BigRational (*symbol)(const LocalData&, const ProjPoint1&)) {
  ReciprocityReport report;
  report.law = law;
  for (auto& issue : validate_normal_crossings(fs, param)) report.violation(std::move(issue));
  if (report.hypotheses_ok) {
    CurveContext ctx = curve_context(fs, param, {Q});
    const ProjPoint1 q = param.preimage(Q);
    for (const auto& P : ctx.sites)
      report.add(site_label(param.curve(), P), symbol(local_data(fs, param, P, ctx.x), q));
  }
  report.finish();
  return report;
}

}  // namespace

ReciprocityReport check_parshin_bilocal(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                                       const ProjPoint2& Q) {
  return check_bilocal("parshin-bilocal", fs, param, Q, parshin_refinement);
}

ReciprocityReport check_four_bilocal(const std::vector<SurfaceFunction>& fs, const CurveParam& param,
                                     const ProjPoint2& Q) {
  return check_bilocal("four-bilocal", fs, param, Q, four_bilocal);
}

}  // namespace locsym
