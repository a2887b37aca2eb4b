#include "locsym/milnor_k.hpp"

#include "locsym/error.hpp"
#include "locsym/riemann_sphere.hpp"
#include "locsym/surface_symbols.hpp"

namespace locsym {

namespace {

void require_four(const LocalData& data) {
  if (data.size() < 4) throw Error(ErrorKind::ValidationError, "K-theoretic symbols need four functions");
}

}  // namespace

long sign_exponent(const LocalData& data) {
  require_four(data);
  const auto& a = data.a;
  const auto& b = data.b;
  return a[0] * a[1] * a[2] * b[3] + a[1] * a[2] * a[3] * b[0] + a[2] * a[3] * a[0] * b[1] + a[3] * a[0] * a[1] * b[2];
}

long sign_exponent_alternative(const LocalData& data) {
  require_four(data);
  const auto& a = data.a;
  const auto& b = data.b;
  return a[0] * b[1] * b[2] * b[3] + b[0] * a[1] * b[2] * b[3] + b[0] * b[1] * a[2] * b[3] + b[0] * b[1] * b[2] * a[3];
}

BigRational sign_symbol_first(const LocalData& data) { return BigRational(sign_power(sign_exponent(data))); }

P1Function tame_along_curve(const LocalData& data, int i, int j) {
  const long ai = data.a.at(i), aj = data.a.at(j);
  return P1Function::constant(Space::Line, BigRational(sign_power(ai * aj))) * data.restricted.at(i).pow(aj) *
         data.restricted.at(j).pow(-ai);
}

BigRational k_symbol_first(const LocalData& data) {
  require_four(data);
  return tame_symbol(tame_along_curve(data, 0, 1), tame_along_curve(data, 2, 3), data.preimage);
}

BigRational sign_symbol_second(const LocalData& data) {
  return BigRational(1) / sign_symbol_first(exceptional_data(data));
}

BigRational k_symbol_second(const LocalData& data) { return BigRational(1) / k_symbol_first(exceptional_data(data)); }

ReciprocityReport check_sign_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param) {
  return check_first_type("sign-first", fs, param, sign_symbol_first);
}

ReciprocityReport check_k_first(const std::vector<SurfaceFunction>& fs, const CurveParam& param) {
  return check_first_type("ksym-first", fs, param, k_symbol_first);
}

ReciprocityReport check_sign_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P) {
  return check_second_type("sign-second", fs, P, sign_symbol_second);
}

ReciprocityReport check_k_second(const std::vector<SurfaceFunction>& fs, const ProjPoint2& P) {
  return check_second_type("ksym-second", fs, P, k_symbol_second);
}

}  // namespace locsym
