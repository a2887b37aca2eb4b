#include "locsym/rational.hpp"

#include <cctype>

#include "locsym/error.hpp"

namespace locsym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::InvalidParametrization: return "InvalidParametrization";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::BasePointOnDivisor: return "BasePointOnDivisor";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NonSplitFunction: return "NonSplitFunction";
    case ErrorKind::NoRationalPointFound: return "NoRationalPointFound";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::UniformizerThroughPoint: return "UniformizerThroughPoint";
    case ErrorKind::NonUniquePreimage: return "NonUniquePreimage";
    case ErrorKind::RestrictionVanishes: return "RestrictionVanishes";
    case ErrorKind::NonRationalSite: return "NonRationalSite";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::SingularityOnPath: return "SingularityOnPath";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::ValidationError, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent == 0) return BigRational(1);
  if (base == 0) {
    if (exponent < 0) throw Error(ErrorKind::NotAUnit, "zero raised to a negative power");
    return BigRational(0);
  }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return exponent < 0 ? make_rational(den, num) : make_rational(num, den);
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_short_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  auto valid_int = [](const std::string& part) {
    size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || BigInt(den) == 0)
    throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
  return make_rational(BigInt(num), BigInt(den));
}

}  // namespace locsym
