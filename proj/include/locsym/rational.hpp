#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locsym {

using BigInt = mpz_class;
/// Arbitrary-precision rational; GMP keeps it in lowest terms with a
/// positive denominator after every arithmetic operation.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Exact integer power; negative exponents invert (base must be nonzero).
BigRational pow(const BigRational& base, long exponent);

/// Canonical "a/b" form with b > 0, also for integers ("3/1").
std::string to_fraction_string(const BigRational& q);

/// Shorter form used in polynomial printing: "3", "-1/2".
std::string to_short_string(const BigRational& q);

/// Parses "7", "-3/4", "+2"; throws Error(ParseError) otherwise.
BigRational parse_rational(std::string_view text);

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace locsym
