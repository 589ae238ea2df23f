// Exact integer and rational arithmetic used by every probability table.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace vcs {

using Int = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// num/den in canonical form. GMP's comparison operators assume canonical
/// operands; construct fractions through this instead of mpq_class(n, d).
Rational make_rational(long num, long den);
Rational make_rational(const Int& num, const Int& den);

/// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string to_string(const Rational& q);

/// Accepts "num", "num/den", and plain decimals such as "0.05" (kept exact).
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

Rational abs(const Rational& q);

}  // namespace vcs
