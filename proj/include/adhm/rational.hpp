#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace adhm {

// Exact rational scalar. Values produced by arithmetic or by parse_rational
// are in lowest terms with a positive denominator; two-argument construction
// mpq_class(p, q) is NOT reduced automatically and must be canonicalize()d
// before comparisons. The helpers below pin down the one serialization
// format used everywhere: "p" for integers, "p/q" otherwise, sign on the
// numerator.
using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading '-' or '+', decimal digits only,
// q > 0). Throws std::invalid_argument on anything else, including "p/0".
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// Three-way comparison of |a| and |b|; used for pivot selection.
int compare_abs(const Rational& a, const Rational& b);

}  // namespace adhm
