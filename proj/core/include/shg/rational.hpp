#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace shg {

/// Exact rational scalar. Every quantity in the algebraic core is one of these.
using Rational = mpq_class;

/// Parses "p/q", "-p/q" or an integer literal; the result is canonicalised.
/// Throws std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Nearest double; used only by the floating-point iteration and reports.
double to_double(const Rational& value);

Rational abs(const Rational& value);

/// Joins values as "v1, v2, ...".
std::string join(const std::vector<Rational>& values, std::string_view sep = ", ");

}  // namespace shg
