#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cpstrata {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" (whitespace around tokens is ignored).
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Comma separated list of rationals, e.g. "2/5,2/5,3/10".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace cpstrata
