#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dbl {

using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q"; anything else (decimals, symbols) is rejected.
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering; q is always present so outputs are uniform.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace dbl
