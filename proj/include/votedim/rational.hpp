#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace votedim {

using Rational = mpq_class;

// Parses "3", "-7", "13/20", "0.65", "1.5e3" style literals exactly.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace votedim
