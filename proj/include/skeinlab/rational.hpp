#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skeinlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Integers print bare, everything else as "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Integer pow(const Integer& base, unsigned long exponent);

}  // namespace skeinlab
