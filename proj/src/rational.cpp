#include "skeinlab/rational.hpp"

#include "skeinlab/error.hpp"

namespace skeinlab {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw InvalidArgument("invalid rational literal '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

}  // namespace skeinlab
