#ifndef RADEXT_RATIONAL_HPP
#define RADEXT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace radext {

/// Exact rational number. gmpxx keeps every arithmetic result canonical
/// (reduced, positive denominator); values built from strings go through
/// parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional sign, surrounding blanks ignored).
/// Decimal or exponent notation is refused with FloatLiteralRefused so that
/// parameters never pass through binary floating point.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational make_rational(long numerator, long denominator = 1);

int sign(const Rational& value);
bool is_integer(const Rational& value);
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// value^exponent for any integer exponent (value != 0 when exponent < 0).
Rational pow(const Rational& value, int exponent);

/// The rational with the smallest denominator in the open interval (lo, hi);
/// among equal denominators the one of smallest magnitude. An empty `hi`
/// means +infinity. Requires lo < hi.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi);

inline double to_double(const Rational& value) { return value.get_d(); }

} // namespace radext

#endif
