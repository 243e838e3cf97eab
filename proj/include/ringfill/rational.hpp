#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ringfill {

/// Exact rational number. All circular coordinates, drift bounds and
/// schedule parameters are carried in this type.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses a decimal literal such as "0.25", "-3", "1e-3" or "2.5E2" exactly.
/// "0.2" yields 1/5, not the binary approximation of 0.2.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

/// Converts a double through its shortest round-trip decimal spelling, so
/// from_double(0.2) == 1/5.
Rational from_double(double value);

/// Inverse of the above for reporting: "1/5" or "3" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// Smallest integer c >= 0 with c*c >= value. Requires value >= 0.
BigInt ceil_sqrt(const Rational& value);

/// value reduced into [0, modulus). Requires modulus > 0.
Rational mod(const Rational& value, const Rational& modulus);

/// Narrowing conversion; throws std::overflow_error if out of range.
std::int64_t to_int64(const BigInt& value);

/// Nearest double (mpq's get_d truncates toward zero).
double to_double(const Rational& value);

/// Shortest round-trip decimal text of a double ("0.1", "1e-12", "3").
std::string format_double(double value);

}  // namespace ringfill
