#include "ringfill/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

namespace ringfill {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

BigInt pow10(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (pos < text.size() && is_digit(text[pos])) {
    digits += text[pos++];
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      digits += text[pos++];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) return fail();
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    long exponent = 0;
    const char* first = text.data() + pos;
    if (pos < text.size() && text[pos] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), exponent);
    if (ec != std::errc() || ptr == first) return fail();
    pos = static_cast<std::size_t>(ptr - text.data());
    scale += exponent;
  }
  if (pos != text.size()) return fail();

  Rational out{BigInt(digits, 10)};
  if (scale > 0) out *= pow10(static_cast<unsigned long>(scale));
  if (scale < 0) out /= pow10(static_cast<unsigned long>(-scale));
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  return parse_decimal(format_double(value));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil_sqrt(const Rational& value) {
  if (sgn(value) < 0) throw std::domain_error("ceil_sqrt of a negative value");
  BigInt c{std::ceil(std::sqrt(value.get_d()))};
  if (c < 0) c = 0;
  // The float guess is off by at most a few units; settle it exactly.
  while (c > 0 && Rational((c - 1) * (c - 1)) >= value) --c;
  while (Rational(c * c) < value) ++c;
  return c;
}

Rational mod(const Rational& value, const Rational& modulus) {
  Rational out = value - modulus * Rational(floor(value / modulus));
  out.canonicalize();
  return out;
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return value.get_si();
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, ptr);
}

double to_double(const Rational& value) {
  if (sgn(value) == 0) return 0.0;
  const BigInt num = abs(value.get_num());
  const BigInt& den = value.get_den();
  // At least 40 significant digits, then a sticky 1 if the expansion goes on,
  // so strtod sees an inexact tail and rounds once.
  const long k = std::max<long>(0, 42 + static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) -
                                       static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)));
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), BigInt(num * scale).get_mpz_t(), den.get_mpz_t());
  std::string text = (sgn(value) < 0 ? "-" : "") + q.get_str();
  long exponent = -k;
  if (rem != 0) {
    text += '1';
    --exponent;
  }
  text += "e" + std::to_string(exponent);
  return std::strtod(text.c_str(), nullptr);
}

}  // namespace ringfill
