#include "bfforms/rational.hpp"

#include <stdexcept>

namespace bfforms {

namespace {

std::int64_t pow10(unsigned places) {
  if (places > 15) throw std::invalid_argument("at most 15 decimal places supported");
  std::int64_t p = 1;
  for (unsigned i = 0; i < places; ++i) p *= 10;
  return p;
}

// round(num / den) half to even, den > 0
std::int64_t round_half_even(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  if (r < 0) {
    r += den;
    --q;
  }
  // compare 2r with den without overflow
  if (r > den - r || (r == den - r && (q & 1))) ++q;
  return q;
}

std::int64_t scaled_numerator(const Rational& r, std::int64_t scale) {
  std::int64_t num = 0;
  if (__builtin_mul_overflow(r.numerator(), scale, &num)) throw std::overflow_error("rational too large to render");
  return num;
}

}  // namespace

Rational round_to(const Rational& r, unsigned places) {
  const std::int64_t scale = pow10(places);
  return {round_half_even(scaled_numerator(r, scale), r.denominator()), scale};
}

std::string to_decimal(const Rational& r, unsigned places) {
  const std::int64_t scale = pow10(places);
  const std::int64_t q = round_half_even(scaled_numerator(r, scale), r.denominator());
  const bool negative = q < 0;
  const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(q + 1)) + 1 : static_cast<std::uint64_t>(q);
  std::string whole = std::to_string(mag / static_cast<std::uint64_t>(scale));
  std::string out = negative ? "-" + whole : whole;
  if (places) {
    std::string frac = std::to_string(mag % static_cast<std::uint64_t>(scale));
    out += "." + std::string(places - frac.size(), '0') + frac;
  }
  return out;
}

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool in_fraction = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.' && !in_fraction) {
      in_fraction = true;
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("malformed decimal '" + text + "'");
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (in_fraction) den *= 10;
  }
  if (!seen_digit) throw std::invalid_argument("malformed decimal '" + text + "'");
  return {negative ? -num : num, den};
}

}  // namespace bfforms
