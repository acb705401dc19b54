#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace bfforms {

using Rational = boost::rational<std::int64_t>;

/// Fixed-point decimal text of r with `places` fraction digits, rounding
/// half to even. Exact: no floating point is involved.
std::string to_decimal(const Rational& r, unsigned places = 3);

/// Parses the output of to_decimal back into the exact rational it denotes.
Rational parse_decimal(const std::string& text);

/// r rounded (half to even) to a multiple of 10^-places.
Rational round_to(const Rational& r, unsigned places);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace bfforms
