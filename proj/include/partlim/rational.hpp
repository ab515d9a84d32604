#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace partlim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Round-to-double that stays correct when numerator/denominator each
// overflow the double range (row totals of the exact table have
// thousand-digit denominators long before the values themselves leave
// [0, n]).  Scales the quotient into integer range, converts ~64
// significant bits, and undoes the scaling with exact ldexp.
inline double to_double(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  const BigInt mag = negative ? BigInt(-num) : num;
  const long shift = static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(mag)) + 64;
  BigInt scaled;
  if (shift >= 0) {
    scaled = (mag << shift) / den;
  } else {
    scaled = mag / (den << -shift);
  }
  const double r = std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -r : r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace partlim
