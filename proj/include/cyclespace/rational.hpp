#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cyclespace {

// Exact scalar used throughout. GMP keeps fractions canonical
// (gcd-reduced, positive denominator).
using Rational = mpq_class;

using Vec = std::vector<Rational>;

// Parses "p/q" or "p". Throws Error(BadInput) on malformed input or q <= 0.
Rational parse_rational(const std::string& s);

// Canonical form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Decimal approximation with the given number of fractional digits,
// for display only.
std::string to_decimal_string(const Rational& r, int digits);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& r) { return ::abs(r); }

}  // namespace cyclespace
