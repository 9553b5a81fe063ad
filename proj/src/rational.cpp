#include "cyclespace/rational.hpp"

#include <cctype>
#include <sstream>

#include "cyclespace/errors.hpp"

namespace cyclespace {

Rational parse_rational(const std::string& s) {
  if (s.empty()) fail(ErrorCode::BadInput, "empty rational literal");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!valid_int(num) || !valid_int(den))
    fail(ErrorCode::BadInput, "malformed rational literal: " + s);
  mpz_class n(num), d(den);
  if (d <= 0) fail(ErrorCode::BadInput, "nonpositive denominator: " + s);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << '/' << r.get_den();
  return os.str();
}

std::string to_decimal_string(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  mpz_class num = r.get_num(), den = r.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  // round half away from zero
  mpz_class scaled = (2 * num * pow10 + den) / (2 * den);
  mpz_class whole = scaled / pow10, frac = scaled % pow10;
  std::ostringstream os;
  if (neg && (whole != 0 || frac != 0)) os << '-';
  os << whole;
  if (digits > 0) {
    std::string f = frac.get_str();
    os << '.' << std::string(digits - f.size(), '0') << f;
  }
  return os.str();
}

}  // namespace cyclespace
