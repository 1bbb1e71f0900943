#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace toric {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q" with the denominator omitted when it is 1.
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Accepts "p" or "p/q"; throws on malformed input or zero denominator.
inline Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

// floor(a/b) for b > 0.
inline long long rat_floor_div(const Rat& a, const Rat& b) {
  BigInt n = numerator(a) * denominator(b);
  BigInt d = denominator(a) * numerator(b);
  BigInt q = n / d;
  if ((n % d) != 0 && ((n < 0) != (d < 0))) q -= 1;
  return q.convert_to<long long>();
}

}  // namespace toric
