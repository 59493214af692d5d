#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>

#include "shrinkcy/error.hpp"

namespace shrinkcy {

// Exact arithmetic used everywhere: arbitrary-precision integers and
// rationals. No floating point enters any decision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always build two-argument rationals through here: it normalizes the sign
// of the denominator first.  (boost 1.74's rational<cpp_int> rejects negative
// denominators outright because numeric_limits<cpp_int>::max() is zero, which
// makes its internal "singular denominator" guard fire on every negative one.)
inline Rational rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) return Rational(Int(-num), Int(-den));
  return Rational(num, den);
}

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Division rounding toward -inf / +inf (cpp_int's operator/ truncates to 0).
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error("floor_div by zero");
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// floor(sqrt(n)); requires n >= 0.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw Error("isqrt_floor of negative value");
  return boost::multiprecision::sqrt(n);
}

inline long long to_longlong(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw Error("integer out of machine range: " + v.str());
  return static_cast<long long>(v);
}

inline std::string render_int(const Int& v) { return v.str(); }

// "p" or "p/q" with q > 0 and gcd(p,q)=1 (cpp_rational keeps it canonical).
inline std::string render_rational(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Int parse_int(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw ParseError("sign without digits: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw ParseError("bad integer literal: '" + text + "'", 0,
                       static_cast<int>(j) + 1);
  return Int(text);
}

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) throw ParseError("rational with zero denominator: '" + text + "'");
  return rat(p, q);
}

}  // namespace shrinkcy
