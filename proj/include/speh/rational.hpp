#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "speh/error.hpp"

namespace speh {

/// Exact rational number. Every quantity in the library is exact; there is no
/// floating point anywhere on a verification path.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p", "p/q". Throws ParseError with the offending position.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](std::size_t pos, const char* what) {
    throw Error(ErrorCode::ParseError, std::string(what) + " at position " +
                                           std::to_string(pos) + " in '" +
                                           std::string(text) + "'");
  };
  if (text.empty()) fail(0, "empty rational");
  auto parse_int = [&](std::size_t begin, std::size_t end, bool allow_sign) {
    std::size_t i = begin;
    bool neg = false;
    if (allow_sign && i < end && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i == end) fail(i, "expected digit");
    Integer v = 0;
    for (; i < end; ++i) {
      if (text[i] < '0' || text[i] > '9') fail(i, "unexpected character");
      v = v * 10 + (text[i] - '0');
    }
    return neg ? Integer(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(0, text.size(), true));
  Integer num = parse_int(0, slash, true);
  Integer den = parse_int(slash + 1, text.size(), false);
  if (den == 0) fail(slash + 1, "zero denominator");
  return Rational(num, den);
}

inline std::int64_t to_int64(const Rational& q) {
  if (denominator(q) != 1) throw Error(ErrorCode::Internal, "non-integral value " + to_string(q));
  return numerator(q).convert_to<std::int64_t>();
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = boost::multiprecision::gcd(a, b);
  return boost::multiprecision::abs(a / g * b);
}

}  // namespace speh
