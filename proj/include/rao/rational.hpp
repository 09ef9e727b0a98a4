#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rao {

/// Exact arithmetic type for time and information quantities. Expression
/// templates are off so that `auto` and std::min behave as for builtins.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline BigInt floor_of(const Rational& x) {
  BigInt q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  // integer division truncates toward zero
  if (x < 0 && Rational(q) != x) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& x) {
  BigInt f = floor_of(x);
  return Rational(f) == x ? f : f + 1;
}

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::int64_t to_int64(const BigInt& x) { return x.convert_to<std::int64_t>(); }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& x) {
  if (is_integral(x)) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

namespace detail {

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

/// Parses "7", "-3/4" or "0.0215" into an exact rational. Decimal input is
/// taken literally, so "0.0215" is 43/2000.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_integer(s.substr(0, slash), text);
    BigInt den = detail::parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    BigInt whole = int_part.empty() ? BigInt(0) : detail::parse_integer(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : detail::parse_integer(frac_part, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(detail::parse_integer(s, text));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace rao
