#pragma once

#include <boost/rational.hpp>

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracton {

/// Exact rational number used by the class-algebra and Farey modules.
/// Always stored in lowest terms with a positive denominator.
using Rational = boost::rational<long long>;

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  long long r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline long long rational_floor(const Rational& r) {
  return floor_div(r.numerator(), r.denominator());
}

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace detail {

inline long long parse_ll(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty numeric field");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  long long value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("invalid digit in rational: " + std::string(s));
    int d = s[i] - '0';
    if (value > (9223372036854775807LL - d) / 10)
      throw std::invalid_argument("rational component overflows: " + std::string(s));
    value = value * 10 + d;
  }
  return s[0] == '-' ? -value : value;
}

}  // namespace detail

/// Parses "a/b", a plain integer, or a finite decimal such as "1.5".
/// Decimals are converted exactly (1.5 -> 3/2), so both spellings of a
/// class label land on the same rational.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long num = detail::parse_ll(text.substr(0, slash));
    long long den = detail::parse_ll(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15)
      throw std::invalid_argument("decimal literal too long: " + std::string(text));
    bool negative = !int_part.empty() && int_part[0] == '-';
    long long whole = int_part.empty() || int_part == "-" || int_part == "+"
                          ? 0
                          : detail::parse_ll(int_part);
    long long scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    long long frac = frac_part.empty() ? 0 : detail::parse_ll(frac_part);
    if (frac < 0) throw std::invalid_argument("malformed decimal: " + std::string(text));
    long long mag = std::llabs(whole) * scale + frac;
    return Rational(negative || whole < 0 ? -mag : mag, scale);
  }

  return Rational(detail::parse_ll(text), 1);
}

}  // namespace fracton
