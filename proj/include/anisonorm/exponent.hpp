// Copyright 2026 The anisonorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "anisonorm/errors.hpp"

namespace anisonorm {

/// Exact rational arithmetic (arbitrary precision numerator/denominator).
using Rational = boost::multiprecision::cpp_rational;

/// A real number extended by +infinity, as used for Lebesgue exponents.
/// Reciprocals follow the convention 1/inf = 0.
template <class T>
class Extended {
 public:
  Extended() = default;
  Extended(T value) : value_(std::move(value)) {}  // NOLINT: implicit on purpose

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }
  static Extended from_reciprocal(const T& inverse) {
    if (inverse == T(0)) return infinity();
    return Extended(T(1) / inverse);
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const T& value() const {
    if (infinite_) throw InvalidArgument("finite value requested from an infinite exponent");
    return value_;
  }
  T reciprocal() const { return infinite_ ? T(0) : T(1) / value_; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

 private:
  T value_{};
  bool infinite_ = false;
};

/// Floating-point Lebesgue exponent in [1, inf].
using Exponent = Extended<double>;
using ExactExponent = Extended<Rational>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Exponent to_double(const ExactExponent& e) {
  return e.is_infinite() ? Exponent::infinity() : Exponent(to_double(e.value()));
}

/// Double value of an exponent, with +inf for the infinite element.
inline double as_ieee(const Exponent& e) {
  return e.is_infinite() ? std::numeric_limits<double>::infinity() : e.value();
}

inline Exponent from_ieee(double x) {
  return std::isinf(x) && x > 0 ? Exponent::infinity() : Exponent(x);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool is_infinity_token(std::string_view s) {
  return s == "inf" || s == "Inf" || s == "INF" || s == "infinity" || s == "+inf" ||
         s == "∞";
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "3.5", "-2", "8/3", "1e-3" (integer exponent only) or "inf" exactly.
/// Returns nullopt if the text is not an exact decimal or fraction.
inline std::optional<ExactExponent> parse_exact(std::string_view text) {
  using boost::multiprecision::cpp_int;
  text = detail::trim(text);
  if (detail::is_infinity_token(text)) return ExactExponent::infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_exact(text.substr(0, slash));
    auto den = parse_exact(text.substr(slash + 1));
    if (!num || !den || num->is_infinite() || den->is_infinite() || den->value() == 0)
      return std::nullopt;
    return ExactExponent(num->value() / den->value());
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    auto etext = text.substr(e + 1);
    auto [ptr, ec] = std::from_chars(etext.data(), etext.data() + etext.size(), exp10);
    if (ec != std::errc() || ptr != etext.data() + etext.size()) return std::nullopt;
    text = text.substr(0, e);
  }
  std::string digits;
  long long frac_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto ip = text.substr(0, dot);
    auto fp = text.substr(dot + 1);
    if ((!ip.empty() && !detail::all_digits(ip)) || (!fp.empty() && !detail::all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      return std::nullopt;
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long long>(fp.size());
  } else {
    if (!detail::all_digits(text)) return std::nullopt;
    digits = std::string(text);
  }
  if (digits.empty()) return std::nullopt;
  // cpp_int reads a leading 0 as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{cpp_int(digits)};
  long long shift = exp10 - frac_digits;
  cpp_int ten_pow = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  if (shift < 0)
    value /= Rational(ten_pow);
  else
    value *= Rational(ten_pow);
  if (negative) value = -value;
  return ExactExponent(value);
}

/// Parses a floating exponent; accepts everything parse_exact does plus any
/// finite double literal.
inline std::optional<Exponent> parse_exponent(std::string_view text) {
  text = detail::trim(text);
  if (auto exact = parse_exact(text)) return to_double(*exact);
  double x = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x))
    return std::nullopt;
  return Exponent(x);
}

/// "22/7", "2", "-1/3".
inline std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const ExactExponent& e) {
  return e.is_infinite() ? std::string("inf") : to_string(e.value());
}

/// Shortest round-trip decimal representation.
inline std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

inline std::string to_string(const Exponent& e) {
  return e.is_infinite() ? std::string("inf") : format_double(e.value());
}

}  // namespace anisonorm
