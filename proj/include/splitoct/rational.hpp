// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Exact rational scalar over arbitrary-precision integers. Canonical form
// (gcd = 1, positive denominator) is maintained by the underlying
// boost::multiprecision::cpp_rational after every operation.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "splitoct/scalar_ring.hpp"

namespace splitoct {

class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(int v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) {
    if (den < 0) {  // keep the denominator positive
      num = -num;
      den = -den;
    }
    v_.assign(boost::multiprecision::cpp_rational(std::move(num), std::move(den)));
  }
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }

  double to_double() const { return v_.convert_to<double>(); }

  /// Canonical text: "p" when the denominator is 1, else "p/q".
  std::string str() const {
    std::ostringstream os;
    os << numerator();
    if (denominator() != 1) os << '/' << denominator();
    return os.str();
  }

  /// Parses "p", "p/q", or a plain decimal like "-1.25" (exact).
  static std::optional<Rational> parse(std::string_view text);

 private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational scale_pow2(const Rational& v, int k) {
  Rational::Int two = 1;
  if (k >= 0) return v * Rational(two << k, 1);
  return v * Rational(1, two << -k);
}

template <>
struct ring<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto parse_int = [&](std::string_view s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) return std::nullopt;
    Int acc = 0;
    for (; i < s.size(); ++i) {
      if (!is_digit(s[i])) return std::nullopt;
      acc = acc * 10 + (s[i] - '0');
    }
    return neg ? -acc : acc;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    for (char c : frac)
      if (!is_digit(c)) return std::nullopt;
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.remove_prefix(1);
    if (head.empty()) head = "0";
    auto whole = parse_int(head);
    auto digits = parse_int(frac);
    if (!whole || !digits) return std::nullopt;
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Int num = *whole * den + *digits;
    if (neg) num = -num;
    return Rational(num, den);
  }
  auto num = parse_int(text);
  if (!num) return std::nullopt;
  return Rational(*num, 1);
}

}  // namespace splitoct
