// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Text form of a split-octonion: exactly 8 comma-separated scalars, each a
// decimal ("1.5", "-2") or an exact rational ("-3/7"). Parsing is exact;
// printing is canonical, so parse-then-print round-trips.

#pragma once

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "splitoct/rational.hpp"
#include "splitoct/split_octonion.hpp"

namespace splitoct {

inline std::optional<SplitOctonion<Rational>> parse_octonion_text(std::string_view text) {
  std::array<Rational, 8> coeffs;
  std::size_t field = 0;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view piece =
        comma == std::string_view::npos ? text : text.substr(0, comma);
    if (field >= 8) return std::nullopt;
    auto value = Rational::parse(piece);
    if (!value) return std::nullopt;
    coeffs[field++] = std::move(*value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (field != 8) return std::nullopt;
  return SplitOctonion<Rational>(std::move(coeffs));
}

inline std::string format_octonion_text(const SplitOctonion<Rational>& o) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += o.c[i].str();
  }
  return out;
}

/// Shortest round-trip representation of a double.
inline std::string format_double(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

inline std::string format_octonion_text(const SplitOctonion<double>& o) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += format_double(o.c[i]);
  }
  return out;
}

inline SplitOctonion<double> to_double_octonion(const SplitOctonion<Rational>& o) {
  SplitOctonion<double> r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = o.c[i].to_double();
  return r;
}

}  // namespace splitoct
