// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Ring abstraction every algorithm in this library is generic over.
// A scalar ring provides +, -, unary -, *, equality, zero/one, and
// scale_pow2 (multiplication by 2^k, kept distinct from * so that
// instrumented scalars can tally it as a shift instead of a product).

#pragma once

#include <cmath>
#include <concepts>
#include <type_traits>

namespace splitoct {

/// Zero/one constants for a scalar type. Specialize for non-arithmetic rings.
template <typename S>
struct ring {
  static constexpr S zero() { return S{0}; }
  static constexpr S one() { return S{1}; }
};

/// scale_pow2 for built-in integers: an arithmetic shift, exact.
template <std::integral T>
constexpr T scale_pow2(T v, int k) {
  return k >= 0 ? T(v << k) : T(v >> -k);
}

/// scale_pow2 for floats: exact scaling of the exponent.
template <std::floating_point T>
T scale_pow2(T v, int k) {
  return std::ldexp(v, k);
}

/// The contract all multiplication algorithms are written against.
template <typename S>
concept ScalarRing =
    std::copy_constructible<S> && std::equality_comparable<S> &&
    requires(const S a, const S b, int k) {
      { a + b } -> std::convertible_to<S>;
      { a - b } -> std::convertible_to<S>;
      { a * b } -> std::convertible_to<S>;
      { -a } -> std::convertible_to<S>;
      { scale_pow2(a, k) } -> std::convertible_to<S>;
      { ring<S>::zero() } -> std::convertible_to<S>;
      { ring<S>::one() } -> std::convertible_to<S>;
    };

}  // namespace splitoct
