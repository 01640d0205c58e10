// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Split-octonion value type over a generic scalar ring, with the schoolbook
// (coordinate-formula) product. Basis: e0 = 1; e1..e3 square to -1, e4..e7
// square to +1. This product is the ground-truth oracle for everything else.

#pragma once

#include <array>
#include <cstddef>

#include "splitoct/scalar_ring.hpp"

namespace splitoct {

template <ScalarRing S>
struct SplitOctonion {
  /// coeffs[i] multiplies basis unit e_i (e0 = 1).
  std::array<S, 8> c;

  SplitOctonion() : c{ring<S>::zero(), ring<S>::zero(), ring<S>::zero(), ring<S>::zero(),
                      ring<S>::zero(), ring<S>::zero(), ring<S>::zero(), ring<S>::zero()} {}
  explicit SplitOctonion(std::array<S, 8> coeffs) : c(std::move(coeffs)) {}

  static SplitOctonion zero() { return SplitOctonion{}; }
  static SplitOctonion one() { return basis(0); }
  static SplitOctonion basis(int i) {
    SplitOctonion o;
    o.c[static_cast<std::size_t>(i)] = ring<S>::one();
    return o;
  }

  S& operator[](std::size_t i) { return c[i]; }
  const S& operator[](std::size_t i) const { return c[i]; }

  friend bool operator==(const SplitOctonion& a, const SplitOctonion& b) { return a.c == b.c; }
};

template <ScalarRing S>
SplitOctonion<S> operator+(const SplitOctonion<S>& a, const SplitOctonion<S>& b) {
  SplitOctonion<S> r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <ScalarRing S>
SplitOctonion<S> operator-(const SplitOctonion<S>& a, const SplitOctonion<S>& b) {
  SplitOctonion<S> r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

template <ScalarRing S>
SplitOctonion<S> operator-(const SplitOctonion<S>& a) {
  SplitOctonion<S> r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

template <ScalarRing S>
SplitOctonion<S> scalar_mul(const S& s, const SplitOctonion<S>& a) {
  SplitOctonion<S> r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
  return r;
}

/// Real part unchanged, e1..e7 coefficients negated.
template <ScalarRing S>
SplitOctonion<S> conjugate(const SplitOctonion<S>& a) {
  SplitOctonion<S> r = a;
  for (std::size_t i = 1; i < 8; ++i) r.c[i] = -a.c[i];
  return r;
}

/// Schoolbook product y = x * b, written out coordinate by coordinate.
/// 64 scalar multiplications, 56 additions. Multiplication is not
/// commutative: x is the left operand throughout this library.
template <ScalarRing S>
SplitOctonion<S> direct_mul(const SplitOctonion<S>& x, const SplitOctonion<S>& b) {
  const std::array<S, 8>& a = x.c;
  const std::array<S, 8>& d = b.c;
  SplitOctonion<S> y;
  y.c[0] = a[0] * d[0] - a[1] * d[1] - a[2] * d[2] - a[3] * d[3] + a[4] * d[4] + a[5] * d[5] + a[6] * d[6] + a[7] * d[7];
  y.c[1] = a[0] * d[1] + a[1] * d[0] + a[2] * d[3] - a[3] * d[2] + a[4] * d[5] - a[5] * d[4] + a[6] * d[7] - a[7] * d[6];
  y.c[2] = a[0] * d[2] - a[1] * d[3] + a[2] * d[0] + a[3] * d[1] + a[4] * d[6] - a[5] * d[7] - a[6] * d[4] + a[7] * d[5];
  y.c[3] = a[0] * d[3] + a[1] * d[2] - a[2] * d[1] + a[3] * d[0] + a[4] * d[7] + a[5] * d[6] - a[6] * d[5] - a[7] * d[4];
  y.c[4] = a[0] * d[4] + a[1] * d[5] + a[2] * d[6] + a[3] * d[7] + a[4] * d[0] - a[5] * d[1] - a[6] * d[2] - a[7] * d[3];
  y.c[5] = a[0] * d[5] - a[1] * d[4] - a[2] * d[7] + a[3] * d[6] + a[4] * d[1] + a[5] * d[0] - a[6] * d[3] + a[7] * d[2];
  y.c[6] = a[0] * d[6] + a[1] * d[7] - a[2] * d[4] - a[3] * d[5] + a[4] * d[2] + a[5] * d[3] + a[6] * d[0] - a[7] * d[1];
  y.c[7] = a[0] * d[7] - a[1] * d[6] + a[2] * d[5] - a[3] * d[4] + a[4] * d[3] - a[5] * d[2] + a[6] * d[1] + a[7] * d[0];
  return y;
}

template <ScalarRing S>
SplitOctonion<S> operator*(const SplitOctonion<S>& x, const SplitOctonion<S>& b) {
  return direct_mul(x, b);
}

/// Signature-(4,4) quadratic form: the real part of o * conjugate(o),
/// i.e. c0^2 + c1^2 + c2^2 + c3^2 - c4^2 - c5^2 - c6^2 - c7^2.
template <ScalarRing S>
S quadratic_form(const SplitOctonion<S>& o) {
  const std::array<S, 8>& a = o.c;
  return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] -
         a[4] * a[4] - a[5] * a[5] - a[6] * a[6] - a[7] * a[7];
}

}  // namespace splitoct
