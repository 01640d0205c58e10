// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic rational generators for the verification harness.
// Numerators are drawn from [-99, 99] and denominators from [1, 99]:
// small enough for fast exact arithmetic, large enough to avoid
// accidental structure. Draws are reduced from raw mt19937_64 output so
// the stream is identical for a given seed on every platform.

#pragma once

#include <cstdint>
#include <random>

#include "splitoct/rational.hpp"
#include "splitoct/split_octonion.hpp"

namespace splitoct {

class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    const auto num = static_cast<long long>(rng_() % 199) - 99;
    const auto den = static_cast<long long>(rng_() % 99) + 1;
    return Rational(num, den);
  }

  SplitOctonion<Rational> next_octonion() {
    SplitOctonion<Rational> o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = next();
    return o;
  }

 private:
  std::mt19937_64 rng_;
};

class DoubleGen {
 public:
  DoubleGen(std::uint64_t seed, double magnitude) : rng_(seed), magnitude_(magnitude) {}

  double next() {
    // 53 uniform bits in [0, 1), then scaled to [-magnitude, magnitude].
    const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return (2.0 * unit - 1.0) * magnitude_;
  }

  SplitOctonion<double> next_octonion() {
    SplitOctonion<double> o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = next();
    return o;
  }

 private:
  std::mt19937_64 rng_;
  double magnitude_;
};

}  // namespace splitoct
