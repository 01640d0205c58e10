// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "splitoct/blocks.hpp"
#include "splitoct/polynomial.hpp"
#include "splitoct/random_gen.hpp"
#include "splitoct/rational.hpp"
#include "splitoct/verify.hpp"

using splitoct::build_blocks;
using splitoct::Polynomial16;
using splitoct::Rational;
using splitoct::RationalGen;
using splitoct::toeplitz4_factor_check;

using Oct = splitoct::SplitOctonion<Rational>;

TEST_CASE("block decomposition invariants for the identity multiplier") {
  const auto bd = build_blocks(Oct::one());
  CHECK(toeplitz4_factor_check(bd));
  CHECK(bd.e2_0 == bd.a2 + bd.b2);
  CHECK(bd.f2_0 == bd.a2 - bd.b2);
  CHECK(bd.k2_0 == bd.c2 + bd.d2);
  CHECK(bd.l2_0 == bd.c2 - bd.d2);
}

TEST_CASE("butterfly factorizations hold on random rational multipliers") {
  RationalGen gen(107);
  for (int k = 0; k < 300; ++k) {
    const auto bd = build_blocks(gen.next_octonion());
    CHECK(toeplitz4_factor_check(bd));
  }
}

TEST_CASE("butterfly factorizations hold as symbolic identities") {
  const auto bd = build_blocks(splitoct::verify::symbolic_operands_b());
  CHECK(toeplitz4_factor_check(bd));

  // Spot-check displayed entries. The symmetric part of the first path has
  // b0 - b4 on the diagonal and b1 + b5 adjacent.
  CHECK(bd.e4_1.at(0, 0) == Polynomial16::b(0) - Polynomial16::b(4));
  CHECK(bd.e4_1.at(0, 1) == Polynomial16::b(1) + Polynomial16::b(5));
  CHECK(bd.e4_1.at(1, 2) == Polynomial16::b(3) + Polynomial16::b(7));
  CHECK(bd.f4_1.at(0, 0) == Polynomial16::b(0) + Polynomial16::b(4));
  CHECK(bd.f4_1.at(2, 3) == Polynomial16::b(1) - Polynomial16::b(5));
  // Path matrices: first rows carry the corrected combinations.
  CHECK(bd.e4_0.at(0, 0) == Polynomial16::b(0) + Polynomial16::b(4));
  CHECK(bd.e4_0.at(0, 1) == Polynomial16::b(5) - Polynomial16::b(1));
  CHECK(bd.f4_0.at(0, 0) == Polynomial16::b(0) - Polynomial16::b(4));
  CHECK(bd.f4_0.at(0, 3) == -(Polynomial16::b(3) + Polynomial16::b(7)));
  // Corrections live in row 0 only.
  for (int r = 1; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CHECK(bd.m4_1.at(r, c).is_zero());
      CHECK(bd.m4_2.at(r, c).is_zero());
    }
}

TEST_CASE("factor check fails on a corrupted block") {
  RationalGen gen(109);
  auto bd = build_blocks(gen.next_octonion());
  bd.e4_1.at(1, 2) = bd.e4_1.at(1, 2) + Rational(1);
  CHECK_FALSE(toeplitz4_factor_check(bd));
}
