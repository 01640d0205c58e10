// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "splitoct/counting.hpp"
#include "splitoct/polynomial.hpp"
#include "splitoct/random_gen.hpp"
#include "splitoct/rational.hpp"

using splitoct::Counting;
using splitoct::OpCounts;
using splitoct::OpTally;
using splitoct::Polynomial16;
using splitoct::Rational;
using splitoct::RationalGen;
using splitoct::with_counting;

TEST_CASE("rational canonical form") {
  Rational r(6, 4);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(2, -4).denominator() == 2);
  CHECK(Rational(2, -4).numerator() == -1);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-8, 4).str() == "-2");
}

TEST_CASE("rational exactness on random values") {
  RationalGen gen(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = gen.next();
    const Rational b = gen.next();
    CHECK((a + b) - b == a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a * b) * (Rational(1) / b) == a);
  }
  // force multi-word integers
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007, 3);
  CHECK((big + Rational(1, 3)) - Rational(1, 3) == big);
}

TEST_CASE("rational scale_pow2") {
  CHECK(scale_pow2(Rational(3), 4) == Rational(48));
  CHECK(scale_pow2(Rational(5, 3), -2) == Rational(5, 12));
  CHECK(scale_pow2(Rational(0), 10) == Rational(0));
  CHECK(scale_pow2(Rational(7, 2), -1) == Rational(7, 4));
}

TEST_CASE("rational parsing") {
  CHECK(*Rational::parse("3/2") == Rational(3, 2));
  CHECK(*Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(*Rational::parse("1.5") == Rational(3, 2));
  CHECK(*Rational::parse("-2") == Rational(-2));
  CHECK(*Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(*Rational::parse(".5") == Rational(1, 2));
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("abc").has_value());
  CHECK_FALSE(Rational::parse("1.2.3").has_value());
  CHECK_FALSE(Rational::parse("1.-5").has_value());
}

TEST_CASE("counting fidelity for a hand-written straight-line program") {
  // (a+b)*(c-d) scaled by 2^3, then negated: 1 mul, 2 adds, 1 shift.
  auto [value, counts] = with_counting<Rational>([](auto lift) {
    auto a = lift(Rational(1)), b = lift(Rational(2));
    auto c = lift(Rational(5)), d = lift(Rational(3));
    return -scale_pow2((a + b) * (c - d), 3);
  });
  CHECK(value == Counting<Rational>(Rational(-48)));
  CHECK(counts == OpCounts{1, 2, 1});
}

TEST_CASE("computation with no arithmetic counts nothing") {
  auto [value, counts] = with_counting<Rational>([](auto lift) { return lift(Rational(5)); });
  CHECK(value.value() == Rational(5));
  CHECK(counts == OpCounts{0, 0, 0});
}

TEST_CASE("negation is free, shifts are not multiplications") {
  auto [value, counts] = with_counting<Rational>([](auto lift) {
    auto a = lift(Rational(3));
    auto b = -(-a);
    return scale_pow2(b, -1);
  });
  CHECK(value.value() == Rational(3, 2));
  CHECK(counts == OpCounts{0, 0, 1});
}

TEST_CASE("op counts are additive") {
  OpCounts a{1, 2, 3}, b{4, 5, 6};
  CHECK(a + b == OpCounts{5, 7, 9});
}

TEST_CASE("float results track rational results") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto draw = [&] {
      return Rational(static_cast<long long>(rng() % 2000001) - 1000000, 1000);
    };
    const Rational a = draw(), b = draw(), c = draw();
    const Rational exact = a * b + c * (a - b);
    const double approx = a.to_double() * b.to_double() + c.to_double() * (a.to_double() - b.to_double());
    const double reference = exact.to_double();
    const double scale = std::max(1.0, std::abs(reference));
    CHECK(std::abs(approx - reference) / scale <= 1e-12);
  }
}

namespace {
Polynomial16 random_poly(std::mt19937_64& rng) {
  Polynomial16 p = Polynomial16::constant(Rational(static_cast<long long>(rng() % 7) - 3));
  const int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Polynomial16 mono = Polynomial16::constant(Rational(static_cast<long long>(rng() % 9) - 4));
    const int degree = 1 + static_cast<int>(rng() % 2);
    for (int d = 0; d < degree; ++d) mono = mono * Polynomial16::variable(static_cast<int>(rng() % 16));
    p = p + mono;
  }
  return p;
}
}  // namespace

TEST_CASE("polynomial ring laws") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Polynomial16 p = random_poly(rng);
    const Polynomial16 q = random_poly(rng);
    const Polynomial16 r = random_poly(rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK(p - p == Polynomial16{});
  }
}

TEST_CASE("poly_equal decides symbolic identity") {
  const Polynomial16 x0 = Polynomial16::x(0);
  const Polynomial16 b0 = Polynomial16::b(0);
  CHECK(splitoct::poly_equal(x0 * b0, x0 * b0));
  CHECK(splitoct::poly_equal(x0 * b0, b0 * x0));  // commutative scalars
  CHECK_FALSE(splitoct::poly_equal(x0 * b0, x0 * Polynomial16::b(1)));
  CHECK(splitoct::poly_equal(scale_pow2(x0, 3), x0 + x0 + x0 + x0 + x0 + x0 + x0 + x0));
}

TEST_CASE("polynomial rendering") {
  const Polynomial16 p = Polynomial16::x(0) * Polynomial16::b(0) -
                         scale_pow2(Polynomial16::x(1), -1);
  CHECK(p.str() == "-1/2*x1 + x0*b0");
}
