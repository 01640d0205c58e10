// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomial over 16 indeterminates x0..x7, b0..b7 with
// exact rational coefficients. Canonical monomial ordering (lexicographic on
// the exponent vector, zero coefficients erased) makes equality decide
// symbolic identity. This is the oracle scalar for factorization checks.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "splitoct/rational.hpp"
#include "splitoct/scalar_ring.hpp"

namespace splitoct {

class Polynomial16 {
 public:
  static constexpr int kVars = 16;
  using Mono = std::array<std::uint8_t, kVars>;

  Polynomial16() = default;

  static Polynomial16 constant(Rational c) {
    Polynomial16 p;
    if (!c.is_zero()) p.terms_.emplace(Mono{}, std::move(c));
    return p;
  }

  /// Indeterminate by raw index 0..15.
  static Polynomial16 variable(int idx) {
    Mono m{};
    m[static_cast<std::size_t>(idx)] = 1;
    Polynomial16 p;
    p.terms_.emplace(m, Rational(1));
    return p;
  }

  static Polynomial16 x(int i) { return variable(i); }      // x0..x7 -> vars 0..7
  static Polynomial16 b(int i) { return variable(8 + i); }  // b0..b7 -> vars 8..15

  friend Polynomial16 operator+(const Polynomial16& a, const Polynomial16& b) {
    Polynomial16 r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
    return r;
  }
  friend Polynomial16 operator-(const Polynomial16& a, const Polynomial16& b) {
    Polynomial16 r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, -c);
    return r;
  }
  Polynomial16 operator-() const {
    Polynomial16 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Polynomial16 operator*(const Polynomial16& a, const Polynomial16& b) {
    Polynomial16 r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m;
        for (int i = 0; i < kVars; ++i)
          m[static_cast<std::size_t>(i)] =
              static_cast<std::uint8_t>(ma[static_cast<std::size_t>(i)] +
                                        mb[static_cast<std::size_t>(i)]);
        r.accumulate(m, ca * cb);
      }
    return r;
  }

  friend Polynomial16 scale_pow2(const Polynomial16& a, int k) {
    Polynomial16 r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, scale_pow2(c, k));
    return r;
  }

  friend bool operator==(const Polynomial16& a, const Polynomial16& b) {
    return a.terms_ == b.terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Human-readable form, e.g. "x0*b0 - x1*b1 + 1/2*x2".
  std::string str() const {
    static const char* names[kVars] = {"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7",
                                       "b0", "b1", "b2", "b3", "b4", "b5", "b6", "b7"};
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      Rational abs = c < Rational(0) ? -c : c;
      if (out.empty())
        out += c < Rational(0) ? "-" : "";
      else
        out += c < Rational(0) ? " - " : " + ";
      bool has_var = false;
      std::string vars;
      for (int i = 0; i < kVars; ++i) {
        for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) {
          if (has_var) vars += '*';
          vars += names[i];
          has_var = true;
        }
      }
      if (!has_var) {
        out += abs.str();
      } else {
        if (abs != Rational(1)) {
          out += abs.str();
          out += '*';
        }
        out += vars;
      }
    }
    return out;
  }

 private:
  void accumulate(const Mono& m, Rational c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(m, std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Mono, Rational> terms_;
};

template <>
struct ring<Polynomial16> {
  static Polynomial16 zero() { return Polynomial16{}; }
  static Polynomial16 one() { return Polynomial16::constant(Rational(1)); }
};

/// True iff the canonical forms coincide.
inline bool poly_equal(const Polynomial16& p, const Polynomial16& q) { return p == q; }

}  // namespace splitoct
