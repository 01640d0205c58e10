// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Intermediate block decomposition behind the fast schedule, kept as
// inspectable data for tests and documentation. The two 4x4 path matrices
// split into a symmetric XOR-pattern part plus a doubled single-row
// correction; the symmetric parts factor through H2 butterflies down to
// diagonal 2x2 stages. toeplitz4_factor_check verifies those factorizations
// entry-wise over any scalar ring (symbolic scalars make it an identity
// check rather than a sample check).

#pragma once

#include <array>
#include <cstddef>

#include "splitoct/scalar_ring.hpp"
#include "splitoct/split_octonion.hpp"

namespace splitoct {

template <ScalarRing S, int N>
struct SmallMat {
  std::array<S, static_cast<std::size_t>(N) * N> a;

  SmallMat() { a.fill(ring<S>::zero()); }

  S& at(int r, int c) { return a[static_cast<std::size_t>(r * N + c)]; }
  const S& at(int r, int c) const { return a[static_cast<std::size_t>(r * N + c)]; }

  friend bool operator==(const SmallMat& x, const SmallMat& y) { return x.a == y.a; }

  friend SmallMat operator+(const SmallMat& x, const SmallMat& y) {
    SmallMat r;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }
  friend SmallMat operator-(const SmallMat& x, const SmallMat& y) {
    SmallMat r;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }
  friend SmallMat operator*(const SmallMat& x, const SmallMat& y) {
    SmallMat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        S acc = x.at(i, 0) * y.at(0, j);
        for (int k = 1; k < N; ++k) acc = acc + x.at(i, k) * y.at(k, j);
        r.at(i, j) = std::move(acc);
      }
    return r;
  }

  friend SmallMat scale_pow2(const SmallMat& x, int k) {
    SmallMat r;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = scale_pow2(x.a[i], k);
    return r;
  }
};

template <ScalarRing S>
using Mat2 = SmallMat<S, 2>;
template <ScalarRing S>
using Mat4 = SmallMat<S, 4>;

namespace detail {

template <ScalarRing S>
Mat2<S> sym2(const S& diag, const S& off) {
  Mat2<S> m;
  m.at(0, 0) = diag;
  m.at(0, 1) = off;
  m.at(1, 0) = off;
  m.at(1, 1) = diag;
  return m;
}

/// H2 (x) I2: the 4x4 block butterfly with +/-1 entries.
template <ScalarRing S>
Mat4<S> h2_kron_i2() {
  Mat4<S> m;
  const S one = ring<S>::one();
  m.at(0, 0) = one; m.at(0, 2) = one;
  m.at(1, 1) = one; m.at(1, 3) = one;
  m.at(2, 0) = one; m.at(2, 2) = -one;
  m.at(3, 1) = one; m.at(3, 3) = -one;
  return m;
}

template <ScalarRing S>
Mat2<S> h2() {
  Mat2<S> m;
  const S one = ring<S>::one();
  m.at(0, 0) = one; m.at(0, 1) = one;
  m.at(1, 0) = one; m.at(1, 1) = -one;
  return m;
}

template <ScalarRing S>
Mat4<S> direct_sum(const Mat2<S>& top, const Mat2<S>& bottom) {
  Mat4<S> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m.at(i, j) = top.at(i, j);
      m.at(i + 2, j + 2) = bottom.at(i, j);
    }
  return m;
}

}  // namespace detail

/// All named blocks of the decomposition, built from one multiplier b.
template <ScalarRing S>
struct BlockDecomposition {
  Mat4<S> e4_0, f4_0;    // the two path matrices
  Mat4<S> e4_1, f4_1;    // their symmetric XOR-pattern parts
  Mat4<S> m4_1, m4_2;    // single-nonzero-row corrections
  Mat2<S> a2, b2, c2, d2;
  Mat2<S> e2_0, f2_0, k2_0, l2_0;  // 2x2 sum/difference stages
};

template <ScalarRing S>
BlockDecomposition<S> build_blocks(const SplitOctonion<S>& b) {
  const std::array<S, 8>& v = b.c;
  const S t0 = v[0] - v[4], t1 = v[1] + v[5], t2 = v[2] + v[6], t3 = v[3] + v[7];
  const S u0 = v[0] + v[4], u1 = v[1] - v[5], u2 = v[2] - v[6], u3 = v[3] - v[7];

  BlockDecomposition<S> bd;
  bd.a2 = detail::sym2(t0, t1);
  bd.b2 = detail::sym2(t2, t3);
  bd.c2 = detail::sym2(u0, u1);
  bd.d2 = detail::sym2(u2, u3);
  bd.e2_0 = bd.a2 + bd.b2;
  bd.f2_0 = bd.a2 - bd.b2;
  bd.k2_0 = bd.c2 + bd.d2;
  bd.l2_0 = bd.c2 - bd.d2;

  // Symmetric parts: entry (i, j) carries the (i XOR j)-th combination.
  const std::array<const S*, 4> ts = {&t0, &t1, &t2, &t3};
  const std::array<const S*, 4> us = {&u0, &u1, &u2, &u3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bd.e4_1.at(i, j) = *ts[static_cast<std::size_t>(i ^ j)];
      bd.f4_1.at(i, j) = *us[static_cast<std::size_t>(i ^ j)];
    }

  // Single-row corrections (row 0 only).
  bd.m4_1.at(0, 0) = v[4];
  bd.m4_1.at(0, 1) = -v[1];
  bd.m4_1.at(0, 2) = -v[2];
  bd.m4_1.at(0, 3) = -v[3];
  bd.m4_2.at(0, 0) = -v[4];
  bd.m4_2.at(0, 1) = -v[1];
  bd.m4_2.at(0, 2) = -v[2];
  bd.m4_2.at(0, 3) = -v[3];

  // Path matrices: symmetric part corrected in the first row.
  bd.e4_0 = bd.e4_1;
  bd.e4_0.at(0, 0) = v[0] + v[4];
  bd.e4_0.at(0, 1) = v[5] - v[1];
  bd.e4_0.at(0, 2) = v[6] - v[2];
  bd.e4_0.at(0, 3) = v[7] - v[3];
  bd.f4_0 = bd.f4_1;
  bd.f4_0.at(0, 0) = v[0] - v[4];
  bd.f4_0.at(0, 1) = -v[1] - v[5];
  bd.f4_0.at(0, 2) = -v[2] - v[6];
  bd.f4_0.at(0, 3) = -v[3] - v[7];
  return bd;
}

/// Verifies the butterfly factorizations entry-wise:
///   e4_1 == (H2 (x) I2) * 1/2 [(A2+B2) (+) (A2-B2)] * (H2 (x) I2)
///   f4_1 == (H2 (x) I2) * 1/2 [(C2+D2) (+) (C2-D2)] * (H2 (x) I2)
/// the four 2x2 stages [[a,b],[b,a]] == H2 * 1/2 [(a+b) (+) (a-b)] * H2,
/// and the sum decompositions e4_0 == e4_1 + 2*m4_1, f4_0 == f4_1 + 2*m4_2.
template <ScalarRing S>
bool toeplitz4_factor_check(const BlockDecomposition<S>& bd) {
  const Mat4<S> butterfly = detail::h2_kron_i2<S>();
  const Mat4<S> lhs_e =
      butterfly * scale_pow2(detail::direct_sum(bd.a2 + bd.b2, bd.a2 - bd.b2), -1) * butterfly;
  const Mat4<S> lhs_f =
      butterfly * scale_pow2(detail::direct_sum(bd.c2 + bd.d2, bd.c2 - bd.d2), -1) * butterfly;
  if (!(lhs_e == bd.e4_1) || !(lhs_f == bd.f4_1)) return false;

  const Mat2<S> h = detail::h2<S>();
  auto check2 = [&](const Mat2<S>& m) {
    const S& dg = m.at(0, 0);
    const S& off = m.at(0, 1);
    Mat2<S> mid;
    mid.at(0, 0) = scale_pow2(dg + off, -1);
    mid.at(1, 1) = scale_pow2(dg - off, -1);
    return h * mid * h == m;
  };
  if (!check2(bd.e2_0) || !check2(bd.f2_0) || !check2(bd.k2_0) || !check2(bd.l2_0)) return false;

  const Mat4<S> two_m1 = scale_pow2(bd.m4_1, 1);
  const Mat4<S> two_m2 = scale_pow2(bd.m4_2, 1);
  return bd.e4_0 == bd.e4_1 + two_m1 && bd.f4_0 == bd.f4_1 + two_m2;
}

}  // namespace splitoct
