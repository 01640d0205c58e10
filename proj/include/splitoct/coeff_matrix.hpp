// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Matrix form of right-multiplication: y = x * b rewritten as Y = B8(b) X.
// build_coeff_matrix places signed b-coefficients per the fixed sign/index
// pattern; matvec is a plain dense product (8 multiplications and 7
// additions per row: 64 and 56 in total).

#pragma once

#include <array>
#include <cstdint>

#include "splitoct/split_octonion.hpp"

namespace splitoct {

template <ScalarRing S>
struct CoeffMatrix8 {
  std::array<std::array<S, 8>, 8> rows;

  S& at(int r, int c) { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  const S& at(int r, int c) const {
    return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
};

namespace detail {
struct SignedIndex {
  std::int8_t sign;
  std::uint8_t index;
};
// Entry (r, c) of B8 is sign * b[index]. Column 0 carries b0..b7 unsigned;
// row 0 is (b0, -b1, -b2, -b3, b4, b5, b6, b7).
inline constexpr std::array<std::array<SignedIndex, 8>, 8> kB8Pattern{{
    {{{+1, 0}, {-1, 1}, {-1, 2}, {-1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}}},
    {{{+1, 1}, {+1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {+1, 7}, {-1, 6}}},
    {{{+1, 2}, {-1, 3}, {+1, 0}, {+1, 1}, {+1, 6}, {-1, 7}, {-1, 4}, {+1, 5}}},
    {{{+1, 3}, {+1, 2}, {-1, 1}, {+1, 0}, {+1, 7}, {+1, 6}, {-1, 5}, {-1, 4}}},
    {{{+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}, {+1, 0}, {-1, 1}, {-1, 2}, {-1, 3}}},
    {{{+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}, {+1, 1}, {+1, 0}, {-1, 3}, {+1, 2}}},
    {{{+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}, {+1, 2}, {+1, 3}, {+1, 0}, {-1, 1}}},
    {{{+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}, {+1, 3}, {-1, 2}, {+1, 1}, {+1, 0}}},
}};
}  // namespace detail

/// B8(b): matvec(build_coeff_matrix(b), x) == direct_mul(x, b) for all x.
template <ScalarRing S>
CoeffMatrix8<S> build_coeff_matrix(const SplitOctonion<S>& b) {
  CoeffMatrix8<S> m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      const auto& e = detail::kB8Pattern[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      const S& v = b.c[e.index];
      m.at(r, c) = e.sign > 0 ? v : -v;
    }
  return m;
}

/// Dense 8x8 matrix-vector product. 64 multiplications, 56 additions.
template <ScalarRing S>
SplitOctonion<S> matvec(const CoeffMatrix8<S>& m, const SplitOctonion<S>& x) {
  SplitOctonion<S> y;
  for (int r = 0; r < 8; ++r) {
    S acc = m.at(r, 0) * x.c[0];
    for (int c = 1; c < 8; ++c) acc = acc + m.at(r, c) * x.c[static_cast<std::size_t>(c)];
    y.c[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return y;
}

}  // namespace splitoct
