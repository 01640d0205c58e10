// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// The 8x8 table of signed basis products defining the algebra, stored as
// data so the test surface can compare implementations against exactly this
// artifact. Entry (i, j) is e_i * e_j with the row operand on the left.

#pragma once

#include <array>
#include <cstdint>

#include "splitoct/split_octonion.hpp"

namespace splitoct {

struct TableEntry {
  std::int8_t sign;   // +1 or -1
  std::uint8_t index; // resulting basis unit

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct CayleyTable {
  std::array<std::array<TableEntry, 8>, 8> entries;

  const TableEntry& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

/// The multiplication table. Row = left factor, column = right factor.
inline const CayleyTable& cayley_table() {
  static const CayleyTable table{{{
      // 1      e1       e2       e3       e4       e5       e6       e7
      {{{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}}},  // 1
      {{{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}, {-1, 5}, {+1, 4}, {-1, 7}, {+1, 6}}},  // e1
      {{{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}, {-1, 6}, {+1, 7}, {+1, 4}, {-1, 5}}},  // e2
      {{{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}, {-1, 7}, {-1, 6}, {+1, 5}, {+1, 4}}},  // e3
      {{{+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}, {+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}}},  // e4
      {{{+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}, {-1, 1}, {+1, 0}, {+1, 3}, {-1, 2}}},  // e5
      {{{+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}, {-1, 2}, {-1, 3}, {+1, 0}, {+1, 1}}},  // e6
      {{{+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}, {-1, 3}, {+1, 2}, {-1, 1}, {+1, 0}}},  // e7
  }}};
  return table;
}

/// Basis product e_i * e_j as a full split-octonion, straight from a table.
template <ScalarRing S>
SplitOctonion<S> basis_product(const CayleyTable& table, int i, int j) {
  const TableEntry& e = table.at(i, j);
  SplitOctonion<S> r;
  r.c[e.index] = e.sign > 0 ? ring<S>::one() : -ring<S>::one();
  return r;
}

/// Table-driven product: expands sum_ij x_i b_j (e_i e_j) via lookups.
/// Independent oracle for the coordinate formulas in direct_mul.
template <ScalarRing S>
SplitOctonion<S> table_mul(const SplitOctonion<S>& x, const SplitOctonion<S>& b,
                           const CayleyTable& table = cayley_table()) {
  SplitOctonion<S> out;
  std::array<bool, 8> seeded{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const TableEntry& e = table.at(i, j);
      S term = x.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
      if (!seeded[e.index]) {
        out.c[e.index] = e.sign > 0 ? std::move(term) : -std::move(term);
        seeded[e.index] = true;
      } else {
        out.c[e.index] = e.sign > 0 ? out.c[e.index] + term : out.c[e.index] - term;
      }
    }
  }
  return out;
}

}  // namespace splitoct
