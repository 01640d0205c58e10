// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// The reduced-multiplication product as an explicit straight-line program:
//
//   prep   b0..b7 -> 28 coefficients      (24 additions, 14 shifts, no muls)
//   pre_x  x0..x7 -> working tape         (24 additions)
//   mul    28 coefficient multiplications (the only real multiplications)
//   post   products -> y0..y7             (44 additions)
//
// 28 multiplications and 92 additions in total versus 64 and 56 for the
// schoolbook product; 28 + 92 == 64 + 56. The schedule splits the product
// into two half-size paths acting on x_lo +/- x_hi. Each path is a
// symmetric XOR-pattern matrix diagonalized by a 4-point Hadamard butterfly
// (4 coefficient multiplications each), plus a first-row correction driven
// by diag(b4, b1, b2, b3) (4 multiplications each). A final coupling stage
// of six two-term dot pairs (12 multiplications with doubled coefficients)
// absorbs the asymmetry between the two halves. All power-of-two factors
// are folded into the prepared coefficients.
//
// The schedule is data: it can be interpreted over any scalar ring,
// audited structurally, or replayed symbolically. An unrolled evaluator
// performs the identical operations in the identical order.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "splitoct/counting.hpp"
#include "splitoct/scalar_ring.hpp"
#include "splitoct/split_octonion.hpp"

namespace splitoct {

enum class StepOp : std::uint8_t { add, sub, shift, mul };

/// One tape instruction. add/sub: tape[dst] = tape[lhs] +/- tape[rhs].
/// shift: tape[dst] = tape[lhs] * 2^pow. mul: tape[dst] = tape[lhs] *
/// coeff[rhs] -- the only way a schedule multiplies.
struct Step {
  StepOp op;
  std::uint16_t dst;
  std::uint16_t lhs;
  std::uint16_t rhs;
  std::int8_t pow;

  friend bool operator==(const Step&, const Step&) = default;
};

struct MulSchedule {
  // b-side preparation; tape seeded with b0..b7.
  std::vector<Step> prep_steps;
  std::uint16_t prep_tape_size = 0;
  std::array<std::uint16_t, 28> coeff_slots{};

  // x-side; tape seeded with x0..x7.
  std::vector<Step> pre_x;
  std::array<Step, 28> mul_steps{};
  std::vector<Step> post;
  std::uint16_t x_tape_size = 0;
  std::array<std::uint16_t, 8> y_slots{};
};

namespace detail {

inline MulSchedule build_canonical_schedule() {
  MulSchedule s;

  // ---- b-side preparation ----
  std::uint16_t bn = 8;
  auto padd = [&](std::uint16_t a, std::uint16_t b) {
    s.prep_steps.push_back({StepOp::add, bn, a, b, 0});
    return bn++;
  };
  auto psub = [&](std::uint16_t a, std::uint16_t b) {
    s.prep_steps.push_back({StepOp::sub, bn, a, b, 0});
    return bn++;
  };
  auto pshift = [&](std::uint16_t a, std::int8_t k) {
    s.prep_steps.push_back({StepOp::shift, bn, a, 0, k});
    return bn++;
  };

  constexpr std::uint16_t B0 = 0, B1 = 1, B2 = 2, B3 = 3, B4 = 4, B5 = 5, B6 = 6, B7 = 7;
  // Half-sums feeding the two paths.
  const auto t0 = psub(B0, B4), t1 = padd(B1, B5), t2 = padd(B2, B6), t3 = padd(B3, B7);
  const auto u0 = padd(B0, B4), u1 = psub(B1, B5), u2 = psub(B2, B6), u3 = psub(B3, B7);
  // Hadamard spectra of the two XOR-pattern blocks.
  const auto a0 = padd(t0, t2), a1 = padd(t1, t3), a2 = psub(t0, t2), a3 = psub(t1, t3);
  const auto c0 = padd(a0, a1), c1 = psub(a0, a1), c2 = padd(a2, a3), c3 = psub(a2, a3);
  const auto k0 = padd(u0, u2), k1 = padd(u1, u3), k2 = psub(u0, u2), k3 = psub(u1, u3);
  const auto c4 = padd(k0, k1), c5 = psub(k0, k1), c6 = padd(k2, k3), c7 = psub(k2, k3);
  // Fold the butterfly 1/8 into the spectrum coefficients.
  const auto g0 = pshift(c0, -3), g1 = pshift(c1, -3), g2 = pshift(c2, -3), g3 = pshift(c3, -3);
  const auto g4 = pshift(c4, -3), g5 = pshift(c5, -3), g6 = pshift(c6, -3), g7 = pshift(c7, -3);
  // Doubled coefficients for the coupling stage.
  const auto d1 = pshift(B1, 1), d2 = pshift(B2, 1), d3 = pshift(B3, 1);
  const auto d5 = pshift(B5, 1), d6 = pshift(B6, 1), d7 = pshift(B7, 1);
  s.prep_tape_size = bn;
  s.coeff_slots = {g0, g1, g2, g3, g4, g5, g6, g7,
                   B4, B1, B2, B3, B4, B1, B2, B3,
                   d2, d6, d3, d7, d1, d5,
                   d7, d3, d5, d1, d6, d2};

  // ---- x-side pre-addition network ----
  std::uint16_t xn = 8;
  auto xadd = [&](std::vector<Step>& out, std::uint16_t a, std::uint16_t b) {
    out.push_back({StepOp::add, xn, a, b, 0});
    return xn++;
  };
  auto xsub = [&](std::vector<Step>& out, std::uint16_t a, std::uint16_t b) {
    out.push_back({StepOp::sub, xn, a, b, 0});
    return xn++;
  };

  constexpr std::uint16_t X0 = 0, X1 = 1, X2 = 2, X3 = 3, X4 = 4, X5 = 5, X6 = 6, X7 = 7;
  auto& pre = s.pre_x;
  const auto s0 = xadd(pre, X0, X4), s1 = xadd(pre, X1, X5);
  const auto s2 = xadd(pre, X2, X6), s3 = xadd(pre, X3, X7);
  const auto e0 = xsub(pre, X0, X4), e1 = xsub(pre, X1, X5);
  const auto e2 = xsub(pre, X2, X6), e3 = xsub(pre, X3, X7);
  const auto p0 = xadd(pre, s0, s2), p1 = xadd(pre, s1, s3);
  const auto p2 = xsub(pre, s0, s2), p3 = xsub(pre, s1, s3);
  const auto uu0 = xadd(pre, p0, p1), uu1 = xsub(pre, p0, p1);
  const auto uu2 = xadd(pre, p2, p3), uu3 = xsub(pre, p2, p3);
  const auto q0 = xadd(pre, e0, e2), q1 = xadd(pre, e1, e3);
  const auto q2 = xsub(pre, e0, e2), q3 = xsub(pre, e1, e3);
  const auto v0 = xadd(pre, q0, q1), v1 = xsub(pre, q0, q1);
  const auto v2 = xadd(pre, q2, q3), v3 = xsub(pre, q2, q3);

  // ---- the 28 multiplications ----
  int mi = 0;
  auto mul = [&](std::uint16_t src, int coeff) {
    s.mul_steps[static_cast<std::size_t>(mi++)] =
        Step{StepOp::mul, xn, src, static_cast<std::uint16_t>(coeff), 0};
    return xn++;
  };
  const auto m0 = mul(uu0, 0), m1 = mul(uu1, 1), m2 = mul(uu2, 2), m3 = mul(uu3, 3);
  const auto n0 = mul(v0, 4), n1 = mul(v1, 5), n2 = mul(v2, 6), n3 = mul(v3, 7);
  const auto pe0 = mul(s0, 8), pe1 = mul(s1, 9), pe2 = mul(s2, 10), pe3 = mul(s3, 11);
  const auto pf0 = mul(e0, 12), pf1 = mul(e1, 13), pf2 = mul(e2, 14), pf3 = mul(e3, 15);
  const auto r0 = mul(X3, 16), r1 = mul(X7, 17), r2 = mul(X1, 18);
  const auto r3 = mul(X5, 19), r4 = mul(X2, 20), r5 = mul(X6, 21);
  const auto r6 = mul(X2, 22), r7 = mul(X6, 23), r8 = mul(X3, 24);
  const auto r9 = mul(X7, 25), r10 = mul(X1, 26), r11 = mul(X5, 27);

  // ---- post-addition network ----
  auto& po = s.post;
  const auto aa0 = xadd(po, m0, m1), aa1 = xsub(po, m0, m1);
  const auto aa2 = xadd(po, m2, m3), aa3 = xsub(po, m2, m3);
  const auto E0 = xadd(po, aa0, aa2), E1 = xadd(po, aa1, aa3);
  const auto E2 = xsub(po, aa0, aa2), E3 = xsub(po, aa1, aa3);
  const auto bb0 = xadd(po, n0, n1), bb1 = xsub(po, n0, n1);
  const auto bb2 = xadd(po, n2, n3), bb3 = xsub(po, n2, n3);
  const auto F0 = xadd(po, bb0, bb2), F1 = xadd(po, bb1, bb3);
  const auto F2 = xsub(po, bb0, bb2), F3 = xsub(po, bb1, bb3);
  // First-row corrections of the two paths.
  const auto z1 = xsub(po, pe0, pe1), z2 = xsub(po, z1, pe2), sigE = xsub(po, z2, pe3);
  const auto z3 = xadd(po, pf0, pf1), z4 = xadd(po, z3, pf2), tau = xadd(po, z4, pf3);
  // Coupling dot pairs.
  const auto w1 = xadd(po, r0, r1), w2 = xadd(po, r2, r3), w3 = xadd(po, r4, r5);
  const auto w4 = xadd(po, r6, r7), w5 = xadd(po, r8, r9), w6 = xadd(po, r10, r11);
  // Recombine the two paths.
  const auto gg = xadd(po, E0, sigE), hh = xsub(po, F0, tau);
  const auto y0 = xadd(po, gg, hh), y4 = xsub(po, gg, hh);
  const auto t1y = xadd(po, E1, F1), y1 = xsub(po, t1y, w1);
  const auto t2y = xadd(po, E2, F2), y2 = xsub(po, t2y, w2);
  const auto t3y = xadd(po, E3, F3), y3 = xsub(po, t3y, w3);
  const auto t5y = xsub(po, E1, F1), y5 = xsub(po, t5y, w4);
  const auto t6y = xsub(po, E2, F2), y6 = xsub(po, t6y, w5);
  const auto t7y = xsub(po, E3, F3), y7 = xsub(po, t7y, w6);
  s.x_tape_size = xn;
  s.y_slots = {y0, y1, y2, y3, y4, y5, y6, y7};
  return s;
}

template <ScalarRing S>
void run_steps(std::vector<S>& tape, std::span<const Step> steps,
               const std::array<S, 28>* coeffs) {
  for (const Step& st : steps) {
    switch (st.op) {
      case StepOp::add:
        tape[st.dst] = tape[st.lhs] + tape[st.rhs];
        break;
      case StepOp::sub:
        tape[st.dst] = tape[st.lhs] - tape[st.rhs];
        break;
      case StepOp::shift:
        tape[st.dst] = scale_pow2(tape[st.lhs], st.pow);
        break;
      case StepOp::mul:
        tape[st.dst] = tape[st.lhs] * (*coeffs)[st.rhs];
        break;
    }
  }
}

}  // namespace detail

/// The canonical schedule, immutable and shared.
inline const MulSchedule& canonical_schedule() {
  static const MulSchedule schedule = detail::build_canonical_schedule();
  return schedule;
}

/// Structural operation counts derived from schedule data alone.
struct ScheduleCounts {
  OpCounts prep;
  OpCounts apply;
  OpCounts total() const { return prep + apply; }
};

inline OpCounts count_section(std::span<const Step> steps) {
  OpCounts c;
  for (const Step& st : steps) {
    switch (st.op) {
      case StepOp::add:
      case StepOp::sub:
        ++c.adds;
        break;
      case StepOp::shift:
        ++c.shifts;
        break;
      case StepOp::mul:
        ++c.mults;
        break;
    }
  }
  return c;
}

inline ScheduleCounts structural_counts(const MulSchedule& s) {
  ScheduleCounts sc;
  sc.prep = count_section(s.prep_steps);
  sc.apply = count_section(s.pre_x) + count_section(s.mul_steps) + count_section(s.post);
  return sc;
}

/// Structural hygiene: multiplications happen only in the mul stage and
/// only against prepared-coefficient slots, each slot feeding exactly one
/// step; constant scalings appear only as shift steps; sign changes only
/// inside signed additions.
struct StructuralCheck {
  bool mul_count_is_28 = false;
  bool muls_only_in_mul_stage = false;
  bool each_coeff_used_once = false;
  bool slots_in_range = false;
  long long addition_total = 0;
  long long shift_total = 0;
  long long mult_total = 0;

  bool ok() const {
    return mul_count_is_28 && muls_only_in_mul_stage && each_coeff_used_once && slots_in_range;
  }
};

inline StructuralCheck structural_check(const MulSchedule& s) {
  StructuralCheck r;
  ScheduleCounts sc = structural_counts(s);
  r.addition_total = sc.total().adds;
  r.shift_total = sc.total().shifts;
  r.mult_total = sc.total().mults;
  r.mul_count_is_28 = s.mul_steps.size() == 28 && sc.total().mults == 28;
  bool stage_clean = true;
  for (const Step& st : s.prep_steps) stage_clean &= st.op != StepOp::mul;
  for (const Step& st : s.pre_x) stage_clean &= st.op != StepOp::mul;
  for (const Step& st : s.post) stage_clean &= st.op != StepOp::mul;
  bool all_mul = true;
  for (const Step& st : s.mul_steps) all_mul &= st.op == StepOp::mul;
  r.muls_only_in_mul_stage = stage_clean && all_mul;
  std::array<int, 28> uses{};
  bool in_range = true;
  for (const Step& st : s.mul_steps) {
    if (st.rhs < 28)
      ++uses[st.rhs];
    else
      in_range = false;
  }
  r.slots_in_range = in_range;
  r.each_coeff_used_once = in_range;
  for (int u : uses) r.each_coeff_used_once &= u == 1;
  return r;
}

/// The 28 b-derived coefficients plus the cost of deriving them.
/// Preparation performs additions/subtractions and shifts only.
template <ScalarRing S>
struct PreparedMultiplier {
  std::array<S, 28> coeffs;
  OpCounts prep_counts;
};

template <ScalarRing S>
PreparedMultiplier<S> prepare(const SplitOctonion<S>& b,
                              const MulSchedule& sched = canonical_schedule()) {
  std::vector<S> tape(sched.prep_tape_size, ring<S>::zero());
  for (std::size_t i = 0; i < 8; ++i) tape[i] = b.c[i];
  detail::run_steps<S>(tape, sched.prep_steps, nullptr);
  PreparedMultiplier<S> p{.coeffs = {}, .prep_counts = structural_counts(sched).prep};
  for (std::size_t i = 0; i < 28; ++i) p.coeffs[i] = tape[sched.coeff_slots[i]];
  return p;
}

template <ScalarRing S>
SplitOctonion<S> apply(const PreparedMultiplier<S>& p, const SplitOctonion<S>& x,
                       const MulSchedule& sched = canonical_schedule()) {
  std::vector<S> tape(sched.x_tape_size, ring<S>::zero());
  for (std::size_t i = 0; i < 8; ++i) tape[i] = x.c[i];
  detail::run_steps<S>(tape, sched.pre_x, nullptr);
  detail::run_steps<S>(tape, sched.mul_steps, &p.coeffs);
  detail::run_steps<S>(tape, sched.post, nullptr);
  SplitOctonion<S> y;
  for (std::size_t i = 0; i < 8; ++i) y.c[i] = tape[sched.y_slots[i]];
  return y;
}

/// Full reduced-multiplication product: prepare then apply.
/// Identical to direct_mul over any ring; 28 mults / 92 adds when counted.
template <ScalarRing S>
SplitOctonion<S> fast_mul(const SplitOctonion<S>& x, const SplitOctonion<S>& b,
                          const MulSchedule& sched = canonical_schedule()) {
  return apply(prepare(b, sched), x, sched);
}

// ---------------------------------------------------------------------------
// Unrolled evaluator: the same operations in the same order, written out.
// Interpreted and unrolled paths must agree bit for bit over doubles and
// report identical tallies over counting scalars.
// ---------------------------------------------------------------------------

template <ScalarRing S>
PreparedMultiplier<S> prepare_unrolled(const SplitOctonion<S>& b) {
  const std::array<S, 8>& v = b.c;
  const S t0 = v[0] - v[4], t1 = v[1] + v[5], t2 = v[2] + v[6], t3 = v[3] + v[7];
  const S u0 = v[0] + v[4], u1 = v[1] - v[5], u2 = v[2] - v[6], u3 = v[3] - v[7];
  const S a0 = t0 + t2, a1 = t1 + t3, a2 = t0 - t2, a3 = t1 - t3;
  const S c0 = a0 + a1, c1 = a0 - a1, c2 = a2 + a3, c3 = a2 - a3;
  const S k0 = u0 + u2, k1 = u1 + u3, k2 = u0 - u2, k3 = u1 - u3;
  const S c4 = k0 + k1, c5 = k0 - k1, c6 = k2 + k3, c7 = k2 - k3;
  const S g0 = scale_pow2(c0, -3), g1 = scale_pow2(c1, -3);
  const S g2 = scale_pow2(c2, -3), g3 = scale_pow2(c3, -3);
  const S g4 = scale_pow2(c4, -3), g5 = scale_pow2(c5, -3);
  const S g6 = scale_pow2(c6, -3), g7 = scale_pow2(c7, -3);
  const S d1 = scale_pow2(v[1], 1), d2 = scale_pow2(v[2], 1), d3 = scale_pow2(v[3], 1);
  const S d5 = scale_pow2(v[5], 1), d6 = scale_pow2(v[6], 1), d7 = scale_pow2(v[7], 1);
  return PreparedMultiplier<S>{
      .coeffs = {g0, g1, g2, g3, g4, g5, g6, g7,
                 v[4], v[1], v[2], v[3], v[4], v[1], v[2], v[3],
                 d2, d6, d3, d7, d1, d5,
                 d7, d3, d5, d1, d6, d2},
      .prep_counts = structural_counts(canonical_schedule()).prep};
}

template <ScalarRing S>
SplitOctonion<S> apply_unrolled(const PreparedMultiplier<S>& p, const SplitOctonion<S>& x) {
  const std::array<S, 8>& v = x.c;
  const std::array<S, 28>& c = p.coeffs;
  const S s0 = v[0] + v[4], s1 = v[1] + v[5], s2 = v[2] + v[6], s3 = v[3] + v[7];
  const S e0 = v[0] - v[4], e1 = v[1] - v[5], e2 = v[2] - v[6], e3 = v[3] - v[7];
  const S p0 = s0 + s2, p1 = s1 + s3, p2 = s0 - s2, p3 = s1 - s3;
  const S uu0 = p0 + p1, uu1 = p0 - p1, uu2 = p2 + p3, uu3 = p2 - p3;
  const S q0 = e0 + e2, q1 = e1 + e3, q2 = e0 - e2, q3 = e1 - e3;
  const S v0 = q0 + q1, v1 = q0 - q1, v2 = q2 + q3, v3 = q2 - q3;

  const S m0 = uu0 * c[0], m1 = uu1 * c[1], m2 = uu2 * c[2], m3 = uu3 * c[3];
  const S n0 = v0 * c[4], n1 = v1 * c[5], n2 = v2 * c[6], n3 = v3 * c[7];
  const S pe0 = s0 * c[8], pe1 = s1 * c[9], pe2 = s2 * c[10], pe3 = s3 * c[11];
  const S pf0 = e0 * c[12], pf1 = e1 * c[13], pf2 = e2 * c[14], pf3 = e3 * c[15];
  const S r0 = v[3] * c[16], r1 = v[7] * c[17], r2 = v[1] * c[18];
  const S r3 = v[5] * c[19], r4 = v[2] * c[20], r5 = v[6] * c[21];
  const S r6 = v[2] * c[22], r7 = v[6] * c[23], r8 = v[3] * c[24];
  const S r9 = v[7] * c[25], r10 = v[1] * c[26], r11 = v[5] * c[27];

  const S aa0 = m0 + m1, aa1 = m0 - m1, aa2 = m2 + m3, aa3 = m2 - m3;
  const S E0 = aa0 + aa2, E1 = aa1 + aa3, E2 = aa0 - aa2, E3 = aa1 - aa3;
  const S bb0 = n0 + n1, bb1 = n0 - n1, bb2 = n2 + n3, bb3 = n2 - n3;
  const S F0 = bb0 + bb2, F1 = bb1 + bb3, F2 = bb0 - bb2, F3 = bb1 - bb3;
  const S z1 = pe0 - pe1, z2 = z1 - pe2, sigE = z2 - pe3;
  const S z3 = pf0 + pf1, z4 = z3 + pf2, tau = z4 + pf3;
  const S w1 = r0 + r1, w2 = r2 + r3, w3 = r4 + r5;
  const S w4 = r6 + r7, w5 = r8 + r9, w6 = r10 + r11;
  const S gg = E0 + sigE, hh = F0 - tau;

  SplitOctonion<S> y;
  y.c[0] = gg + hh;
  y.c[4] = gg - hh;
  const S t1y = E1 + F1;
  y.c[1] = t1y - w1;
  const S t2y = E2 + F2;
  y.c[2] = t2y - w2;
  const S t3y = E3 + F3;
  y.c[3] = t3y - w3;
  const S t5y = E1 - F1;
  y.c[5] = t5y - w4;
  const S t6y = E2 - F2;
  y.c[6] = t6y - w5;
  const S t7y = E3 - F3;
  y.c[7] = t7y - w6;
  return y;
}

template <ScalarRing S>
SplitOctonion<S> fast_mul_unrolled(const SplitOctonion<S>& x, const SplitOctonion<S>& b) {
  return apply_unrolled(prepare_unrolled(b), x);
}

}  // namespace splitoct
