// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Operation-counting scalar. Wraps an inner scalar and tallies every real
// multiplication, addition/subtraction, and power-of-two shift performed
// through it. Negation is free. Multiplications by powers of two must go
// through scale_pow2 to land in the shift tally instead of the product tally.

#pragma once

#include <utility>

#include "splitoct/scalar_ring.hpp"

namespace splitoct {

/// Tally of one computation. Additive across composed computations.
struct OpCounts {
  long long mults = 0;
  long long adds = 0;
  long long shifts = 0;

  OpCounts& operator+=(const OpCounts& o) {
    mults += o.mults;
    adds += o.adds;
    shifts += o.shifts;
    return *this;
  }
  friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;

  long long total() const { return mults + adds + shifts; }
};

/// Mutable tally shared by all counting values of one computation.
class OpTally {
 public:
  void record_mul() { ++counts_.mults; }
  void record_add() { ++counts_.adds; }
  void record_shift() { ++counts_.shifts; }
  const OpCounts& counts() const { return counts_; }
  void reset() { counts_ = OpCounts{}; }

 private:
  OpCounts counts_;
};

/// Scalar that forwards arithmetic to the payload and records each event.
/// Values without a tally (constants, defaults) count nowhere; a binary
/// operation records into whichever operand carries a tally.
template <ScalarRing S>
class Counting {
 public:
  Counting() : value_(ring<S>::zero()), tally_(nullptr) {}
  explicit Counting(S value, OpTally* tally = nullptr)
      : value_(std::move(value)), tally_(tally) {}

  const S& value() const { return value_; }
  OpTally* tally() const { return tally_; }

  friend Counting operator+(const Counting& a, const Counting& b) {
    OpTally* t = pick(a, b);
    if (t) t->record_add();
    return Counting(a.value_ + b.value_, t);
  }
  friend Counting operator-(const Counting& a, const Counting& b) {
    OpTally* t = pick(a, b);
    if (t) t->record_add();
    return Counting(a.value_ - b.value_, t);
  }
  friend Counting operator*(const Counting& a, const Counting& b) {
    OpTally* t = pick(a, b);
    if (t) t->record_mul();
    return Counting(a.value_ * b.value_, t);
  }
  Counting operator-() const { return Counting(-value_, tally_); }  // sign change is free

  friend Counting scale_pow2(const Counting& a, int k) {
    if (a.tally_) a.tally_->record_shift();
    return Counting(scale_pow2(a.value_, k), a.tally_);
  }

  friend bool operator==(const Counting& a, const Counting& b) { return a.value_ == b.value_; }

 private:
  static OpTally* pick(const Counting& a, const Counting& b) {
    return a.tally_ ? a.tally_ : b.tally_;
  }

  S value_;
  OpTally* tally_;
};

template <ScalarRing S>
struct ring<Counting<S>> {
  static Counting<S> zero() { return Counting<S>(ring<S>::zero()); }
  static Counting<S> one() { return Counting<S>(ring<S>::one()); }
};

/// Runs `fn` with a fresh tally and returns (result, counts). `fn` receives
/// a lift callable that binds inner-scalar values to the tally; arithmetic
/// on lifted values is what gets counted. Deterministic: re-running yields
/// identical tallies.
template <ScalarRing S, typename Fn>
auto with_counting(Fn&& fn) {
  OpTally tally;
  auto lift = [&tally](S v) { return Counting<S>(std::move(v), &tally); };
  auto result = fn(lift);
  return std::pair(std::move(result), tally.counts());
}

}  // namespace splitoct
