// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Oracle harness. Exhaustive basis checking, seeded randomized equivalence,
// symbolic identity replay, operation-count audit, and structural property
// checks, assembled into a machine-readable verification report. Every
// checker takes the schedule (and table) under test as a parameter so that
// fault-injection tests can prove the checkers are able to fail.
//
// All comparisons here are exact; float tolerance testing lives with the
// scalar realizations.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitoct/cayley_table.hpp"
#include "splitoct/coeff_matrix.hpp"
#include "splitoct/counting.hpp"
#include "splitoct/blocks.hpp"
#include "splitoct/polynomial.hpp"
#include "splitoct/random_gen.hpp"
#include "splitoct/rational.hpp"
#include "splitoct/schedule.hpp"
#include "splitoct/split_octonion.hpp"

namespace splitoct::verify {

inline std::string render(const SplitOctonion<Rational>& o) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += o.c[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive basis closure
// ---------------------------------------------------------------------------

struct BasisMismatch {
  int i = 0, j = 0;
  std::string path;
  std::string expected, got;
};

struct BasisCheckResult {
  int passed = 0;
  int total = 64;
  std::optional<BasisMismatch> first_failure;
  bool ok() const { return passed == total; }
};

/// Runs all 64 basis products through the direct, table-driven, matrix,
/// and fast paths; each must match the table entry.
inline BasisCheckResult exhaustive_basis_check(const MulSchedule& sched = canonical_schedule(),
                                               const CayleyTable& table = cayley_table()) {
  using Oct = SplitOctonion<Rational>;
  BasisCheckResult result;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Oct ei = Oct::basis(i);
      const Oct ej = Oct::basis(j);
      const Oct expected = basis_product<Rational>(table, i, j);
      const std::pair<const char*, Oct> got[] = {
          {"direct", direct_mul(ei, ej)},
          {"table", table_mul(ei, ej, table)},
          {"matrix", matvec(build_coeff_matrix(ej), ei)},
          {"fast", fast_mul(ei, ej, sched)},
      };
      bool pair_ok = true;
      for (const auto& [path, value] : got) {
        if (!(value == expected)) {
          pair_ok = false;
          if (!result.first_failure)
            result.first_failure =
                BasisMismatch{i, j, path, render(expected), render(value)};
          break;
        }
      }
      if (pair_ok) ++result.passed;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Randomized exact equivalence
// ---------------------------------------------------------------------------

struct RandomMismatch {
  long long index = 0;
  std::string x, b;
  std::string expected, got;
};

struct RandomCheckResult {
  long long passed = 0;
  long long requested = 0;
  std::uint64_t seed = 0;
  std::optional<RandomMismatch> first_failure;
  bool ok() const { return passed == requested; }
};

/// Exact agreement of one random pair across the fast and schoolbook paths.
inline bool check_pair(const SplitOctonion<Rational>& x, const SplitOctonion<Rational>& b,
                       const MulSchedule& sched = canonical_schedule()) {
  return fast_mul(x, b, sched) == direct_mul(x, b);
}

inline RandomCheckResult random_equivalence(long long n, std::uint64_t seed,
                                            const MulSchedule& sched = canonical_schedule()) {
  RandomCheckResult result;
  result.requested = n;
  result.seed = seed;
  RationalGen gen(seed);
  for (long long k = 0; k < n; ++k) {
    const auto x = gen.next_octonion();
    const auto b = gen.next_octonion();
    const auto expected = direct_mul(x, b);
    const auto got = fast_mul(x, b, sched);
    if (got == expected) {
      ++result.passed;
    } else if (!result.first_failure) {
      result.first_failure =
          RandomMismatch{k, render(x), render(b), render(expected), render(got)};
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Symbolic identity
// ---------------------------------------------------------------------------

struct SymbolicCheckResult {
  bool schedule_identity = false;
  bool factorizations = false;  // 4x4 butterfly + 2x2 stages + row splits
  int first_bad_y = -1;
  std::string difference;
  bool ok() const { return schedule_identity && factorizations; }
};

/// The eight product coordinates as polynomials, expanded term by term
/// from the multiplication table (independent of the coordinate formulas).
inline SplitOctonion<Polynomial16> symbolic_table_expansion(
    const CayleyTable& table = cayley_table()) {
  SplitOctonion<Polynomial16> y;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const TableEntry& e = table.at(i, j);
      const Polynomial16 term = Polynomial16::x(i) * Polynomial16::b(j);
      y.c[e.index] = e.sign > 0 ? y.c[e.index] + term : y.c[e.index] - term;
    }
  return y;
}

inline SplitOctonion<Polynomial16> symbolic_operands_x() {
  SplitOctonion<Polynomial16> x;
  for (int i = 0; i < 8; ++i) x.c[static_cast<std::size_t>(i)] = Polynomial16::x(i);
  return x;
}

inline SplitOctonion<Polynomial16> symbolic_operands_b() {
  SplitOctonion<Polynomial16> b;
  for (int i = 0; i < 8; ++i) b.c[static_cast<std::size_t>(i)] = Polynomial16::b(i);
  return b;
}

/// Replays the schedule over polynomial indeterminates and compares each
/// output against the table expansion; also checks the block
/// factorizations symbolically.
inline SymbolicCheckResult symbolic_check(const MulSchedule& sched = canonical_schedule(),
                                          const CayleyTable& table = cayley_table()) {
  SymbolicCheckResult result;
  const auto expected = symbolic_table_expansion(table);
  const auto got = fast_mul(symbolic_operands_x(), symbolic_operands_b(), sched);
  result.schedule_identity = true;
  for (int i = 0; i < 8; ++i) {
    const auto& e = expected.c[static_cast<std::size_t>(i)];
    const auto& g = got.c[static_cast<std::size_t>(i)];
    if (!poly_equal(e, g)) {
      result.schedule_identity = false;
      result.first_bad_y = i;
      result.difference = (g - e).str();
      break;
    }
  }
  result.factorizations = toeplitz4_factor_check(build_blocks(symbolic_operands_b()));
  return result;
}

// ---------------------------------------------------------------------------
// Operation-count audit
// ---------------------------------------------------------------------------

struct CountAuditResult {
  OpCounts direct;  // measured schoolbook cost
  OpCounts fast;    // measured full fast product (prep + apply)
  OpCounts prep;    // measured b-side preparation alone
  OpCounts apply;   // measured apply against a prepared multiplier
  static constexpr long long kTargetDirectMults = 64, kTargetDirectAdds = 56;
  static constexpr long long kTargetFastMults = 28, kTargetFastAdds = 92;

  long long savings() const { return direct.mults - fast.mults; }
  bool direct_ok() const {
    return direct.mults == kTargetDirectMults && direct.adds == kTargetDirectAdds;
  }
  bool fast_ok() const {
    return fast.mults == kTargetFastMults && fast.adds == kTargetFastAdds;
  }
  bool conservation_ok() const {
    return fast.mults + fast.adds == direct.mults + direct.adds;
  }
  bool split_ok() const { return prep + apply == fast && prep.mults == 0; }
  bool ok() const {
    return direct_ok() && fast_ok() && conservation_ok() && split_ok() && savings() == 36;
  }
};

/// Measures one full product on each path under the counting scalar.
/// Counts are input-independent; an arbitrary exact pair is used.
inline CountAuditResult count_audit(const MulSchedule& sched = canonical_schedule()) {
  using C = Counting<Rational>;
  using Oct = SplitOctonion<C>;
  auto lift_pair = [](OpTally& tally) {
    Oct x, b;
    for (int i = 0; i < 8; ++i) {
      x.c[static_cast<std::size_t>(i)] = C(Rational(i + 1, 3), &tally);
      b.c[static_cast<std::size_t>(i)] = C(Rational(2 * i - 7, 5), &tally);
    }
    return std::pair(x, b);
  };

  CountAuditResult result;
  {
    OpTally tally;
    auto [x, b] = lift_pair(tally);
    (void)direct_mul(x, b);
    result.direct = tally.counts();
  }
  {
    OpTally tally;
    auto [x, b] = lift_pair(tally);
    (void)fast_mul(x, b, sched);
    result.fast = tally.counts();
  }
  {
    OpTally tally;
    auto [x, b] = lift_pair(tally);
    (void)x;
    (void)prepare(b, sched);
    result.prep = tally.counts();
  }
  {
    OpTally prep_tally;
    auto [x, b] = lift_pair(prep_tally);
    auto prepared = prepare(b, sched);
    OpTally apply_tally;
    Oct x2;
    for (int i = 0; i < 8; ++i)
      x2.c[static_cast<std::size_t>(i)] = C(x.c[static_cast<std::size_t>(i)].value(), &apply_tally);
    (void)apply(prepared, x2, sched);
    result.apply = apply_tally.counts();
  }
  return result;
}

// ---------------------------------------------------------------------------
// Structural properties
// ---------------------------------------------------------------------------

struct PropertyResult {
  std::string name;
  long long passed = 0;
  long long requested = 0;
  std::string counterexample;
  bool ok() const { return passed == requested; }
};

/// Checks a two-operand predicate over all 64 basis pairs first, then n
/// seeded random pairs. The first failing pair is recorded.
inline PropertyResult check_pair_property(
    std::string name,
    const std::function<bool(const SplitOctonion<Rational>&, const SplitOctonion<Rational>&)>&
        pred,
    long long n, std::uint64_t seed) {
  using Oct = SplitOctonion<Rational>;
  PropertyResult result;
  result.name = std::move(name);
  result.requested = 64 + n;
  auto try_pair = [&](const Oct& x, const Oct& y, const std::string& label) {
    if (pred(x, y)) {
      ++result.passed;
    } else if (result.counterexample.empty()) {
      result.counterexample = label;
    }
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      try_pair(Oct::basis(i), Oct::basis(j),
               "e" + std::to_string(i) + ", e" + std::to_string(j));
  RationalGen gen(seed);
  for (long long k = 0; k < n; ++k) {
    const Oct x = gen.next_octonion();
    const Oct y = gen.next_octonion();
    try_pair(x, y, "x=" + render(x) + " y=" + render(y));
  }
  return result;
}

/// Norm multiplicativity, bilinearity, alternative laws, conjugation
/// anti-automorphism, plus the zero-divisor and non-commutativity /
/// non-associativity witnesses.
inline std::vector<PropertyResult> property_suite(std::uint64_t seed, long long samples = 1000) {
  using Oct = SplitOctonion<Rational>;
  std::vector<PropertyResult> results;

  results.push_back(check_pair_property(
      "norm_multiplicativity",
      [](const Oct& x, const Oct& y) {
        return quadratic_form(direct_mul(x, y)) == quadratic_form(x) * quadratic_form(y);
      },
      samples, seed));

  results.push_back(check_pair_property(
      "conjugation_antiautomorphism",
      [](const Oct& x, const Oct& y) {
        return conjugate(direct_mul(x, y)) == direct_mul(conjugate(y), conjugate(x));
      },
      samples, seed + 1));

  results.push_back(check_pair_property(
      "alternative_law_left",
      [](const Oct& x, const Oct& y) {
        return direct_mul(direct_mul(x, x), y) == direct_mul(x, direct_mul(x, y));
      },
      samples, seed + 2));

  results.push_back(check_pair_property(
      "alternative_law_right",
      [](const Oct& x, const Oct& y) {
        return direct_mul(direct_mul(y, x), x) == direct_mul(y, direct_mul(x, x));
      },
      samples, seed + 3));

  {
    PropertyResult r;
    r.name = "bilinearity";
    r.requested = samples;
    RationalGen gen(seed + 4);
    for (long long k = 0; k < samples; ++k) {
      const Oct x = gen.next_octonion();
      const Oct xp = gen.next_octonion();
      const Oct b = gen.next_octonion();
      const Rational alpha = gen.next();
      const Oct left = direct_mul(scalar_mul(alpha, x) + xp, b);
      const Oct right = scalar_mul(alpha, direct_mul(x, b)) + direct_mul(xp, b);
      const Oct left_b = direct_mul(b, scalar_mul(alpha, x) + xp);
      const Oct right_b = scalar_mul(alpha, direct_mul(b, x)) + direct_mul(b, xp);
      if (left == right && left_b == right_b) {
        ++r.passed;
      } else if (r.counterexample.empty()) {
        r.counterexample = "x=" + render(x) + " x'=" + render(xp) + " b=" + render(b) +
                           " alpha=" + alpha.str();
      }
    }
    results.push_back(std::move(r));
  }

  {
    PropertyResult r;
    r.name = "zero_divisor_witness";
    r.requested = 1;
    Oct plus = Oct::one() + Oct::basis(4);
    Oct minus = Oct::one() - Oct::basis(4);
    const bool factors_nonzero = !(plus == Oct::zero()) && !(minus == Oct::zero());
    if (factors_nonzero && direct_mul(plus, minus) == Oct::zero()) ++r.passed;
    else r.counterexample = "(1+e4)(1-e4)";
    results.push_back(std::move(r));
  }

  {
    PropertyResult r;
    r.name = "non_commutativity_witness";
    r.requested = 1;
    const Oct e1e2 = direct_mul(Oct::basis(1), Oct::basis(2));
    const Oct e2e1 = direct_mul(Oct::basis(2), Oct::basis(1));
    if (e1e2 == Oct::basis(3) && e2e1 == -Oct::basis(3)) ++r.passed;
    else r.counterexample = "e1*e2 vs e2*e1";
    results.push_back(std::move(r));
  }

  {
    PropertyResult r;
    r.name = "non_associativity_witness";
    r.requested = 1;
    bool found = false;
    for (int i = 1; i < 8 && !found; ++i)
      for (int j = 1; j < 8 && !found; ++j)
        for (int k = 1; k < 8 && !found; ++k) {
          const Oct lhs = direct_mul(direct_mul(Oct::basis(i), Oct::basis(j)), Oct::basis(k));
          const Oct rhs = direct_mul(Oct::basis(i), direct_mul(Oct::basis(j), Oct::basis(k)));
          found = !(lhs == rhs);
        }
    if (found) ++r.passed;
    else r.counterexample = "no non-associative basis triple found";
    results.push_back(std::move(r));
  }

  return results;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct VerificationReport {
  std::uint64_t seed = 0;
  BasisCheckResult basis;
  RandomCheckResult random;
  std::optional<SymbolicCheckResult> symbolic;  // nullopt when skipped
  CountAuditResult counts;
  std::vector<PropertyResult> properties;

  bool pass() const {
    bool ok = basis.ok() && random.ok() && counts.ok();
    if (symbolic) ok = ok && symbolic->ok();
    for (const auto& p : properties) ok = ok && p.ok();
    return ok;
  }

  std::string render_text() const {
    std::ostringstream os;
    os << "seed: " << seed << '\n';
    os << "basis_cases_passed: " << basis.passed << "/" << basis.total << '\n';
    if (basis.first_failure) {
      const auto& f = *basis.first_failure;
      os << "basis_first_failure: (" << f.i << "," << f.j << ") path=" << f.path
         << " expected=" << f.expected << " got=" << f.got << '\n';
    }
    os << "random_cases_passed: " << random.passed << "/" << random.requested << '\n';
    if (random.first_failure) {
      const auto& f = *random.first_failure;
      os << "random_first_failure: index=" << f.index << " x=" << f.x << " b=" << f.b
         << " expected=" << f.expected << " got=" << f.got << '\n';
    }
    if (symbolic) {
      os << "symbolic_identity: " << (symbolic->ok() ? "true" : "false") << '\n';
      if (symbolic->first_bad_y >= 0)
        os << "symbolic_first_failure: y" << symbolic->first_bad_y
           << " difference=" << symbolic->difference << '\n';
    } else {
      os << "symbolic_identity: skipped\n";
    }
    os << "direct_counts: mults=" << counts.direct.mults << " adds=" << counts.direct.adds
       << " shifts=" << counts.direct.shifts << '\n';
    os << "fast_counts: mults=" << counts.fast.mults << " adds=" << counts.fast.adds
       << " shifts=" << counts.fast.shifts << '\n';
    os << "prep_counts: mults=" << counts.prep.mults << " adds=" << counts.prep.adds
       << " shifts=" << counts.prep.shifts << '\n';
    os << "apply_counts: mults=" << counts.apply.mults << " adds=" << counts.apply.adds
       << " shifts=" << counts.apply.shifts << '\n';
    os << "paper_targets: direct=64/56 fast=28/92\n";
    os << "mult_savings: " << counts.savings() << '\n';
    os << "total_ops: direct=" << counts.direct.mults + counts.direct.adds
       << " fast=" << counts.fast.mults + counts.fast.adds << '\n';
    for (const auto& p : properties) {
      os << "property_" << p.name << ": " << p.passed << "/" << p.requested;
      if (!p.ok()) os << " counterexample: " << p.counterexample;
      os << '\n';
    }
    os << "pass: " << (pass() ? "true" : "false") << '\n';
    return os.str();
  }

  nlohmann::json render_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["basis"] = {{"passed", basis.passed}, {"total", basis.total}, {"ok", basis.ok()}};
    if (basis.first_failure) {
      const auto& f = *basis.first_failure;
      j["basis"]["first_failure"] = {
          {"i", f.i}, {"j", f.j}, {"path", f.path}, {"expected", f.expected}, {"got", f.got}};
    }
    j["random"] = {{"passed", random.passed},
                   {"requested", random.requested},
                   {"seed", random.seed},
                   {"ok", random.ok()}};
    if (random.first_failure) {
      const auto& f = *random.first_failure;
      j["random"]["first_failure"] = {{"index", f.index},
                                      {"x", f.x},
                                      {"b", f.b},
                                      {"expected", f.expected},
                                      {"got", f.got}};
    }
    if (symbolic)
      j["symbolic"] = symbolic->ok();
    else
      j["symbolic"] = "skipped";
    auto counts_json = [](const OpCounts& c) {
      return nlohmann::json{{"mults", c.mults}, {"adds", c.adds}, {"shifts", c.shifts}};
    };
    j["counts"] = {{"direct", counts_json(counts.direct)},
                   {"fast", counts_json(counts.fast)},
                   {"prep", counts_json(counts.prep)},
                   {"apply", counts_json(counts.apply)},
                   {"targets",
                    {{"direct", {{"mults", 64}, {"adds", 56}}},
                     {"fast", {{"mults", 28}, {"adds", 92}}}}},
                   {"savings", counts.savings()},
                   {"ok", counts.ok()}};
    j["properties"] = nlohmann::json::array();
    for (const auto& p : properties) {
      nlohmann::json pj{{"name", p.name}, {"passed", p.passed}, {"requested", p.requested}};
      if (!p.ok()) pj["counterexample"] = p.counterexample;
      j["properties"].push_back(std::move(pj));
    }
    j["pass"] = pass();
    return j;
  }
};

namespace detail {
/// A sampling failure alongside a symbolic pass means the harness itself
/// is broken; refuse to emit a report that could mask it.
inline void assert_oracle_consistency(bool symbolic_ok, bool sampling_ok) {
  if (symbolic_ok && !sampling_ok)
    throw std::logic_error(
        "verification harness bug: symbolic identity holds but sampling found a mismatch");
}
}  // namespace detail

struct VerifyOptions {
  long long random_n = 10000;
  std::uint64_t seed = 1;
  bool symbolic = true;
  bool properties = true;
  long long property_samples = 1000;
};

inline VerificationReport run_verification(const VerifyOptions& opts,
                                           const MulSchedule& sched = canonical_schedule(),
                                           const CayleyTable& table = cayley_table()) {
  VerificationReport report;
  report.seed = opts.seed;
  report.basis = exhaustive_basis_check(sched, table);
  report.random = random_equivalence(opts.random_n, opts.seed, sched);
  if (opts.symbolic) {
    report.symbolic = symbolic_check(sched, table);
    detail::assert_oracle_consistency(report.symbolic->schedule_identity,
                                      report.random.ok() && report.basis.ok());
  }
  report.counts = count_audit(sched);
  if (opts.properties) report.properties = property_suite(opts.seed, opts.property_samples);
  return report;
}

}  // namespace splitoct::verify
