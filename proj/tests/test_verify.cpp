// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Harness tests, including fault injection proving each checker can fail.

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "splitoct/verify.hpp"

using namespace splitoct;
using namespace splitoct::verify;

using Oct = SplitOctonion<Rational>;

namespace {

CayleyTable mutated_table(int i, int j) {
  CayleyTable t = cayley_table();
  t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].sign *= -1;
  return t;
}

MulSchedule corrupt_coefficient(int slot) {
  // Retarget one prepared-coefficient slot to a wrong tape location.
  MulSchedule s = canonical_schedule();
  s.coeff_slots[static_cast<std::size_t>(slot)] = 0;  // raw b0 instead
  return s;
}

MulSchedule drop_last_post_addition() {
  MulSchedule s = canonical_schedule();
  // Redirect y7 to an intermediate value, losing the final subtraction.
  s.y_slots[7] = s.post.back().lhs;
  s.post.pop_back();
  return s;
}

}  // namespace

TEST_CASE("exhaustive basis check passes on the canonical build") {
  const auto r = exhaustive_basis_check();
  CHECK(r.ok());
  CHECK(r.passed == 64);
  CHECK_FALSE(r.first_failure.has_value());
}

TEST_CASE("basis check fails when the e5*e6 sign is flipped") {
  const auto r = exhaustive_basis_check(canonical_schedule(), mutated_table(5, 6));
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->i == 5);
  CHECK(r.first_failure->j == 6);
}

TEST_CASE("basis check fails when e4*e4 = -1 is injected") {
  const auto r = exhaustive_basis_check(canonical_schedule(), mutated_table(4, 4));
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->i == 4);
  CHECK(r.first_failure->j == 4);
}

TEST_CASE("basis check fails on a corrupted schedule coefficient") {
  const auto r = exhaustive_basis_check(corrupt_coefficient(0));
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->path == "fast");
}

TEST_CASE("random equivalence passes and is deterministic per seed") {
  const auto a = random_equivalence(500, 42);
  const auto b = random_equivalence(500, 42);
  CHECK(a.ok());
  CHECK(a.passed == 500);
  CHECK(b.passed == a.passed);
  CHECK_FALSE(a.first_failure.has_value());

  const auto c = random_equivalence(500, 43);
  CHECK(c.ok());
}

TEST_CASE("forced zero pair passes") {
  CHECK(check_pair(Oct::zero(), Oct::zero()));
}

TEST_CASE("random equivalence reports the first mismatch on a corrupted build") {
  const auto r = random_equivalence(200, 42, corrupt_coefficient(0));
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->index >= 0);
  CHECK_FALSE(r.first_failure->expected.empty());
  CHECK_FALSE(r.first_failure->got.empty());
}

TEST_CASE("symbolic check passes on the canonical schedule") {
  const auto r = symbolic_check();
  CHECK(r.ok());
  CHECK(r.schedule_identity);
  CHECK(r.factorizations);
  CHECK(r.first_bad_y == -1);
}

TEST_CASE("symbolic check names the output broken by a dropped post-addition") {
  const auto r = symbolic_check(drop_last_post_addition());
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.schedule_identity);
  CHECK(r.first_bad_y == 7);
  CHECK_FALSE(r.difference.empty());
}

TEST_CASE("symbolic check fails on a corrupted coefficient with nonzero difference") {
  const auto r = symbolic_check(corrupt_coefficient(3));
  CHECK_FALSE(r.schedule_identity);
  CHECK(r.first_bad_y >= 0);
  CHECK_FALSE(r.difference.empty());
}

TEST_CASE("count audit matches the targets") {
  const auto r = count_audit();
  CHECK(r.ok());
  CHECK(r.direct == OpCounts{64, 56, 0});
  CHECK(r.fast.mults == 28);
  CHECK(r.fast.adds == 92);
  CHECK(r.savings() == 36);
  CHECK(r.fast.mults + r.fast.adds == r.direct.mults + r.direct.adds);
  CHECK(r.prep + r.apply == r.fast);
  CHECK(r.prep.mults == 0);
  CHECK(r.apply == OpCounts{28, 68, 0});
}

TEST_CASE("property suite passes") {
  const auto results = property_suite(7, 200);
  for (const auto& p : results) {
    INFO(p.name << " counterexample: " << p.counterexample);
    CHECK(p.ok());
  }
}

TEST_CASE("a deliberately false property fails with the e1, e2 counterexample") {
  const auto r = check_pair_property(
      "commutativity",
      [](const Oct& x, const Oct& y) { return direct_mul(x, y) == direct_mul(y, x); }, 10, 3);
  CHECK_FALSE(r.ok());
  CHECK(r.counterexample == "e1, e2");
}

TEST_CASE("full report: determinism and completeness") {
  VerifyOptions opts;
  opts.random_n = 100;
  opts.seed = 2026;
  opts.symbolic = true;
  opts.property_samples = 50;
  const auto a = run_verification(opts);
  const auto b = run_verification(opts);
  CHECK(a.pass());
  CHECK(a.render_text() == b.render_text());
  CHECK(a.render_json() == b.render_json());

  const auto j = a.render_json();
  for (const char* key : {"seed", "basis", "random", "symbolic", "counts", "properties", "pass"})
    CHECK(j.contains(key));
  CHECK(j["pass"] == true);
  CHECK(j["counts"]["targets"]["fast"]["mults"] == 28);
}

TEST_CASE("failing report still carries every field") {
  VerifyOptions opts;
  opts.random_n = 50;
  opts.seed = 5;
  opts.symbolic = true;
  opts.property_samples = 10;
  const auto report = run_verification(opts, corrupt_coefficient(1));
  CHECK_FALSE(report.pass());
  const auto j = report.render_json();
  for (const char* key : {"seed", "basis", "random", "symbolic", "counts", "properties", "pass"})
    CHECK(j.contains(key));
  CHECK(j["pass"] == false);
  CHECK(j["basis"].contains("first_failure"));
  const auto text = report.render_text();
  CHECK(text.find("pass: false") != std::string::npos);
  CHECK(text.find("basis_first_failure") != std::string::npos);
}

TEST_CASE("sampling failure under a symbolic pass aborts the harness") {
  CHECK_THROWS_AS(verify::detail::assert_oracle_consistency(true, false), std::logic_error);
  CHECK_NOTHROW(verify::detail::assert_oracle_consistency(true, true));
  CHECK_NOTHROW(verify::detail::assert_oracle_consistency(false, false));
}
