// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "splitoct/octonion_text.hpp"
#include "splitoct/rational.hpp"

using splitoct::format_octonion_text;
using splitoct::parse_octonion_text;
using splitoct::Rational;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SPLITOCT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return CommandResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("octonion text parses decimals and rationals") {
  const auto o = parse_octonion_text("1,0.5,-3/7,0,-2,0,7/2,0");
  REQUIRE(o.has_value());
  CHECK(o->c[0] == Rational(1));
  CHECK(o->c[1] == Rational(1, 2));
  CHECK(o->c[2] == Rational(-3, 7));
  CHECK(o->c[4] == Rational(-2));
  CHECK(o->c[6] == Rational(7, 2));
}

TEST_CASE("octonion text round-trips canonically") {
  const std::string canonical = "1,1/2,-3/7,0,-2,0,7/2,0";
  const auto o = parse_octonion_text("1,0.5,-3/7,0,-2,0,3.5,0");
  REQUIRE(o.has_value());
  CHECK(format_octonion_text(*o) == canonical);
  const auto again = parse_octonion_text(canonical);
  REQUIRE(again.has_value());
  CHECK(format_octonion_text(*again) == canonical);
}

TEST_CASE("octonion text rejects malformed input") {
  CHECK_FALSE(parse_octonion_text("1,2,3").has_value());                  // too few
  CHECK_FALSE(parse_octonion_text("1,2,3,4,5,6,7,8,9").has_value());      // too many
  CHECK_FALSE(parse_octonion_text("1,2,3,4,5,6,7,x").has_value());        // garbage
  CHECK_FALSE(parse_octonion_text("1,2,3,4,5,6,7,1/0").has_value());      // zero denominator
  CHECK_FALSE(parse_octonion_text("").has_value());
  CHECK_FALSE(parse_octonion_text("1,2,3,4,5,6,7,").has_value());         // trailing empty
}

TEST_CASE("cli: identity times b prints b") {
  const auto r = run_cli("mul 1,0,0,0,0,0,0,0 2,3,0,0,0,0,0,0 --algo fast");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2,3,0,0,0,0,0,0\n");
}

TEST_CASE("cli: e1 * e2 = e3 on both paths") {
  for (const char* algo : {"direct", "fast"}) {
    const auto r = run_cli(std::string("mul 0,1,0,0,0,0,0,0 0,0,1,0,0,0,0,0 --algo ") + algo);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0,0,0,1,0,0,0,0\n");
  }
}

TEST_CASE("cli: zero divisor product is zero") {
  const auto r = run_cli("mul 1,0,0,0,1,0,0,0 1,0,0,0,-1,0,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0,0,0,0,0,0,0,0\n");
}

TEST_CASE("cli: rational output stays exact") {
  const auto r = run_cli("mul 1/3,0,0,0,0,0,0,0 1/2,0,0,0,0,0,0,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/6,0,0,0,0,0,0,0\n");
}

TEST_CASE("cli: parse failure exits with code 2") {
  CHECK(run_cli("mul 1,2,3 4,5,6").exit_code == 2);
  CHECK(run_cli("mul 1,0,0,0,0,0,0,x 1,0,0,0,0,0,0,0").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("mul").exit_code == 2);
}

TEST_CASE("cli: json product output carries coeffs") {
  const auto r = run_cli("mul 0,1,0,0,0,0,0,0 0,0,1,0,0,0,0,0 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.contains("coeffs"));
  REQUIRE(j["coeffs"].size() == 8);
  CHECK(j["coeffs"][3] == "1");
  CHECK(j["coeffs"][0] == "0");
}

TEST_CASE("cli: float mode with self-check") {
  const auto r = run_cli("mul 1.5,0,0,0,0,0,0,0 2,0,0,0,0,0,0,0 --float --self-check");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3,0,0,0,0,0,0,0\n");
}

TEST_CASE("cli: verify exits 0 and reports counts") {
  const auto r = run_cli("verify --random 50 --seed 9 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  for (const char* key : {"basis", "random", "symbolic", "counts", "pass"}) CHECK(j.contains(key));
  CHECK(j["pass"] == true);
  CHECK(j["symbolic"] == "skipped");
  CHECK(j["counts"]["fast"]["mults"] == 28);
  CHECK(j["counts"]["fast"]["adds"] == 92);
  CHECK(j["counts"]["direct"]["mults"] == 64);
  CHECK(j["counts"]["direct"]["adds"] == 56);
}

TEST_CASE("cli: verify --random 0 runs basis and counts only") {
  const auto r = run_cli("verify --random 0 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["random"]["requested"] == 0);
  CHECK(j["basis"]["passed"] == 64);
  CHECK(j["pass"] == true);
}

TEST_CASE("cli: count prepared lists apply and prep separately") {
  const auto r = run_cli("count --algo prepared --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["mults"] == 28);
  CHECK(j["adds"] == 68);
  CHECK(j["prep"]["adds"] == 24);
  CHECK(j["prep"]["mults"] == 0);
  CHECK(j["prep"]["shifts"] == 14);
}

TEST_CASE("cli: count direct in text form") {
  const auto r = run_cli("count --algo direct");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "direct: mults=64 adds=56 shifts=0\n");
}

TEST_CASE("cli: bench smoke test") {
  const auto r = run_cli("bench --iters 100 --reuse-prepared");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("direct") != std::string::npos);
  CHECK(r.output.find("fast") != std::string::npos);
  CHECK(r.output.find("apply_only") != std::string::npos);
  CHECK(r.output.find("checksum_match: true") != std::string::npos);
}
