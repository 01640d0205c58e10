// Copyright 2026 splitoct contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: compute products, run verification, report
// operation counts, and benchmark the direct vs fast paths.
//
// Exit codes: 0 success, 1 verification/self-check failure, 2 usage or
// parse error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitoct/splitoct.hpp"

namespace {

using splitoct::OpCounts;
using splitoct::Rational;
using splitoct::SplitOctonion;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

double rel_diff(const SplitOctonion<double>& a, const SplitOctonion<double>& b) {
  double num = 0.0, den = 1.0;
  for (std::size_t i = 0; i < 8; ++i) {
    num = std::max(num, std::abs(a.c[i] - b.c[i]));
    den = std::max(den, std::abs(b.c[i]));
  }
  return num / den;
}

int cmd_mul(const std::string& x_text, const std::string& b_text, const std::string& algo,
            const std::string& format, bool use_float, bool self_check) {
  const auto x = splitoct::parse_octonion_text(x_text);
  const auto b = splitoct::parse_octonion_text(b_text);
  if (!x || !b) {
    std::cerr << "error: operands must be 8 comma-separated scalars (decimal or p/q)\n";
    return kExitUsage;
  }

  nlohmann::json coeffs = nlohmann::json::array();
  std::string text_out;
  bool check_ok = true;

  if (use_float) {
    const auto xd = splitoct::to_double_octonion(*x);
    const auto bd = splitoct::to_double_octonion(*b);
    const auto fast = splitoct::fast_mul(xd, bd);
    const auto direct = splitoct::direct_mul(xd, bd);
    const auto& y = algo == "direct" ? direct : fast;
    if (self_check) check_ok = rel_diff(fast, direct) <= 1e-12;
    text_out = splitoct::format_octonion_text(y);
    for (std::size_t i = 0; i < 8; ++i) coeffs.push_back(y.c[i]);
  } else {
    const auto fast = splitoct::fast_mul(*x, *b);
    const auto direct = splitoct::direct_mul(*x, *b);
    const auto& y = algo == "direct" ? direct : fast;
    if (self_check) check_ok = fast == direct;
    text_out = splitoct::format_octonion_text(y);
    for (std::size_t i = 0; i < 8; ++i) coeffs.push_back(y.c[i].str());
  }

  if (format == "json") {
    nlohmann::json j{{"coeffs", coeffs}};
    if (self_check) j["self_check"] = check_ok;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text_out << '\n';
    if (self_check && !check_ok) std::cerr << "self-check failed: fast != direct\n";
  }
  return check_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_verify(long long random_n, std::uint64_t seed, bool symbolic, const std::string& format) {
  splitoct::verify::VerifyOptions opts;
  opts.random_n = random_n;
  opts.seed = seed;
  opts.symbolic = symbolic;
  opts.properties = true;
  const auto report = splitoct::verify::run_verification(opts);
  if (format == "json")
    std::cout << report.render_json().dump(2) << '\n';
  else
    std::cout << report.render_text();
  return report.pass() ? kExitOk : kExitVerifyFailure;
}

int cmd_count(const std::string& algo, const std::string& format) {
  const auto audit = splitoct::verify::count_audit();
  auto counts_json = [](const OpCounts& c) {
    return nlohmann::json{{"mults", c.mults}, {"adds", c.adds}, {"shifts", c.shifts}};
  };
  auto counts_text = [](const OpCounts& c) {
    return "mults=" + std::to_string(c.mults) + " adds=" + std::to_string(c.adds) +
           " shifts=" + std::to_string(c.shifts);
  };

  if (algo == "prepared") {
    if (format == "json") {
      nlohmann::json j = counts_json(audit.apply);
      j["prep"] = counts_json(audit.prep);
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "apply: " << counts_text(audit.apply) << '\n'
                << "prep: " << counts_text(audit.prep) << '\n';
    }
    return kExitOk;
  }
  const OpCounts& c = algo == "direct" ? audit.direct : audit.fast;
  if (format == "json")
    std::cout << counts_json(c).dump() << '\n';
  else
    std::cout << algo << ": " << counts_text(c) << '\n';
  return kExitOk;
}

struct BenchRow {
  std::string name;
  double ns_per_op = 0.0;
  double checksum = 0.0;
};

template <typename Body>
BenchRow bench_loop(const std::string& name, long long iters, Body&& body) {
  using clock = std::chrono::steady_clock;
  // Warmup, then median of 5 timed runs. The checksum consumes every
  // result so the loop cannot be eliminated.
  double checksum = 0.0;
  const long long warmup = std::max<long long>(1, iters / 10);
  for (long long i = 0; i < warmup; ++i) checksum += body(i);
  std::vector<double> runs;
  for (int run = 0; run < 5; ++run) {
    checksum = 0.0;
    const auto start = clock::now();
    for (long long i = 0; i < iters; ++i) checksum += body(i);
    const auto stop = clock::now();
    const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
    runs.push_back(ns / static_cast<double>(iters));
  }
  std::sort(runs.begin(), runs.end());
  return BenchRow{name, runs[2], checksum};
}

int cmd_bench(long long iters, bool reuse_prepared) {
  constexpr std::size_t kPool = 256;
  splitoct::DoubleGen gen(0xbe9c45eedULL, 100.0);
  std::vector<SplitOctonion<double>> xs, bs;
  xs.reserve(kPool);
  bs.reserve(kPool);
  for (std::size_t i = 0; i < kPool; ++i) {
    xs.push_back(gen.next_octonion());
    bs.push_back(gen.next_octonion());
  }
  auto fold = [](const SplitOctonion<double>& y) {
    double acc = 0.0;
    for (double v : y.c) acc += v;
    return acc;
  };

  std::vector<BenchRow> rows;
  rows.push_back(bench_loop("direct", iters, [&](long long i) {
    const std::size_t k = static_cast<std::size_t>(i) % kPool;
    return fold(splitoct::direct_mul(xs[k], bs[k]));
  }));
  rows.push_back(bench_loop("fast", iters, [&](long long i) {
    const std::size_t k = static_cast<std::size_t>(i) % kPool;
    return fold(splitoct::fast_mul_unrolled(xs[k], bs[k]));
  }));
  if (reuse_prepared) {
    std::vector<splitoct::PreparedMultiplier<double>> prepared;
    prepared.reserve(kPool);
    for (std::size_t i = 0; i < kPool; ++i) prepared.push_back(splitoct::prepare_unrolled(bs[i]));
    rows.push_back(bench_loop("apply_only", iters, [&](long long i) {
      const std::size_t k = static_cast<std::size_t>(i) % kPool;
      return fold(splitoct::apply_unrolled(prepared[k], xs[k]));
    }));
  }

  std::cout << "algo         ns_per_op     checksum\n";
  bool finite = true;
  for (const auto& row : rows) {
    std::cout << row.name;
    for (std::size_t i = row.name.size(); i < 13; ++i) std::cout << ' ';
    std::cout << row.ns_per_op << "      " << row.checksum << '\n';
    finite = finite && std::isfinite(row.ns_per_op) && std::isfinite(row.checksum) &&
             row.ns_per_op > 0.0;
  }
  const double ref = rows[0].checksum;
  bool match = true;
  for (const auto& row : rows) {
    const double denom = std::max(1.0, std::abs(ref));
    match = match && std::abs(row.checksum - ref) / denom <= 1e-9;
  }
  std::cout << "checksum_match: " << (match ? "true" : "false") << '\n';
  return finite && match ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split-octonion products, verification, operation counts, and benchmarks"};
  app.require_subcommand(1);

  std::string x_text, b_text;
  std::string algo = "fast";
  std::string format = "text";
  bool use_float = false;
  bool self_check = false;
  auto* mul = app.add_subcommand("mul", "multiply two split-octonions (x * b)");
  mul->add_option("x", x_text, "left operand: 8 comma-separated scalars")->required();
  mul->add_option("b", b_text, "right operand: 8 comma-separated scalars")->required();
  mul->add_option("--algo", algo, "direct|fast")->check(CLI::IsMember({"direct", "fast"}));
  mul->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  mul->add_flag("--float", use_float, "compute over doubles instead of exact rationals");
  mul->add_flag("--self-check", self_check,
                "also run the other path and compare (exact, or 1e-12 relative with --float)");

  long long random_n = 10000;
  std::uint64_t seed = 1;
  bool symbolic = false;
  std::string verify_format = "text";
  auto* ver = app.add_subcommand("verify", "run the verification harness");
  ver->add_option("--random", random_n, "number of random equivalence pairs (0 disables)")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", seed, "random seed");
  ver->add_flag("--symbolic", symbolic, "also replay the schedule over polynomial indeterminates");
  ver->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string count_algo = "fast";
  std::string count_format = "text";
  auto* cnt = app.add_subcommand("count", "report operation counts for one product");
  cnt->add_option("--algo", count_algo, "direct|fast|prepared")
      ->check(CLI::IsMember({"direct", "fast", "prepared"}));
  cnt->add_option("--format", count_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  long long iters = 100000;
  bool reuse_prepared = false;
  auto* bench = app.add_subcommand("bench", "time direct vs fast over doubles (informational)");
  bench->add_option("--iters", iters, "iterations per timed run")->check(CLI::PositiveNumber);
  bench->add_flag("--reuse-prepared", reuse_prepared, "also time apply against prepared b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (mul->parsed()) return cmd_mul(x_text, b_text, algo, format, use_float, self_check);
  if (ver->parsed()) return cmd_verify(random_n, seed, symbolic, verify_format);
  if (cnt->parsed()) return cmd_count(count_algo, count_format);
  if (bench->parsed()) return cmd_bench(iters, reuse_prepared);
  return kExitUsage;
}
