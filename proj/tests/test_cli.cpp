#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hkdet/cli.hpp"

using namespace hkdet::cli;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

template <typename Opts, typename Fn>
RunResult run(Fn fn, const Opts& opts) {
  std::ostringstream out, err;
  RunResult result;
  result.code = fn(opts, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

// Scoped environment variable override so tests cannot leak state.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) {
    ::setenv(name, value, 1);
  }
  ~EnvGuard() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("parse_q_range: accepts A:B and rejects malformed input") {
  const QRange r = parse_q_range("2:17");
  REQUIRE(r.lo == 2);
  REQUIRE(r.hi == 17);
  const QRange single = parse_q_range("5:5");
  REQUIRE(single.lo == 5);
  REQUIRE(single.hi == 5);
  REQUIRE_THROWS_AS(parse_q_range("5"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_q_range("7:3"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_q_range("a:b"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_q_range("-1:3"), std::invalid_argument);
}

TEST_CASE("parse_bounds: token syntax") {
  const auto inf3 = parse_bounds("inf", 3, "--cols");
  REQUIRE(inf3.size() == 3);
  REQUIRE_FALSE(inf3[0].is_finite());
  const auto mixed = parse_bounds("1,inf,0", 3, "--cols");
  REQUIRE(mixed[0].value() == 1);
  REQUIRE_FALSE(mixed[1].is_finite());
  REQUIRE(mixed[2].value() == 0);
  REQUIRE_THROWS_AS(parse_bounds("1,2", 3, "--cols"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_bounds("1,x", 2, "--cols"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_bounds("", 1, "--cols"), std::invalid_argument);
}

TEST_CASE("resolve_work_budget: flag wins over the environment") {
  EnvGuard env(kWorkBudgetEnvVar, "12345");
  REQUIRE(resolve_work_budget(std::nullopt, std::getenv(kWorkBudgetEnvVar)) == 12345);
  REQUIRE(resolve_work_budget(777, std::getenv(kWorkBudgetEnvVar)) == 777);
  REQUIRE(resolve_work_budget(std::nullopt, nullptr) ==
          hkdet::WorkBudget::kDefaultLimit);
  REQUIRE_THROWS_AS(resolve_work_budget(std::nullopt, "12x"), std::invalid_argument);
}

TEST_CASE("run_hk: csv bytes for a single q") {
  HkOptions opts;
  opts.m = 2;
  opts.n = 2;
  opts.q = 2;
  const RunResult r = run(run_hk, opts);
  REQUIRE(r.code == kSuccess);
  REQUIRE(r.out == "m,n,q,hk\n2,2,2,10\n");
  REQUIRE(r.err.empty());
}

TEST_CASE("run_hk: range output is ordered by q and deterministic") {
  HkOptions opts;
  opts.m = 1;
  opts.n = 1;
  opts.q_range = "1:3";
  const RunResult first = run(run_hk, opts);
  REQUIRE(first.code == kSuccess);
  REQUIRE(first.out == "m,n,q,hk\n1,1,1,1\n1,1,2,2\n1,1,3,3\n");
  const RunResult second = run(run_hk, opts);
  REQUIRE(second.out == first.out);
}

TEST_CASE("run_hk: csv and json carry the same payload") {
  HkOptions opts;
  opts.m = 3;
  opts.n = 2;
  opts.q_range = "0:4";
  const RunResult csv = run(run_hk, opts);
  opts.format = "json";
  const RunResult json = run(run_hk, opts);
  REQUIRE(csv.code == kSuccess);
  REQUIRE(json.code == kSuccess);

  const auto records = nlohmann::json::parse(json.out);
  REQUIRE(records.is_array());
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  REQUIRE(header == "m,n,q,hk");
  std::size_t idx = 0;
  std::string line;
  while (std::getline(lines, line)) {
    REQUIRE(idx < records.size());
    const auto& rec = records[idx];
    const std::string expected = std::to_string(rec["m"].get<long long>()) + "," +
                                 std::to_string(rec["n"].get<long long>()) + "," +
                                 std::to_string(rec["q"].get<long long>()) + "," +
                                 rec["hk"].get<std::string>();
    REQUIRE(line == expected);
    ++idx;
  }
  REQUIRE(idx == records.size());
}

TEST_CASE("run_hk: usage errors") {
  HkOptions opts;
  opts.m = 0;
  opts.n = 2;
  opts.q = 1;
  REQUIRE(run(run_hk, opts).code == kUsageError);
  opts.m = 2;
  opts.q.reset();
  REQUIRE(run(run_hk, opts).code == kUsageError);
  opts.q = 1;
  opts.q_range = "1:2";
  REQUIRE(run(run_hk, opts).code == kUsageError);
  opts.q_range.reset();
  opts.format = "xml";
  REQUIRE(run(run_hk, opts).code == kUsageError);
}

TEST_CASE("run_count: oracle and closed methods agree on the headline count") {
  CountOptions opts;
  opts.kind = "nq";
  opts.m = 2;
  opts.n = 2;
  opts.q = 2;
  opts.rows = "inf";
  opts.cols = "inf";
  const RunResult oracle = run(run_count, opts);
  REQUIRE(oracle.code == kSuccess);
  REQUIRE(oracle.out == "kind,m,n,q,count\nnq,2,2,2,10\n");
  opts.method = "closed";
  const RunResult closed = run(run_count, opts);
  REQUIRE(closed.out == oracle.out);
  opts.method = "oracle-matrix";
  const RunResult matrix = run(run_count, opts);
  REQUIRE(matrix.out == oracle.out);
}

TEST_CASE("run_count: the empty-rows convention") {
  CountOptions opts;
  opts.kind = "nq";
  opts.m = 0;
  opts.n = 3;
  opts.q = 5;
  const RunResult r = run(run_count, opts);
  REQUIRE(r.code == kSuccess);
  REQUIRE(r.out == "kind,m,n,q,count\nnq,0,3,5,1\n");
}

TEST_CASE("run_count: closed method accepts the canonical mq bounds") {
  CountOptions opts;
  opts.kind = "mq";
  opts.m = 2;
  opts.n = 1;
  opts.q = 3;
  opts.method = "closed";
  const RunResult r = run(run_count, opts);
  REQUIRE(r.code == kSuccess);
  REQUIRE(r.out == "kind,m,n,q,count\nmq,2,1,3,3\n");
  // Explicit q-1 bounds are the same spec.
  opts.rows = "2,2";
  opts.cols = "2";
  REQUIRE(run(run_count, opts).out == r.out);
}

TEST_CASE("run_count: closed method rejects bounds outside the formulas") {
  CountOptions opts;
  opts.kind = "nq";
  opts.m = 2;
  opts.n = 2;
  opts.q = 3;
  opts.method = "closed";
  opts.rows = "1,2";
  const RunResult r = run(run_count, opts);
  REQUIRE(r.code == kUsageError);
  REQUIRE_FALSE(r.err.empty());
  CountOptions m0;
  m0.kind = "nq";
  m0.m = 0;
  m0.n = 2;
  m0.q = 3;
  m0.method = "closed";
  REQUIRE(run(run_count, m0).code == kUsageError);
}

TEST_CASE("run_count: json payload matches csv") {
  CountOptions opts;
  opts.kind = "nq";
  opts.m = 2;
  opts.n = 3;
  opts.q = 2;
  const RunResult csv = run(run_count, opts);
  opts.format = "json";
  const RunResult json = run(run_count, opts);
  const auto records = nlohmann::json::parse(json.out);
  REQUIRE(records.size() == 1);
  REQUIRE(records[0]["kind"] == "nq");
  REQUIRE(records[0]["m"] == 2);
  REQUIRE(records[0]["n"] == 3);
  REQUIRE(records[0]["q"] == 2);
  REQUIRE(csv.out == "kind,m,n,q,count\nnq,2,3,2," +
                         records[0]["count"].get<std::string>() + "\n");
}

TEST_CASE("run_count: usage errors") {
  CountOptions opts;
  opts.kind = "xx";
  opts.m = 2;
  opts.n = 2;
  opts.q = 2;
  REQUIRE(run(run_count, opts).code == kUsageError);
  opts.kind = "mq";
  opts.m = 0;
  REQUIRE(run(run_count, opts).code == kUsageError);
  opts.m = 2;
  opts.rows = "1,2,3";
  REQUIRE(run(run_count, opts).code == kUsageError);
  opts.rows.reset();
  opts.method = "magic";
  REQUIRE(run(run_count, opts).code == kUsageError);
}

TEST_CASE("run_count: work budget exhaustion exits with the resource code") {
  CountOptions opts;
  opts.kind = "nq";
  opts.m = 3;
  opts.n = 3;
  opts.q = 5;
  opts.work_budget = 50;
  const RunResult r = run(run_count, opts);
  REQUIRE(r.code == kResourceLimit);
  REQUIRE_FALSE(r.err.empty());
}

TEST_CASE("run_count: environment budget is honored and the flag wins") {
  CountOptions opts;
  opts.kind = "nq";
  opts.m = 3;
  opts.n = 3;
  opts.q = 5;
  {
    EnvGuard env(kWorkBudgetEnvVar, "50");
    REQUIRE(run(run_count, opts).code == kResourceLimit);
    opts.work_budget = 100000000;
    REQUIRE(run(run_count, opts).code == kSuccess);
  }
  {
    EnvGuard env(kWorkBudgetEnvVar, "not-a-number");
    opts.work_budget.reset();
    REQUIRE(run(run_count, opts).code == kUsageError);
  }
  REQUIRE(run(run_count, opts).code == kSuccess);
}

TEST_CASE("run_verify: passing suites") {
  VerifyOptions opts;
  opts.suite = "corollary";
  opts.max_n = 6;
  opts.max_q = 12;
  const RunResult r = run(run_verify, opts);
  REQUIRE(r.code == kSuccess);
  REQUIRE(r.out.find("corollary:") == 0);
  REQUIRE(r.out.find("checks passed") != std::string::npos);

  VerifyOptions oracle;
  oracle.suite = "oracle";
  oracle.max_m = 2;
  oracle.max_n = 2;
  oracle.max_q = 3;
  REQUIRE(run(run_verify, oracle).code == kSuccess);
}

TEST_CASE("run_verify: unknown suite is a usage error") {
  VerifyOptions opts;
  opts.suite = "everything";
  REQUIRE(run(run_verify, opts).code == kUsageError);
}

TEST_CASE("run_verify: budget exhaustion exits with the resource code") {
  VerifyOptions opts;
  opts.suite = "oracle";
  opts.max_m = 3;
  opts.max_n = 3;
  opts.max_q = 5;
  opts.work_budget = 20;
  const RunResult r = run(run_verify, opts);
  REQUIRE(r.code == kResourceLimit);
  REQUIRE_FALSE(r.err.empty());
}

TEST_CASE("run_fit: json shape for the 2x2 polynomial") {
  FitOptions opts;
  opts.m = 2;
  opts.n = 2;
  opts.check_upto = 50;
  const RunResult r = run(run_fit, opts);
  REQUIRE(r.code == kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["degree"] == 3);
  REQUIRE(j["coefficients"].size() == 4);
  REQUIRE(j["coefficients"][0]["num"] == "0");
  REQUIRE(j["coefficients"][1]["num"] == "-1");
  REQUIRE(j["coefficients"][1]["den"] == "3");
  REQUIRE(j["leading_coefficient"]["num"] == "4");
  REQUIRE(j["leading_coefficient"]["den"] == "3");
  REQUIRE(j["verified_upto"] == 50);
}

TEST_CASE("run_fit: constant-free linear fit for one cell") {
  FitOptions opts;
  opts.m = 1;
  opts.n = 1;
  const RunResult r = run(run_fit, opts);
  REQUIRE(r.code == kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["degree"] == 1);
  REQUIRE(j["coefficients"][0]["num"] == "0");
  REQUIRE(j["coefficients"][0]["den"] == "1");
  REQUIRE(j["coefficients"][1]["num"] == "1");
}

TEST_CASE("run_fit: usage errors") {
  FitOptions opts;
  opts.m = 0;
  opts.n = 1;
  REQUIRE(run(run_fit, opts).code == kUsageError);
  opts.m = 1;
  opts.check_upto = 0;
  REQUIRE(run(run_fit, opts).code == kUsageError);
}
