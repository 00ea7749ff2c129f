#ifndef HKDET_CLI_HPP
#define HKDET_CLI_HPP

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hkdet/closed_forms.hpp"
#include "hkdet/integer.hpp"
#include "hkdet/polynomial.hpp"
#include "hkdet/staircase.hpp"
#include "hkdet/verify.hpp"
#include "hkdet/work_budget.hpp"

namespace hkdet::cli {

// Stable exit-code contract shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

// Environment override for the enumeration work budget; a --work-budget
// flag takes precedence over it.
inline constexpr const char* kWorkBudgetEnvVar = "HKDET_WORK_BUDGET";

namespace detail {

inline long long parse_nonneg(const std::string& text, const char* what) {
  long long value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 0)
    throw std::invalid_argument(std::string(what) + ": expected a non-negative integer, got '" +
                                text + "'");
  return value;
}

}  // namespace detail

// Inclusive range of q values, "A:B" with A <= B.
struct QRange {
  long long lo = 0;
  long long hi = 0;
};

inline QRange parse_q_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--q-range: expected A:B, got '" + text + "'");
  QRange range;
  range.lo = detail::parse_nonneg(text.substr(0, colon), "--q-range");
  range.hi = detail::parse_nonneg(text.substr(colon + 1), "--q-range");
  if (range.lo > range.hi)
    throw std::invalid_argument("--q-range: empty range '" + text + "'");
  return range;
}

// Bound-vector syntax: the token "inf" alone means every bound infinite;
// otherwise a comma-separated list of length `count` whose elements are
// non-negative integers or "inf".
inline std::vector<Bound> parse_bounds(const std::string& text, long long count,
                                       const char* what) {
  std::vector<Bound> bounds;
  if (text == "inf") {
    bounds.assign(static_cast<std::size_t>(count), Bound::infinity());
    return bounds;
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token == "inf")
      bounds.push_back(Bound::infinity());
    else
      bounds.push_back(Bound(detail::parse_nonneg(token, what)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<long long>(bounds.size()) != count)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                " bounds, got " + std::to_string(bounds.size()));
  return bounds;
}

// Flag wins over the environment variable; an unset pair falls back to the
// default limit. A malformed environment value is reported only when it
// would actually be used.
inline std::uint64_t resolve_work_budget(const std::optional<std::uint64_t>& flag,
                                         const char* env_value) {
  if (flag) return *flag;
  if (env_value != nullptr) {
    std::uint64_t value = 0;
    const char* end = env_value;
    while (*end != '\0') ++end;
    const auto [ptr, ec] = std::from_chars(env_value, end, value);
    if (ec != std::errc() || ptr != end)
      throw std::invalid_argument(std::string(kWorkBudgetEnvVar) +
                                  ": expected a non-negative integer, got '" + env_value + "'");
    return value;
  }
  return WorkBudget::kDefaultLimit;
}

namespace detail {

inline bool all_infinite(const std::vector<Bound>& bounds) {
  for (const Bound& b : bounds)
    if (b.is_finite()) return false;
  return true;
}

inline bool all_equal_to(const std::vector<Bound>& bounds, long long v) {
  for (const Bound& b : bounds)
    if (!b.is_finite() || b.value() != v) return false;
  return true;
}

}  // namespace detail

struct HkOptions {
  long long m = 0;
  long long n = 0;
  std::optional<long long> q;
  std::optional<std::string> q_range;
  std::string format = "csv";
};

// Emits one record per q, ordered by q ascending. Counts are decimal
// strings in both formats because they outgrow 64 bits quickly.
inline int run_hk(const HkOptions& opts, std::ostream& out, std::ostream& err) {
  QRange range;
  try {
    if (opts.m < 1 || opts.n < 1)
      throw std::invalid_argument("hk: --m and --n must be positive");
    if (opts.q && opts.q_range)
      throw std::invalid_argument("hk: --q and --q-range are mutually exclusive");
    if (opts.q) {
      if (*opts.q < 0) throw std::invalid_argument("hk: --q must be non-negative");
      range = {*opts.q, *opts.q};
    } else if (opts.q_range) {
      range = parse_q_range(*opts.q_range);
    } else {
      throw std::invalid_argument("hk: one of --q or --q-range is required");
    }
    if (opts.format != "csv" && opts.format != "json")
      throw std::invalid_argument("hk: --format must be csv or json");
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  if (opts.format == "csv") {
    out << "m,n,q,hk\n";
    for (long long q = range.lo; q <= range.hi; ++q)
      out << opts.m << ',' << opts.n << ',' << q << ',' << hk_closed(opts.m, opts.n, q).str()
          << '\n';
  } else {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (long long q = range.lo; q <= range.hi; ++q) {
      nlohmann::ordered_json rec;
      rec["m"] = opts.m;
      rec["n"] = opts.n;
      rec["q"] = q;
      rec["hk"] = hk_closed(opts.m, opts.n, q).str();
      records.push_back(std::move(rec));
    }
    out << records.dump(2) << '\n';
  }
  return kSuccess;
}

struct CountOptions {
  std::string kind;  // "nq" or "mq"
  long long m = 0;
  long long n = 0;
  long long q = 0;
  std::optional<std::string> rows;  // omitted: the kind's canonical bounds
  std::optional<std::string> cols;
  std::string method = "oracle-margins";  // closed | oracle-margins | oracle-matrix
  std::string format = "csv";
  std::optional<std::uint64_t> work_budget;
};

// Evaluates a single count. Omitted bound vectors default to the bounds of
// the headline quantities: all infinite for kind=nq (the full colength
// count) and all q-1 for kind=mq (where all-infinite columns would make
// the count trivially zero). The closed method accepts exactly the bound
// patterns the closed formulas cover and is a usage error elsewhere.
inline int run_count(const CountOptions& opts, std::ostream& out, std::ostream& err) {
  CountSpec spec;
  std::uint64_t budget_limit = 0;
  try {
    if (opts.kind != "nq" && opts.kind != "mq")
      throw std::invalid_argument("count: --kind must be nq or mq");
    if (opts.format != "csv" && opts.format != "json")
      throw std::invalid_argument("count: --format must be csv or json");
    if (opts.method != "closed" && opts.method != "oracle-margins" &&
        opts.method != "oracle-matrix")
      throw std::invalid_argument("count: --method must be closed, oracle-margins or oracle-matrix");
    spec.m = opts.m;
    spec.n = opts.n;
    spec.q = opts.q;
    spec.kind = opts.kind == "nq" ? CountKind::kNType : CountKind::kMType;
    const long long default_cap = opts.q >= 1 ? opts.q - 1 : 0;
    spec.row_bounds =
        opts.rows ? parse_bounds(*opts.rows, opts.m, "--rows")
                  : std::vector<Bound>(static_cast<std::size_t>(opts.m),
                                       spec.kind == CountKind::kNType ? Bound::infinity()
                                                                      : Bound(default_cap));
    spec.col_bounds =
        opts.cols ? parse_bounds(*opts.cols, opts.n, "--cols")
                  : std::vector<Bound>(static_cast<std::size_t>(opts.n),
                                       spec.kind == CountKind::kNType ? Bound::infinity()
                                                                      : Bound(default_cap));
    validate(spec);
    budget_limit = resolve_work_budget(opts.work_budget, std::getenv(kWorkBudgetEnvVar));
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  Int count;
  if (opts.method == "closed") {
    const bool rows_inf = detail::all_infinite(spec.row_bounds);
    const bool rows_cap = !opts.rows || detail::all_equal_to(spec.row_bounds, spec.q - 1);
    const bool cols_inf = detail::all_infinite(spec.col_bounds);
    const bool cols_cap = !opts.cols || detail::all_equal_to(spec.col_bounds, spec.q - 1);
    if (spec.m < 1) {
      err << "count: the closed formulas require m >= 1\n";
      return kUsageError;
    }
    if (spec.kind == CountKind::kNType && rows_inf && cols_inf) {
      count = hk_closed(spec.m, spec.n, spec.q);
    } else if (spec.kind == CountKind::kNType && rows_inf &&
               detail::all_equal_to(spec.col_bounds, spec.q - 1)) {
      count = nq_col_bounded_closed(spec.m, spec.n, spec.q);
    } else if (spec.kind == CountKind::kMType && (rows_inf || rows_cap) && cols_cap) {
      count = mq_closed(spec.m, spec.n, spec.q);
    } else {
      err << "count: no closed formula covers these bounds; use an oracle method\n";
      return kUsageError;
    }
  } else {
    try {
      WorkBudget budget(budget_limit);
      count = opts.method == "oracle-margins" ? count_oracle(spec, budget)
                                              : count_oracle_matrix(spec, budget);
    } catch (const WorkBudgetError& e) {
      err << e.what() << '\n';
      return kResourceLimit;
    }
  }

  if (opts.format == "csv") {
    out << "kind,m,n,q,count\n";
    out << opts.kind << ',' << spec.m << ',' << spec.n << ',' << spec.q << ',' << count.str()
        << '\n';
  } else {
    nlohmann::ordered_json rec;
    rec["kind"] = opts.kind;
    rec["m"] = spec.m;
    rec["n"] = spec.n;
    rec["q"] = spec.q;
    rec["count"] = count.str();
    nlohmann::ordered_json records = nlohmann::ordered_json::array({std::move(rec)});
    out << records.dump(2) << '\n';
  }
  return kSuccess;
}

struct VerifyOptions {
  std::string suite = "all";
  std::optional<long long> max_m;
  std::optional<long long> max_n;
  std::optional<long long> max_q;
  std::optional<std::uint64_t> work_budget;
};

// Runs the named identity suite (or all of them) and reports one line per
// suite. Exit 0 only if every identity held; the first counterexample is
// printed otherwise.
inline int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::uint64_t budget_limit = 0;
  try {
    budget_limit = resolve_work_budget(opts.work_budget, std::getenv(kWorkBudgetEnvVar));
    const bool known = opts.suite == "all" || opts.suite == "oracle" ||
                       opts.suite == "corollary" || opts.suite == "m2" ||
                       opts.suite == "symmetry" || opts.suite == "compositions" ||
                       opts.suite == "polyfit";
    if (!known)
      throw std::invalid_argument(
          "verify: --suite must be one of all, oracle, corollary, m2, symmetry, "
          "compositions, polyfit");
    if ((opts.max_m && *opts.max_m < 1) || (opts.max_n && *opts.max_n < 1) ||
        (opts.max_q && *opts.max_q < 0))
      throw std::invalid_argument("verify: grid limits out of range");
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  const auto want = [&](const char* name) {
    return opts.suite == "all" || opts.suite == name;
  };
  // Per-suite default grids, overridable by the --max-* flags.
  const auto lim = [](const std::optional<long long>& flag, long long fallback) {
    return flag ? *flag : fallback;
  };

  std::vector<CheckReport> reports;
  try {
    if (want("oracle"))
      reports.push_back(check_oracle(lim(opts.max_m, 3), lim(opts.max_n, 3),
                                     lim(opts.max_q, 5), budget_limit));
    if (want("corollary"))
      reports.push_back(check_corollary(lim(opts.max_n, 10), lim(opts.max_q, 50)));
    if (want("m2")) reports.push_back(check_m2(lim(opts.max_n, 8), lim(opts.max_q, 30)));
    if (want("symmetry"))
      reports.push_back(
          check_symmetry(lim(opts.max_m, 6), lim(opts.max_n, 6), lim(opts.max_q, 30)));
    if (want("compositions"))
      reports.push_back(check_compositions(lim(opts.max_m, 6), lim(opts.max_n, 6),
                                           lim(opts.max_q, 20), budget_limit));
    if (want("polyfit"))
      reports.push_back(check_polyfit(lim(opts.max_m, 4), lim(opts.max_n, 4), 100));
    if (opts.suite == "all") {
      reports.push_back(check_margins_roundtrip());
      reports.push_back(check_margins_uniqueness());
    }
  } catch (const WorkBudgetError& e) {
    err << e.what() << '\n';
    return kResourceLimit;
  }

  bool all_passed = true;
  for (const CheckReport& report : reports) {
    if (report.passed) {
      out << report.suite << ": " << report.checks << " checks passed\n";
    } else {
      out << report.suite << ": FAILED: " << report.failure << '\n';
      all_passed = false;
    }
  }
  return all_passed ? kSuccess : kVerificationFailure;
}

struct FitOptions {
  long long m = 0;
  long long n = 0;
  long long check_upto = 100;
};

// Interpolates the count as a polynomial in q and emits it as a single
// JSON object. Rational coefficients appear as {num, den} decimal strings,
// constant term first.
inline int run_fit(const FitOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.m < 1 || opts.n < 1)
      throw std::invalid_argument("fit: --m and --n must be positive");
    if (opts.check_upto < 1)
      throw std::invalid_argument("fit: --check-upto must be positive");
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  ExactPolynomial poly;
  try {
    poly = interpolate_hk(opts.m, opts.n);
    for (long long q = 1; q <= opts.check_upto; ++q) {
      if (poly(q) != Rational(hk_closed(opts.m, opts.n, q)))
        throw PolynomialFitError("fit: polynomial disagrees with the count at q = " +
                                 std::to_string(q));
    }
  } catch (const PolynomialFitError& e) {
    err << e.what() << '\n';
    return kVerificationFailure;
  }

  const auto rational_json = [](const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = numerator(r).str();
    j["den"] = denominator(r).str();
    return j;
  };
  nlohmann::ordered_json result;
  result["m"] = opts.m;
  result["n"] = opts.n;
  result["degree"] = poly.degree();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Rational& c : poly.coefficients()) coeffs.push_back(rational_json(c));
  result["coefficients"] = std::move(coeffs);
  result["leading_coefficient"] = rational_json(leading_coefficient(poly));
  result["verified_upto"] = opts.check_upto;
  out << result.dump(2) << '\n';
  return kSuccess;
}

}  // namespace hkdet::cli

#endif  // HKDET_CLI_HPP
