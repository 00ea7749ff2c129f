#include <iostream>

#include <CLI11.hpp>

#include "hkdet/cli.hpp"

// Command-line front end for the staircase-monomial counting library.
// Subcommands: hk (colength table), count (one N/M count), verify
// (identity suites), fit (polynomial interpolation). Data goes to standard
// output, diagnostics to standard error. Exit codes: 0 success, 1
// verification failure, 2 usage error, 3 work-budget exhaustion.
int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert-Kunz colength counts for 2x2 determinantal rings"};
  app.require_subcommand(1);

  hkdet::cli::HkOptions hk_opts;
  CLI::App* hk = app.add_subcommand("hk", "Tabulate the colength over a q range");
  hk->add_option("--m", hk_opts.m, "Number of matrix rows")->required();
  hk->add_option("--n", hk_opts.n, "Number of matrix columns")->required();
  hk->add_option("--q", hk_opts.q, "Single Frobenius exponent value");
  hk->add_option("--q-range", hk_opts.q_range, "Inclusive range A:B of q values");
  hk->add_option("--format", hk_opts.format, "Output format: csv or json");

  hkdet::cli::CountOptions count_opts;
  CLI::App* count = app.add_subcommand("count", "Evaluate a single staircase-monomial count");
  count->add_option("--kind", count_opts.kind, "Count kind: nq or mq")->required();
  count->add_option("--m", count_opts.m, "Number of matrix rows")->required();
  count->add_option("--n", count_opts.n, "Number of matrix columns")->required();
  count->add_option("--q", count_opts.q, "Frobenius exponent")->required();
  count->add_option("--rows", count_opts.rows,
                    "Row bounds: 'inf' or comma-separated naturals/'inf'");
  count->add_option("--cols", count_opts.cols,
                    "Column bounds: 'inf' or comma-separated naturals/'inf'");
  count->add_option("--method", count_opts.method,
                    "closed, oracle-margins or oracle-matrix");
  count->add_option("--format", count_opts.format, "Output format: csv or json");
  count->add_option("--work-budget", count_opts.work_budget,
                    "Enumeration step limit (overrides HKDET_WORK_BUDGET)");

  hkdet::cli::VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Run the identity verification suites");
  verify->add_option("--suite", verify_opts.suite,
                     "all, oracle, corollary, m2, symmetry, compositions or polyfit");
  verify->add_option("--max-m", verify_opts.max_m, "Grid limit for m");
  verify->add_option("--max-n", verify_opts.max_n, "Grid limit for n");
  verify->add_option("--max-q", verify_opts.max_q, "Grid limit for q");
  verify->add_option("--work-budget", verify_opts.work_budget,
                     "Enumeration step limit (overrides HKDET_WORK_BUDGET)");

  hkdet::cli::FitOptions fit_opts;
  CLI::App* fit = app.add_subcommand("fit", "Interpolate the count as a polynomial in q");
  fit->add_option("--m", fit_opts.m, "Number of matrix rows")->required();
  fit->add_option("--n", fit_opts.n, "Number of matrix columns")->required();
  fit->add_option("--check-upto", fit_opts.check_upto,
                  "Verify the polynomial against the count for q = 1..N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hkdet::cli::kSuccess : hkdet::cli::kUsageError;
  }

  if (*hk) return hkdet::cli::run_hk(hk_opts, std::cout, std::cerr);
  if (*count) return hkdet::cli::run_count(count_opts, std::cout, std::cerr);
  if (*verify) return hkdet::cli::run_verify(verify_opts, std::cout, std::cerr);
  return hkdet::cli::run_fit(fit_opts, std::cout, std::cerr);
}
