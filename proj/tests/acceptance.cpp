// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <CLI11.hpp>

#include <iostream>

#include "greenfn/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  greenfn::VerifyOptions options;
  app.add_option("--criterion", options.only, "criterion ids to run (default: all)")->check(CLI::Range(1, greenfn::kCriterionCount));
  app.add_option("--max-n", options.max_n, "cap on n for every criterion")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", options.jobs, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& r : greenfn::run_acceptance(options)) {
    std::cout << greenfn::format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
