#pragma once

#include <string>
#include <vector>

namespace greenfn {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// Caps every criterion's largest n; 0 keeps the built-in bounds.
  int max_n = 0;
  /// Criteria to run; empty means all of 1..10.
  std::vector<int> only;
  unsigned jobs = 1;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, int max_n = 0);
/// Results in increasing id order regardless of jobs.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);
/// "criterion 3 PASS paving positivity and dimension (1.20 s): detail"
std::string format_result(const CriterionResult& result);

/// Off-diagonal P entries of the GL_n principal series against charge
/// Kostka-Foulkes polynomials under each candidate normalization; returns the
/// names of the candidates that match for every n <= max_n.
std::vector<std::string> kostka_matching_conventions(int max_n);

}  // namespace greenfn
