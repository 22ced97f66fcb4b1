// Acceptance runner: one criterion per block, one pass/fail line each.
// Usage: acceptance [criterion-number]   (no argument runs all nine)
//
// Criteria 1..8 gate the bundled suites at their runtime budgets; criterion
// 9 re-runs every suite with the same seed and requires byte-identical
// JSON reports. The exit code is the number of failed criteria.

#include "crosstopo/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace crosstopo;

constexpr std::uint64_t kSeed = 42;

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

CriterionResult run_suite_criterion(const std::string& suite,
                                    double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = run_suite(suite, kSeed);
  const double elapsed = seconds_since(start);
  CriterionResult result;
  const bool in_budget = elapsed < budget_seconds;
  result.pass = report.passed() && in_budget;
  result.detail = "suite " + suite + ": " +
                  std::to_string(report.checks.size() -
                                 static_cast<std::size_t>(
                                     report.failed_count())) +
                  "/" + std::to_string(report.checks.size()) + " checks, " +
                  std::to_string(elapsed).substr(0, 5) + "s of " +
                  std::to_string(budget_seconds).substr(0, 4) + "s budget";
  if (!report.passed()) {
    for (const SuiteCheck& c : report.checks) {
      if (!c.pass) {
        result.detail += "; FAILED " + c.id;
        break;
      }
    }
  }
  if (!in_budget) result.detail += "; over budget";
  return result;
}

CriterionResult run_determinism_criterion() {
  CriterionResult result;
  result.pass = true;
  int compared = 0;
  for (const std::string& name : suite_names()) {
    const std::string first =
        suite_report_to_json(run_suite(name, kSeed)).dump(2);
    const std::string second =
        suite_report_to_json(run_suite(name, kSeed)).dump(2);
    ++compared;
    if (first != second) {
      result.pass = false;
      result.detail = "suite " + name + " reports differ between runs";
      return result;
    }
  }
  result.detail = std::to_string(compared) +
                  " suites re-run with the fixed seed, reports byte-identical";
  return result;
}

struct Criterion {
  int number;
  std::string description;
  CriterionResult (*run)();
};

CriterionResult c1() { return run_suite_criterion("prop1", 10.0); }
CriterionResult c2() { return run_suite_criterion("prop4", 30.0); }
CriterionResult c3() { return run_suite_criterion("prop41", 10.0); }
CriterionResult c4() { return run_suite_criterion("prop3", 5.0); }
CriterionResult c5() { return run_suite_criterion("cor32", 20.0); }
CriterionResult c6() { return run_suite_criterion("lemma2", 60.0); }
CriterionResult c7() { return run_suite_criterion("refute", 30.0); }
CriterionResult c8() { return run_suite_criterion("sec5", 30.0); }
CriterionResult c9() { return run_determinism_criterion(); }

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "discrete sequences certified, complements cross-open", c1},
      {2, "compactness verdicts match the brute-force oracle", c2},
      {3, "sequence limits re-verified from the definition", c3},
      {4, "coincidence neighborhoods verified two-sided", c4},
      {5, "punctured-square connectivity at all resolutions", c5},
      {6, "exhaustive mapping enumeration and collapse dichotomy", c6},
      {7, "identity refutation witnesses for the whole family", c7},
      {8, "approximation error bounds over the ultrametric model", c8},
      {9, "byte-identical reports under a fixed seed", c9},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    const CriterionResult result = c.run();
    std::cout << (result.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << c.number << ": " << c.description << " — " << result.detail
              << "\n";
    if (!result.pass) ++failures;
  }
  return failures;
}
