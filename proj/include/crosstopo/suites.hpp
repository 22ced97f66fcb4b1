// Bundled verification suites. Each suite runs a block of seeded checks
// against an independent oracle or a frozen golden value and returns a
// deterministic report (no wall-clock data inside, so fixed seeds give
// byte-identical JSON).

#pragma once

#include "crosstopo/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crosstopo {

struct SuiteCheck {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;

  bool passed() const;
  int failed_count() const;
};

/// Known names: prop1, prop3, prop4, prop41, lemma2, cor32, sec5, refute.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, std::uint64_t seed);

Json suite_report_to_json(const SuiteReport& report);

}  // namespace crosstopo
