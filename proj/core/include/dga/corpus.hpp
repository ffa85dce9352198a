#pragma once

#include <string>
#include <vector>

#include "dga/constructions.hpp"
#include "dga/json_io.hpp"

namespace dga {

/// One expected value of a fixture. The tag records where the expectation
/// comes from: "PAPER" (a literal claim), "DERIVED" (recomputed through an
/// independent route) or "TRIVIAL".
struct FixtureCheck {
  std::string name;
  std::string tag;
  bool passed = false;
  std::string detail;
};

struct FixtureReport {
  std::string fixture;
  std::vector<FixtureCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

const std::vector<std::string>& fixture_names();

/// Raw JSON text of the fixture's connection data. Honors the
/// DGA_FIXTURE_DIR environment variable: when set, <dir>/<name>.json is
/// read instead of the embedded copy. Unknown name -> DataError.
std::string fixture_text(const std::string& name);

SymplecticConnectionData fixture_data(const std::string& name);

/// Runs the pipeline on the fixture and diffs every expected value.
FixtureReport run_fixture(const std::string& name);

Json fixture_report_to_json(const FixtureReport& rep);

}  // namespace dga
