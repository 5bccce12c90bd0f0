#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "adhm/datum.hpp"

namespace adhm::sweep {

// Hand-built size-2 solutions on the boundary of the stability picture.
// Family one is neither stable nor costable yet its moment-map derivative
// is surjective. Family two carries a nontrivial stabilizer; its reports
// are printed rather than pinned.
AdhmDatum borderline_family_one();
AdhmDatum borderline_family_two();

// One named acceptance check. All checks are exact: a single mismatch
// anywhere fails the check and the detail string points at the first
// offending configuration.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 424242;
};

// Runs every check, streaming one "PASS name" / "FAIL name: detail" line
// per check plus a summary line. Returns the individual results.
std::vector<CheckResult> run_all(const Options& options, std::ostream& out);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace adhm::sweep
