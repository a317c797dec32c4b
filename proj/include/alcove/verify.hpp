#pragma once

// The default verification suite: one named check per headline property,
// each re-deriving its expected values independently of the code under
// test (scans, path enumeration, frozen small cases). Checks trap errors
// and report them as failures instead of aborting the run, so one broken
// property still leaves a full report.

#include <string>
#include <vector>

#include "alcove/fibers.hpp"
#include "alcove/irreducibility.hpp"

namespace alcove {

struct SuiteEntry {
  CartanSpec cs;
  LatticeSpec ls;
  IVec mu;
};

// The seven datum / coweight pairs every cross-module check runs over.
std::vector<SuiteEntry> verification_suite();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
};

// Runs every check; never throws. Order is stable.
std::vector<CheckResult> run_verify_suite();

}  // namespace alcove
