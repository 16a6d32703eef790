#pragma once

#include <string>
#include <vector>

namespace patchcount {

struct VerifyCheck {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  int failures = 0;
  int skipped = 0;
};

struct VerifyOptions {
  std::string data_dir = ".";  // repository root holding tables/ and patches/
  bool allow_long = false;     // also run the multi-hour reproduction
  int threads = 1;
};

// Runs the full verification suite: exact anchors, the determinant/dynamic
// program/word-class cross checks, the cut-invariance and split-conservation
// properties, and the bound-table reproduction.
VerifyReport run_verification(const VerifyOptions& options);

// One PASS/FAIL/SKIP line per check plus a summary line.
std::string format_verify_report(const VerifyReport& report);

}  // namespace patchcount
