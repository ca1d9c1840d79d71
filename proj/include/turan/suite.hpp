#pragma once

#include "turan/graph.hpp"

#include <string>
#include <vector>

namespace turan {

enum class SuiteLevel { kQuick, kFull };

struct SuiteItem {
  std::string id;        // "c<criterion>-..." or "oq-..." for open questions
  int criterion = 0;     // 0 = informational report outside the numbered list
  bool hard = true;      // hard items decide the exit status
  bool pass = true;
  std::string observed;
  std::string expected;
  double seconds = 0.0;
};

struct SuiteReport {
  SuiteLevel level = SuiteLevel::kQuick;
  std::vector<SuiteItem> items;
  bool all_hard_pass = true;
  double seconds = 0.0;
};

// The acceptance battery.  Quick skips the n = 8 oracle items and all q >= 11
// Füredi builds; failures are recorded as data, never thrown.
SuiteReport run_suite(SuiteLevel level, int jobs = 1);

}  // namespace turan
