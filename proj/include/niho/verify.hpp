#pragma once

#include <string>
#include <vector>

#include "niho/exec.hpp"

namespace niho {

struct ReportRecord {
  std::string name;
  bool pass;
  std::string detail;
};

// Runs the whole cross-validation matrix for parameter fields up to max_q.
// quick caps the expensive enumerations at q <= 50 and trims sample sets.
std::vector<ReportRecord> run_verification(long long max_q, bool quick,
                                           Exec ex = Exec::parallel);

}  // namespace niho
