// Small shared result type for verification sweeps: how much was checked and
// a line per violation (empty = clean pass).
#pragma once

#include <string>
#include <vector>

namespace partlib {

struct check_report {
  std::string name;
  unsigned long long checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace partlib
