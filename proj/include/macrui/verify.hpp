#pragma once

// Named families of exact identity checks, run up to a weight bound.

#include <string>
#include <vector>

#include "macrui/json_io.hpp"

namespace macrui {

struct CheckResult {
  std::string instance;
  bool pass = false;
  std::string witness;  // nonzero difference or error text when pass is false
};

struct Report {
  std::string suite;
  int max_weight = 0;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
};

/// eigen, commdia, kernel, duality, vanishing, combinatorial, cherednik, identities.
const std::vector<std::string>& suite_names();

/// Runs a suite on up to `threads` worker threads; the report order does not
/// depend on the thread count. Throws kInvalidArgument for unknown names or a
/// negative bound.
Report run_suite(const std::string& name, int max_weight, unsigned threads);

Json to_json(const Report& report);

}  // namespace macrui
