// Copyright 2026 The lopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks, shared by the acceptance test binary and
// `lopctl selftest`.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lop/linalg.hpp"

namespace lop {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  /// Replaces every numeric tolerance of the suite (runtime limits excluded).
  std::optional<double> tolerance_override;
  std::uint64_t seed = kDefaultSeed;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// One "[PASS]"/"[FAIL]" line per criterion plus a summary line.
void print_acceptance_report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace lop
