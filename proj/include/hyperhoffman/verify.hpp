// Copyright 2026 The hyperhoffman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <vector>

#include "hyperhoffman/config.hpp"

namespace hyperhoffman {

enum class CheckStatus { Pass, Fail, Info };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string property;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  /// Concrete counterexample on failure (family, p, both sides).
  Json witness;
};

struct VerifySuiteResult {
  std::vector<CheckResult> checks;  ///< ordered by id
  bool passed() const;
  /// 0 when every check passes or is informational, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
};

/// Runs the registered checks. Uses p and r from the config when given for
/// the bound/oracle and validity checks; the identity checks always sweep
/// every family at n = 3.
VerifySuiteResult run_verify(const RunConfig& config);

Json report_json(const VerifySuiteResult& v);

}  // namespace hyperhoffman
