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

#include <optional>
#include <string>
#include <vector>

#include "hyperhoffman/family.hpp"
#include "hyperhoffman/serialize.hpp"

namespace hyperhoffman {

/// Resolved settings of one run. Every report embeds this as "config".
struct RunConfig {
  std::string command = "verify";
  std::optional<int> n;
  int r = 2;
  /// Bias values as given (decimal or a/b); one value means uniform.
  std::vector<std::string> p;
  bool rational = false;
  /// eps for the perturbed r-wise construction; defaults per p.
  std::optional<double> eps;
  double ks_slack = kDefaultKsSlack;
  std::optional<double> eps_threshold;
  /// Census cutoff: families with mu_p >= p - census are recorded.
  std::optional<double> census;
  bool cross = false;
  std::optional<std::string> out;
  std::string format = "json";
  /// Classes by zero count of a custom base tensor to validate (verify only).
  std::vector<std::string> base_classes;
};

/// Thrown for malformed configuration; the CLI maps it to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Fields present in `j` override those in `base`. Unknown keys are rejected.
RunConfig merge_config(RunConfig base, const Json& j);
RunConfig load_config_file(const std::string& path, RunConfig base = {});
Json config_json(const RunConfig& c);

/// n from the config, or from the length of p.
int resolved_n(const RunConfig& c);
RationalBiasVector resolved_p_exact(const RunConfig& c);
BiasVector resolved_p(const RunConfig& c);

}  // namespace hyperhoffman
