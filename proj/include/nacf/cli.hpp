/*
   Copyright 2026 The nacf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NACF_CLI_HPP
#define NACF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nacf/arith.hpp"

namespace nacf {

struct RunConfig {
  u64 window_lo = 2;
  u64 window_hi = 100000;
  long scan_lo = 2;
  long scan_hi = 300;
  double tol = 1e-9;
  long theta_nmax = 10000;
  std::string format = "json"; ///< json or tsv
  unsigned threads = 1;
  int prime_budget = 200;

  /// Throws DomainError when lo >= hi, tol <= 0 or the format is unknown.
  void validate() const;
};

/// Defaults with threads set to the hardware concurrency.
RunConfig default_config();

/// Applies `key = value` lines; blank lines and lines starting with '#' are
/// ignored. Throws DomainError on an unknown key or malformed value.
void apply_config_text(RunConfig &cfg, const std::string &text);
void apply_config_file(RunConfig &cfg, const std::string &path);

enum ExitCode { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs one subcommand; args excludes the program name. The config file
/// comes from --config, else from the NACF_CONFIG environment variable.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nacf

#endif // NACF_CLI_HPP
