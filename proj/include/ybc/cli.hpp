// Copyright 2026 The ybc Authors
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

// Command implementations behind the `ybc` executable. Exit codes: 0 success,
// 1 verification failure, 2 usage or I/O error.

#pragma once

#include "ybc/strategies.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ybc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Raised for malformed arguments or unusable paths; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive range "A:B:N" of N evenly spaced points. N = 1 yields A.
struct GridRange {
  double start{0};
  double stop{0};
  int count{1};

  static GridRange parse(const std::string& text);
  std::vector<double> values(double scale = 1.0) const;
};

struct SweepConfig {
  StrategyKind strategy{StrategyKind::OneQubit};
  GridRange x_grid{0, 1, 101};
  /// Angles are in units of pi.
  GridRange theta_grid{0, 2, 256};
  std::vector<double> phi_list{0.25};
  std::vector<int> n_uses{1};
  std::string output_path;
  bool measure_l1{true};
  bool measure_relative_entropy{true};

  void validate() const;
};

struct SweepRow {
  StrategyKind strategy{StrategyKind::OneQubit};
  double x{0};
  double theta{0};
  double phi{0};
  int n{1};
  double c_l1_sim{0};
  double c_r_sim{0};
  double c_l1_closed{0};
  double deviation{0};
};

/// Evaluates every grid point in x, theta, phi, N order (N innermost).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Preset grids for the figure ids 2a, 2b, 4a, 4b.
SweepConfig figure_config(const std::string& id);
const std::vector<std::string>& figure_ids();

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     const SweepConfig& config);

struct VerifyLine {
  std::string check;
  std::string name;
  double residual{0};
  double threshold{0};
  bool pass{false};
  std::string detail;
};

const std::vector<std::string>& verify_check_names();

/// Runs the algebraic suite. `only` restricts to one check group.
std::vector<VerifyLine> run_verify(double tolerance, const std::optional<std::string>& only = {});

void write_verify_report(std::ostream& os, const std::vector<VerifyLine>& lines);

void write_compare_csv(std::ostream& os, const DiscrepancyReport& report);
void write_compare_summary(std::ostream& os, const DiscrepancyReport& report);

/// Parses plain `key=value` lines; `#` starts a comment.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybc::cli
