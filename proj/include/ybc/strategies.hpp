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

// Repeated application of R(theta, phi) to a system plus ancilla, and the
// published closed-form coherence expressions for the reduced system.
//
// One-qubit strategy: qubits (S, A), input (sqrt(1-x)|0> + sqrt(x)|1>) x |0>,
// R acts on both qubits.
// Two-qubit strategy: qubits (S1, S2, A), input
// (sqrt(1-x)|01> + sqrt(x)|10>) x |0>, R acts on (S2, A).
//
// The density-matrix simulation is the reference; the closed forms and the
// element-wise expressions are evaluated independently and compared against it.

#pragma once

#include "ybc/braid_ybe.hpp"
#include "ybc/linalg.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ybc {

enum class StrategyKind { OneQubit, TwoQubit };

std::string_view to_string(StrategyKind kind);

struct StrategySpec {
  StrategyKind kind{StrategyKind::OneQubit};
  double x{0};
  int n_uses{1};
  GateParams<double> gate{};

  /// Throws DomainError unless 0 <= x <= 1 and n_uses >= 1.
  void validate() const;
};

/// Parameters of the one-qubit closed form (alpha .. Delta) and the two-qubit
/// closed form (a, b). Both sets share epsilon = sqrt(2 x (1 - x)).
struct ClosedFormParams {
  double alpha{0};
  double beta{0};
  double gamma{0};
  double delta{0};
  double epsilon{0};
  double Delta{0};
  double a{0};
  double b{0};
};

ClosedFormParams one_qubit_params(double x, double theta, double phi, int n);
ClosedFormParams two_qubit_params(double x, double theta, int n);

using Density = DensityMatrix<double>;

Density prepare_one_qubit_input(double x);
Density prepare_two_qubit_input(double x);
Density prepare_input(const StrategySpec& spec);

/// Full-register operator for one channel use: R for the one-qubit strategy,
/// I2 x R for the two-qubit strategy.
ComplexMatrix channel_operator(StrategyKind kind, const ComplexMatrix& gate);

/// sigma = U^n rho U^dagger^n with U = channel_operator(kind, gate).
Density apply_gate(const Density& rho, StrategyKind kind, const ComplexMatrix& gate, int n);

/// Applies spec.n_uses uses of R(spec.gate).
Density apply_channel(const Density& rho, const StrategySpec& spec);

/// Traces out the ancilla (the last qubit).
Density reduced_system_state(const Density& sigma_sa, StrategyKind kind);

struct Simulation {
  Density joint;
  Density reduced;
  double c_l1{0};
  double c_r{0};
};

/// Prepares the input, applies the channel, and measures the reduced state.
/// `perturbation`, when given, left-multiplies the 4x4 gate (R -> P R).
Simulation simulate(const StrategySpec& spec, const ComplexMatrix* perturbation = nullptr);

/// Published l1 coherence for the one-qubit strategy (odd/even N branches).
double closed_form_c_one(double x, double theta, double phi, int n);

/// Published l1 coherence for the two-qubit strategy (odd/even N branches).
double closed_form_c_two(double x, double theta, int n);

struct AppendixEvaluation {
  Density reduced;
  double c_l1{0};
  /// A removable singularity or x endpoint was evaluated through its limit.
  bool limit_path{false};
  /// A diagonal entry came out below -1e-10.
  bool negative_diagonal{false};
};

/// Assembles the 2x2 reduced state from the published element formulas.
/// Throws DomainError at a sec^2/csc^2 pole whose companion factor does not
/// vanish.
AppendixEvaluation appendix_b_reduced(double x, double theta, double phi, int n);

/// Assembles the 4x4 reduced state from the published element relations.
AppendixEvaluation appendix_c_reduced(double x, double theta, double phi, int n);

enum class Formula { ClosedOne, ClosedTwo, AppendixB, AppendixC };

std::string_view to_string(Formula f);

struct SimRecord {
  StrategyKind kind{StrategyKind::OneQubit};
  double x{0};
  double theta{0};
  double phi{0};
  int n_uses{1};
  double c_l1_sim{0};
  double c_l1_closed{0};
  /// NaN when the element formulas hit a non-removable pole.
  double c_l1_appendix{0};
  double c_r_sim{0};
  double deviation_closed{0};
  double deviation_appendix{0};
  bool appendix_domain_error{false};
  bool appendix_negative_diagonal{false};
};

struct ReportGrid {
  std::vector<StrategyKind> kinds;
  std::vector<double> xs;
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<int> ns;
};

/// x in {0, 0.1, ..., 1}, 64 angles over [0, 2 pi), phi in {0, pi/4},
/// N in {1, 2, 3, 4}, both strategies.
ReportGrid default_report_grid();

struct ReportOptions {
  std::optional<ComplexMatrix> gate_perturbation;
  bool closed_forms{true};
  bool appendix_forms{true};
};

/// Deviation statistics for one formula restricted to one N parity.
struct FormulaSummary {
  Formula formula{Formula::ClosedOne};
  bool odd_n{true};
  std::size_t count{0};
  std::size_t domain_errors{0};
  std::size_t negative_diagonals{0};
  double max_deviation{0};
  double mean_deviation{0};
  std::size_t half_pi_count{0};
  /// Maximum deviation over theta = pi/2 points; infinite if any of them hit a
  /// domain error.
  double half_pi_max_deviation{0};
};

struct DiscrepancyReport {
  std::vector<SimRecord> records;
  std::vector<FormulaSummary> summaries;
  /// Largest simulated two-qubit reduced coherence across the grid.
  double max_two_qubit_c_l1{0};
  /// Largest spread over phi of the simulated two-qubit coherence at fixed
  /// (x, theta, N).
  double max_two_qubit_phi_spread{0};
  /// Number of records with c_l1 < c_r (should stay zero).
  std::size_t l1_below_relative_entropy{0};

  const FormulaSummary* summary(Formula f, bool odd_n) const;
  /// Deviation maximum over both parities; NaN when the formula did not run.
  double max_deviation(Formula f) const;
  double half_pi_max_deviation(Formula f) const;
};

/// Runs the simulation and every applicable formula at each grid point.
/// Records follow grid order: kind, x, theta, phi, N (N innermost).
DiscrepancyReport discrepancy_report(const ReportGrid& grid, const ReportOptions& options = {});

/// True when theta is pi/2 modulo 2 pi within 1e-12.
bool is_half_pi(double theta);

}  // namespace ybc
