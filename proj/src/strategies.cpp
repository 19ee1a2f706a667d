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

#include "ybc/strategies.hpp"

#include "ybc/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

namespace ybc {

namespace {

using C = ComplexScalar;
constexpr double kPi = std::numbers::pi;
constexpr double kPoleWidth = 1e-8;
constexpr double kEndpointWidth = 1e-12;
constexpr double kNegativeDiagonal = 1e-10;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_unit_interval(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << who << ": x = " << x << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

void require_positive_uses(int n, const char* who) {
  if (n < 1) {
    throw DomainError(std::string(who) + ": channel-use count must be >= 1, got " +
                      std::to_string(n));
  }
}

double sq(double v) { return v * v; }

bool is_odd(int n) { return n % 2 != 0; }

ComplexMatrix matrix_power(const ComplexMatrix& m, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int k = 0; k < n; ++k) out = m * out;
  return out;
}

bool has_negative_diagonal(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i).real() < -kNegativeDiagonal) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(StrategyKind kind) {
  return kind == StrategyKind::OneQubit ? "one" : "two";
}

std::string_view to_string(Formula f) {
  switch (f) {
    case Formula::ClosedOne:
      return "closed-one";
    case Formula::ClosedTwo:
      return "closed-two";
    case Formula::AppendixB:
      return "appendix-b";
    case Formula::AppendixC:
      return "appendix-c";
  }
  return "unknown";
}

void StrategySpec::validate() const {
  require_unit_interval(x, "StrategySpec");
  require_positive_uses(n_uses, "StrategySpec");
  if (!std::isfinite(gate.theta) || !std::isfinite(gate.phi)) {
    throw DomainError("StrategySpec: gate angles must be finite");
  }
}

ClosedFormParams one_qubit_params(double x, double theta, double phi, int n) {
  const double nt = n * theta;
  const double c2 = sq(std::cos(nt));
  ClosedFormParams p;
  p.alpha = 4 * (1 - 2 * x) * std::sin(2 * nt);
  p.beta = std::sin(phi) * c2 + std::cos(phi) * (2 - 3 * c2);
  p.gamma = -4 * sq(std::sin(nt)) * std::cos(2 * nt);
  p.delta = 1 - std::sin(2 * phi);
  p.epsilon = std::sqrt(2 * x * (1 - x));
  p.Delta = sq(p.alpha) / 8 + p.alpha * p.beta * p.epsilon + 2 * sq(p.epsilon) * p.gamma;
  return p;
}

ClosedFormParams two_qubit_params(double x, double theta, int n) {
  const double nt = n * theta;
  ClosedFormParams p;
  p.epsilon = std::sqrt(2 * x * (1 - x));
  p.a = (is_odd(n + 1) ? -1.0 : 1.0) * std::cos(2 * nt);
  p.b = std::abs(std::sin(2 * nt)) / std::sqrt(2.0);
  return p;
}

Density prepare_one_qubit_input(double x) {
  require_unit_interval(x, "prepare_one_qubit_input");
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0b00) = std::sqrt(1 - x);
  psi(0b10) = std::sqrt(x);
  return Density::from_pure(PureState<double>(psi));
}

Density prepare_two_qubit_input(double x) {
  require_unit_interval(x, "prepare_two_qubit_input");
  ComplexVector psi = ComplexVector::Zero(8);
  psi(0b010) = std::sqrt(1 - x);
  psi(0b100) = std::sqrt(x);
  return Density::from_pure(PureState<double>(psi));
}

Density prepare_input(const StrategySpec& spec) {
  return spec.kind == StrategyKind::OneQubit ? prepare_one_qubit_input(spec.x)
                                             : prepare_two_qubit_input(spec.x);
}

ComplexMatrix channel_operator(StrategyKind kind, const ComplexMatrix& gate) {
  if (gate.rows() != 4 || gate.cols() != 4) {
    throw DimensionError("channel_operator: gate must be 4x4, got " +
                         detail::shape_str(gate.rows(), gate.cols()));
  }
  if (kind == StrategyKind::OneQubit) return gate;
  return kron(identity<double>(2), gate);
}

Density apply_gate(const Density& rho, StrategyKind kind, const ComplexMatrix& gate, int n) {
  require_positive_uses(n, "apply_gate");
  const Eigen::Index expected = kind == StrategyKind::OneQubit ? 4 : 8;
  if (rho.dim() != expected) {
    throw DimensionError("apply_channel: " + std::string(to_string(kind)) +
                         "-qubit strategy expects a " +
                         detail::shape_str(expected, expected) + " state, got " +
                         detail::shape_str(rho.dim(), rho.dim()));
  }
  const ComplexMatrix u = matrix_power(channel_operator(kind, gate), n);
  return Density(u * rho.matrix() * u.adjoint(), rho.subsystem_dims());
}

Density apply_channel(const Density& rho, const StrategySpec& spec) {
  spec.validate();
  return apply_gate(rho, spec.kind, build_r_theta_phi(spec.gate), spec.n_uses);
}

Density reduced_system_state(const Density& sigma_sa, StrategyKind kind) {
  if (kind == StrategyKind::OneQubit) return partial_trace(sigma_sa, {0});
  return partial_trace(sigma_sa, {0, 1});
}

Simulation simulate(const StrategySpec& spec, const ComplexMatrix* perturbation) {
  spec.validate();
  ComplexMatrix gate = build_r_theta_phi(spec.gate);
  if (perturbation != nullptr) gate = matmul(*perturbation, gate);
  Density joint = apply_gate(prepare_input(spec), spec.kind, gate, spec.n_uses);
  Density reduced = reduced_system_state(joint, spec.kind);
  const double l1 = l1_coherence(reduced).value;
  const double cr = relative_entropy_coherence(reduced).value;
  return {std::move(joint), std::move(reduced), l1, cr};
}

double closed_form_c_one(double x, double theta, double phi, int n) {
  require_unit_interval(x, "closed_form_c_one");
  require_positive_uses(n, "closed_form_c_one");
  const auto p = one_qubit_params(x, theta, phi, n);
  const double nt = n * theta;
  const double trig = is_odd(n) ? std::pow(std::cos(nt), 4) : std::pow(std::sin(nt), 4);
  return 0.5 * std::sqrt(std::abs(p.Delta + 4 * p.delta * sq(p.epsilon) * trig));
}

double closed_form_c_two(double x, double theta, int n) {
  require_unit_interval(x, "closed_form_c_two");
  require_positive_uses(n, "closed_form_c_two");
  const auto p = two_qubit_params(x, theta, n);
  const double nt = n * theta;
  const double s2 = sq(std::sin(nt));
  const double c2 = sq(std::cos(nt));
  const double root = is_odd(n) ? std::sqrt(std::abs(p.a + 5 * sq(s2)))
                                : std::sqrt(std::abs(p.a + 5 * sq(c2)));
  const double tail = is_odd(n) ? c2 : s2;
  return 0.5 * (2 * p.b + std::sqrt(2.0) * p.epsilon * (2 * p.b + root + tail));
}

AppendixEvaluation appendix_b_reduced(double x, double theta, double phi, int n) {
  require_unit_interval(x, "appendix_b_reduced");
  require_positive_uses(n, "appendix_b_reduced");
  const auto p = one_qubit_params(x, theta, phi, n);
  const double nt = n * theta;
  const bool odd = is_odd(n);
  // sec^2 for odd N, csc^2 for even N.
  const double pole_trig = odd ? std::cos(nt) : std::sin(nt);

  bool limit_path = false;
  double pole_term = 0;
  if (std::abs(pole_trig) < kPoleWidth) {
    // alpha * sec^2(Nt) / 8 = (1 - 2x) tan(Nt), and likewise with cot for
    // even N: finite at the pole only when 1 - 2x vanishes.
    if (std::abs(1 - 2 * x) > kEndpointWidth) {
      std::ostringstream os;
      os << "appendix_b_reduced: " << (odd ? "sec^2" : "csc^2") << "(N theta) pole at theta = "
         << theta << ", N = " << n << " with nonvanishing coefficient (x = " << x << ")";
      throw DomainError(os.str());
    }
    limit_path = true;
  } else {
    pole_term = p.alpha / (8 * sq(pole_trig));
  }

  const double sigma11 = 0.5 * (1 + pole_term - p.epsilon * std::cos(phi) * std::sin(2 * nt));
  const double trig2 = odd ? sq(std::cos(nt)) : sq(std::sin(nt));
  const C i{0, 1};
  const C bracket = 2.0 - (2.0 - i + std::polar(1.0, 2 * phi)) * trig2;
  const C alpha_term = std::sqrt(2.0) * p.alpha * std::polar(1.0, phi) / 4.0;
  const C sigma12 = 0.5 * (p.epsilon * bracket + (odd ? alpha_term : -alpha_term));

  ComplexMatrix m(2, 2);
  m << C(sigma11), sigma12, std::conj(sigma12), C(1 - sigma11);
  AppendixEvaluation out{Density(m, {2}), 2 * std::abs(sigma12), limit_path,
                         has_negative_diagonal(m)};
  return out;
}

AppendixEvaluation appendix_c_reduced(double x, double theta, double phi, int n) {
  require_unit_interval(x, "appendix_c_reduced");
  require_positive_uses(n, "appendix_c_reduced");
  const double nt = n * theta;
  const bool odd = is_odd(n);
  const double s2 = sq(std::sin(nt));
  const double c2 = sq(std::cos(nt));
  const double eps = std::sqrt(2 * x * (1 - x));
  const double sign_n = odd ? -1.0 : 1.0;
  const double r2 = std::sqrt(2.0);
  const C i{0, 1};
  const C e1 = std::polar(1.0, phi);

  const double sigma11 = 0.5 * (1 - x) * (odd ? c2 : s2);
  const double sigma22 = 0.5 * (1 - x) * (1 + (odd ? s2 : c2));
  const C sigma12 = sign_n / (2 * r2) * (1 - x) * e1 * std::sin(2 * nt);

  const bool endpoint = x < kEndpointWidth || 1 - x < kEndpointWidth;
  double sigma33;
  C sigma34, sigma13, sigma24;
  if (endpoint) {
    // Limits of the ratio relations, written without the (1-x)/x factors.
    sigma33 = 0.5 * x * (1 + (odd ? s2 : c2));
    sigma34 = -sign_n / (2 * r2) * x * e1 * std::sin(2 * nt);
    sigma13 = sign_n / (2 * r2) * std::sqrt(x * (1 - x)) * e1 * std::sin(2 * nt);
    sigma24 = -sigma13;
  } else {
    const double ratio = (1 - x) / x;
    sigma33 = sigma22 / ratio;
    sigma34 = sigma12 * x / (x - 1);
    sigma13 = sigma12 / std::sqrt(ratio);
    sigma24 = -sigma12 / std::sqrt(ratio);
  }
  const double sigma44 = 1 - sigma11 - sigma22 - sigma33;
  const C sigma14 = eps / r2 * std::polar(1.0, 2 * phi) * (odd ? c2 : s2);
  const C sigma23 = eps / r2 * (odd ? (2.0 + i) * s2 - i : (2.0 - i) * c2 + i);

  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = sigma11;
  m(1, 1) = sigma22;
  m(2, 2) = sigma33;
  m(3, 3) = sigma44;
  m(0, 1) = sigma12;
  m(0, 2) = sigma13;
  m(0, 3) = sigma14;
  m(1, 2) = sigma23;
  m(1, 3) = sigma24;
  m(2, 3) = sigma34;
  for (int r = 0; r < 4; ++r) {
    for (int c = r + 1; c < 4; ++c) m(c, r) = std::conj(m(r, c));
  }
  const double l1 = 2 * (std::abs(sigma12) + std::abs(sigma13) + std::abs(sigma14) +
                         std::abs(sigma23) + std::abs(sigma24) + std::abs(sigma34));
  AppendixEvaluation out{Density(m, {2, 2}), l1, endpoint, has_negative_diagonal(m)};
  return out;
}

bool is_half_pi(double theta) {
  double r = std::fmod(theta - kPi / 2, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  return r < 1e-12 || 2 * kPi - r < 1e-12;
}

ReportGrid default_report_grid() {
  ReportGrid g;
  g.kinds = {StrategyKind::OneQubit, StrategyKind::TwoQubit};
  for (int k = 0; k <= 10; ++k) g.xs.push_back(k / 10.0);
  for (int k = 0; k < 64; ++k) g.thetas.push_back(2 * kPi * k / 64);
  g.phis = {0.0, kPi / 4};
  g.ns = {1, 2, 3, 4};
  return g;
}

const FormulaSummary* DiscrepancyReport::summary(Formula f, bool odd_n) const {
  for (const auto& s : summaries) {
    if (s.formula == f && s.odd_n == odd_n) return &s;
  }
  return nullptr;
}

double DiscrepancyReport::max_deviation(Formula f) const {
  double out = kNaN;
  for (bool odd : {true, false}) {
    if (const auto* s = summary(f, odd); s != nullptr && s->count > 0) {
      out = std::isnan(out) ? s->max_deviation : std::max(out, s->max_deviation);
    }
  }
  return out;
}

double DiscrepancyReport::half_pi_max_deviation(Formula f) const {
  double out = kNaN;
  for (bool odd : {true, false}) {
    if (const auto* s = summary(f, odd); s != nullptr && s->half_pi_count > 0) {
      out = std::isnan(out) ? s->half_pi_max_deviation
                            : std::max(out, s->half_pi_max_deviation);
    }
  }
  return out;
}

DiscrepancyReport discrepancy_report(const ReportGrid& grid, const ReportOptions& options) {
  if (grid.kinds.empty() || grid.xs.empty() || grid.thetas.empty() || grid.phis.empty() ||
      grid.ns.empty()) {
    throw DomainError("discrepancy_report: grid must be nonempty in every axis");
  }
  DiscrepancyReport report;
  const ComplexMatrix* perturbation =
      options.gate_perturbation ? &*options.gate_perturbation : nullptr;

  struct Accumulator {
    FormulaSummary s;
    double sum{0};
  };
  std::map<std::pair<Formula, bool>, Accumulator> acc;
  auto record = [&](Formula f, int n, double theta, double deviation, bool domain_error,
                    bool negative_diagonal) {
    auto& a = acc[{f, is_odd(n)}];
    a.s.formula = f;
    a.s.odd_n = is_odd(n);
    if (negative_diagonal) ++a.s.negative_diagonals;
    if (domain_error) {
      ++a.s.domain_errors;
      if (is_half_pi(theta)) {
        ++a.s.half_pi_count;
        a.s.half_pi_max_deviation = std::numeric_limits<double>::infinity();
      }
      return;
    }
    ++a.s.count;
    a.sum += deviation;
    a.s.max_deviation = std::max(a.s.max_deviation, deviation);
    if (is_half_pi(theta)) {
      ++a.s.half_pi_count;
      a.s.half_pi_max_deviation = std::max(a.s.half_pi_max_deviation, deviation);
    }
  };

  // Two-qubit phi spread keyed by (x, theta, N) grid indices.
  std::map<std::tuple<std::size_t, std::size_t, int>, std::pair<double, double>> spread;

  for (StrategyKind kind : grid.kinds) {
    const bool one = kind == StrategyKind::OneQubit;
    for (std::size_t ix = 0; ix < grid.xs.size(); ++ix) {
      for (std::size_t it = 0; it < grid.thetas.size(); ++it) {
        for (double phi : grid.phis) {
          for (int n : grid.ns) {
            const double x = grid.xs[ix];
            const double theta = grid.thetas[it];
            StrategySpec spec{kind, x, n, {theta, phi}};
            const auto sim = simulate(spec, perturbation);

            SimRecord rec;
            rec.kind = kind;
            rec.x = x;
            rec.theta = theta;
            rec.phi = phi;
            rec.n_uses = n;
            rec.c_l1_sim = sim.c_l1;
            rec.c_r_sim = sim.c_r;
            rec.c_l1_closed = kNaN;
            rec.deviation_closed = kNaN;
            rec.c_l1_appendix = kNaN;
            rec.deviation_appendix = kNaN;
            if (sim.c_l1 + 1e-10 < sim.c_r) ++report.l1_below_relative_entropy;

            if (options.closed_forms) {
              rec.c_l1_closed = one ? closed_form_c_one(x, theta, phi, n)
                                    : closed_form_c_two(x, theta, n);
              rec.deviation_closed = std::abs(rec.c_l1_sim - rec.c_l1_closed);
              record(one ? Formula::ClosedOne : Formula::ClosedTwo, n, theta,
                     rec.deviation_closed, false, false);
            }
            if (options.appendix_forms) {
              try {
                const auto ev = one ? appendix_b_reduced(x, theta, phi, n)
                                    : appendix_c_reduced(x, theta, phi, n);
                rec.c_l1_appendix = ev.c_l1;
                rec.deviation_appendix = std::abs(rec.c_l1_sim - ev.c_l1);
                rec.appendix_negative_diagonal = ev.negative_diagonal;
              } catch (const DomainError&) {
                rec.appendix_domain_error = true;
              }
              record(one ? Formula::AppendixB : Formula::AppendixC, n, theta,
                     rec.deviation_appendix, rec.appendix_domain_error,
                     rec.appendix_negative_diagonal);
            }

            if (!one) {
              report.max_two_qubit_c_l1 = std::max(report.max_two_qubit_c_l1, sim.c_l1);
              auto [pos, inserted] =
                  spread.try_emplace({ix, it, n}, std::make_pair(sim.c_l1, sim.c_l1));
              if (!inserted) {
                pos->second.first = std::min(pos->second.first, sim.c_l1);
                pos->second.second = std::max(pos->second.second, sim.c_l1);
              }
            }
            report.records.push_back(rec);
          }
        }
      }
    }
  }

  for (const auto& [key, range] : spread) {
    report.max_two_qubit_phi_spread =
        std::max(report.max_two_qubit_phi_spread, range.second - range.first);
  }
  for (auto& [key, a] : acc) {
    if (a.s.count > 0) a.s.mean_deviation = a.sum / static_cast<double>(a.s.count);
    report.summaries.push_back(a.s);
  }
  return report;
}

}  // namespace ybc
