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

#include "ybc/cli.hpp"

#include "ybc/braid_ybe.hpp"
#include "ybc/gates.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

namespace ybc::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHamiltonianTolerance = 1e-6;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
    throw UsageError("invalid number for " + what + ": '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw UsageError("invalid integer for " + what + ": '" + text + "'");
  }
  return v;
}

StrategyKind parse_strategy(const std::string& text) {
  if (text == "one") return StrategyKind::OneQubit;
  if (text == "two") return StrategyKind::TwoQubit;
  throw UsageError("strategy must be 'one' or 'two', got '" + text + "'");
}

std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item, what));
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_int(item, what));
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

std::ofstream open_output(const std::string& path) {
  if (path.empty()) throw UsageError("missing --out FILE");
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw UsageError("cannot open output file '" + path + "' for writing");
  return os;
}

void finish_output(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os) throw UsageError("failed writing output file '" + path + "'");
}

/// Flag values gathered from the command line, then completed from --config.
struct RawOptions {
  std::map<std::string, std::string> values;

  std::optional<std::string> get(const std::string& key) const {
    if (auto it = values.find(key); it != values.end()) return it->second;
    return std::nullopt;
  }

  void fill_from(const std::map<std::string, std::string>& config) {
    for (const auto& [k, v] : config) values.try_emplace(k, v);
  }
};

SweepConfig sweep_config_from(const RawOptions& raw, bool strategy_required) {
  SweepConfig cfg;
  if (auto s = raw.get("strategy")) {
    cfg.strategy = parse_strategy(*s);
  } else if (strategy_required) {
    throw UsageError("missing --strategy one|two");
  }
  if (auto v = raw.get("x")) cfg.x_grid = GridRange::parse(*v);
  if (auto v = raw.get("theta")) cfg.theta_grid = GridRange::parse(*v);
  if (auto v = raw.get("phi")) cfg.phi_list = parse_real_list(*v, "--phi");
  if (auto v = raw.get("n")) cfg.n_uses = parse_int_list(*v, "--n");
  if (auto v = raw.get("out")) cfg.output_path = *v;
  if (auto v = raw.get("measures")) {
    cfg.measure_l1 = false;
    cfg.measure_relative_entropy = false;
    for (const auto& m : split(*v, ',')) {
      if (m == "l1") {
        cfg.measure_l1 = true;
      } else if (m == "relative_entropy") {
        cfg.measure_relative_entropy = true;
      } else {
        throw UsageError("unknown measure '" + m + "' (expected l1, relative_entropy)");
      }
    }
  }
  cfg.validate();
  return cfg;
}

std::optional<double> env_tolerance() {
  const char* env = std::getenv("YBC_TOLERANCE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return parse_real(env, "YBC_TOLERANCE");
}

// Verification groups.

void add_line(std::vector<VerifyLine>& out, std::string check, std::string name, double residual,
              double threshold, std::string detail = {}) {
  out.push_back({std::move(check), std::move(name), residual, threshold, residual <= threshold,
                 std::move(detail)});
}

std::vector<double> phi_grid_32() {
  std::vector<double> g;
  for (int k = 0; k < 32; ++k) g.push_back(2 * kPi * k / 32);
  return g;
}

void verify_s_matrix(double tol, std::vector<VerifyLine>& out) {
  double unit = 0, invol = 0, herm = 0;
  for (double phi : phi_grid_32()) {
    const ComplexMatrix s = build_s(phi);
    unit = std::max(unit, max_abs_diff(dagger(s) * s, identity(4)));
    invol = std::max(invol, max_abs_diff(s * s, identity(4)));
    herm = std::max(herm, hermitian_asymmetry(s));
  }
  add_line(out, "s-matrix", "S unitarity (32 phi)", unit, tol);
  add_line(out, "s-matrix", "S involution (32 phi)", invol, tol);
  add_line(out, "s-matrix", "S hermiticity (32 phi)", herm, tol);
}

void verify_braid(double tol, std::vector<VerifyLine>& out) {
  double braid = 0, far = 0;
  for (double phi : phi_grid_32()) {
    braid = std::max(braid, check_braid_relation(build_s(phi), tol).residual);
    far = std::max(far, check_far_commutation(build_s(phi), tol).residual);
  }
  add_line(out, "braid", "S braid relation (32 phi)", braid, tol);
  add_line(out, "braid", "S far commutation, 4 strands (32 phi)", far, tol);
  double eight = 0;
  for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
    for (double phi : {0.0, kPi / 4, kPi / 3}) {
      eight = std::max(eight, check_braid_relation(
                                  build_eight_vertex_b(sign, std::polar(1.0, -phi), true), tol)
                                  .residual);
    }
  }
  add_line(out, "braid", "eight-vertex b+- braid relation", eight, tol);
}

void verify_ybe_additive(double tol, std::vector<VerifyLine>& out) {
  const std::vector<double> params{-2, -1, -0.5, 0.5, 1, 2};
  double worst = 0;
  for (double phi : {0.0, kPi / 4, 1.1}) {
    for (double mu : params) {
      for (double nu : params) {
        worst = std::max(worst, check_ybe_additive(phi, mu, nu, tol).residual);
      }
    }
  }
  add_line(out, "ybe-additive", "rational R(mu) additive YBE (6x6x3 grid)", worst, tol);
}

void verify_ybe_multiplicative(double tol, std::vector<VerifyLine>& out) {
  const std::vector<double> params{0.25, 0.5, 1, 2, 4};
  double raw = 0, unitary = 0;
  for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
    for (double phi : {0.0, kPi / 4, kPi / 3}) {
      const ComplexScalar q = std::polar(1.0, -phi);
      auto family = [&](double x) { return yang_baxterize_eight_vertex(sign, q, x); };
      auto family_u = [&](double x) { return yang_baxterize_eight_vertex_unitary(sign, phi, x); };
      for (double x : params) {
        for (double y : params) {
          raw = std::max(raw, check_ybe_multiplicative(family, x, y, tol).residual);
          unitary = std::max(unitary, check_ybe_multiplicative(family_u, x, y, tol).residual);
        }
      }
    }
  }
  add_line(out, "ybe-multiplicative", "eight-vertex R(x) multiplicative YBE", raw, tol);
  add_line(out, "ybe-multiplicative", "eight-vertex unitary R(x) multiplicative YBE", unitary, tol);
}

void verify_unitarity(double tol, std::vector<VerifyLine>& out) {
  double r_grid = 0;
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      const GateParams<double> p{2 * kPi * i / 32, 2 * kPi * j / 32};
      r_grid = std::max(r_grid, unitarity_residual(build_r_theta_phi(p)));
    }
  }
  add_line(out, "unitarity", "R(theta, phi) unitarity (32x32)", r_grid, tol);
  double eight = 0;
  for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus}) {
    for (double x : {-3.0, -0.5, 0.0, 0.6, 1.0, 5.0}) {
      eight = std::max(eight,
                       unitarity_residual(yang_baxterize_eight_vertex_unitary(sign, kPi / 3, x)));
    }
  }
  add_line(out, "unitarity", "eight-vertex unitary R(x)", eight, tol);
}

void verify_dcnot(double tol, std::vector<VerifyLine>& out) {
  const auto best = scan_dcnot_equivalence(tol);
  std::ostringstream detail;
  detail << std::setprecision(12) << "phi=" << best.phi << " (" << best.phi / kPi
         << " pi), exact residual=" << best.residual_exact
         << ", global phase=" << best.global_phase << " (" << best.global_phase / kPi << " pi)";
  add_line(out, "dcnot", "(A x B) S (C x D) vs DCNOT, up to global phase",
           std::min(best.residual_exact, best.residual_phase), tol, detail.str());
}

void verify_hamiltonian(std::vector<VerifyLine>& out) {
  double err = 0, err_half = 0;
  for (double phi : {0.0, kPi / 4, 1.1}) {
    for (double theta : {0.0, 0.3, kPi / 3, 2.0}) {
      const GateParams<double> p{theta, phi};
      const ComplexMatrix ref = build_s(phi);
      err = std::max(err, max_abs_diff(evolution_hamiltonian(p, 1.0, 1.0, 1e-4), ref));
      err_half = std::max(err_half, max_abs_diff(evolution_hamiltonian(p, 1.0, 1.0, 5e-5), ref));
    }
  }
  std::ostringstream detail;
  detail << std::setprecision(4) << "step 1e-4 vs 5e-5 error ratio=" << err / err_half;
  add_line(out, "hamiltonian", "finite-difference H vs gamma hbar S", err, kHamiltonianTolerance,
           detail.str());
}

}  // namespace

GridRange GridRange::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid must look like A:B:N, got '" + text + "'");
  GridRange g{parse_real(parts[0], "grid start"), parse_real(parts[1], "grid stop"),
              parse_int(parts[2], "grid count")};
  if (g.count < 1) throw UsageError("grid point count must be >= 1 in '" + text + "'");
  return g;
}

std::vector<double> GridRange::values(double scale) const {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(start * scale);
    return out;
  }
  for (int k = 0; k < count; ++k) {
    const double v = start + (stop - start) * k / (count - 1);
    out.push_back(v * scale);
  }
  return out;
}

void SweepConfig::validate() const {
  for (const auto* g : {&x_grid, &theta_grid}) {
    if (g->count < 1 || !std::isfinite(g->start) || !std::isfinite(g->stop)) {
      throw UsageError("invalid grid range");
    }
  }
  for (double x : x_grid.values()) {
    if (x < 0 || x > 1) throw UsageError("x grid must lie inside [0, 1]");
  }
  if (phi_list.empty()) throw UsageError("phi list is empty");
  if (n_uses.empty()) throw UsageError("N list is empty");
  for (int n : n_uses) {
    if (n < 1) throw UsageError("channel-use counts must be >= 1");
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto xs = config.x_grid.values();
  const auto thetas = config.theta_grid.values(kPi);
  std::vector<SweepRow> rows;
  rows.reserve(xs.size() * thetas.size() * config.phi_list.size() * config.n_uses.size());
  for (double x : xs) {
    for (double theta : thetas) {
      for (double phi_units : config.phi_list) {
        const double phi = phi_units * kPi;
        for (int n : config.n_uses) {
          const auto sim = simulate({config.strategy, x, n, {theta, phi}});
          SweepRow row{config.strategy, x, theta, phi, n, sim.c_l1, sim.c_r, 0, 0};
          row.c_l1_closed = config.strategy == StrategyKind::OneQubit
                                ? closed_form_c_one(x, theta, phi, n)
                                : closed_form_c_two(x, theta, n);
          row.deviation = std::abs(row.c_l1_sim - row.c_l1_closed);
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"2a", "2b", "4a", "4b"};
  return ids;
}

SweepConfig figure_config(const std::string& id) {
  SweepConfig cfg;
  cfg.x_grid = {0, 1, 101};
  cfg.theta_grid = {0, 2, 256};
  cfg.phi_list = {0.25};
  if (id == "2a" || id == "2b") {
    cfg.strategy = StrategyKind::OneQubit;
  } else if (id == "4a" || id == "4b") {
    cfg.strategy = StrategyKind::TwoQubit;
  } else {
    throw UsageError("unknown figure id '" + id + "'; valid ids: 2a, 2b, 4a, 4b");
  }
  cfg.n_uses = {id.back() == 'a' ? 1 : 2};
  return cfg;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                     const SweepConfig& config) {
  os << "strategy,x,theta,phi,N,c_l1_sim,c_r_sim,c_l1_closed,deviation\n";
  for (const auto& r : rows) {
    os << to_string(r.strategy) << ',' << format_double(r.x) << ',' << format_double(r.theta)
       << ',' << format_double(r.phi) << ',' << r.n << ','
       << (config.measure_l1 ? format_double(r.c_l1_sim) : "") << ','
       << (config.measure_relative_entropy ? format_double(r.c_r_sim) : "") << ','
       << format_double(r.c_l1_closed) << ',' << format_double(r.deviation) << '\n';
  }
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names{"s-matrix",  "braid",       "ybe-additive",
                                              "ybe-multiplicative", "unitarity", "dcnot",
                                              "hamiltonian"};
  return names;
}

std::vector<VerifyLine> run_verify(double tolerance, const std::optional<std::string>& only) {
  if (only && std::find(verify_check_names().begin(), verify_check_names().end(), *only) ==
                  verify_check_names().end()) {
    std::string valid;
    for (const auto& n : verify_check_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw UsageError("unknown check '" + *only + "'; valid checks: " + valid);
  }
  auto wanted = [&](const char* name) { return !only || *only == name; };
  std::vector<VerifyLine> out;
  if (wanted("s-matrix")) verify_s_matrix(tolerance, out);
  if (wanted("braid")) verify_braid(tolerance, out);
  if (wanted("ybe-additive")) verify_ybe_additive(tolerance, out);
  if (wanted("ybe-multiplicative")) verify_ybe_multiplicative(tolerance, out);
  if (wanted("unitarity")) verify_unitarity(tolerance, out);
  if (wanted("dcnot")) verify_dcnot(tolerance, out);
  if (wanted("hamiltonian")) verify_hamiltonian(out);
  return out;
}

void write_verify_report(std::ostream& os, const std::vector<VerifyLine>& lines) {
  std::size_t failed = 0;
  for (const auto& l : lines) {
    os << (l.pass ? "PASS " : "FAIL ") << std::left << std::setw(19) << l.check << ' '
       << l.name << "  residual=" << std::setprecision(3) << std::scientific << l.residual
       << " tol=" << l.threshold << std::defaultfloat;
    if (!l.detail.empty()) os << "  [" << l.detail << ']';
    os << '\n';
    if (!l.pass) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(lines.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(lines.size()) +
                           " checks failed")
     << '\n';
}

void write_compare_csv(std::ostream& os, const DiscrepancyReport& report) {
  os << "strategy,x,theta,phi,N,c_l1_sim,c_l1_closed,c_l1_appendix,dev_closed,dev_appendix\n";
  for (const auto& r : report.records) {
    os << to_string(r.kind) << ',' << format_double(r.x) << ',' << format_double(r.theta) << ','
       << format_double(r.phi) << ',' << r.n_uses << ',' << format_double(r.c_l1_sim) << ','
       << format_double(r.c_l1_closed) << ',' << format_double(r.c_l1_appendix) << ','
       << format_double(r.deviation_closed) << ',' << format_double(r.deviation_appendix) << '\n';
  }
}

void write_compare_summary(std::ostream& os, const DiscrepancyReport& report) {
  os << "formula      parity  points  domain_err  neg_diag  max_dev       mean_dev      "
        "theta=pi/2 max_dev\n";
  for (const auto& s : report.summaries) {
    os << std::left << std::setw(12) << to_string(s.formula) << ' ' << std::setw(7)
       << (s.odd_n ? "odd" : "even") << ' ' << std::setw(7) << s.count << ' ' << std::setw(11)
       << s.domain_errors << ' ' << std::setw(9) << s.negative_diagonals << ' '
       << std::scientific << std::setprecision(6) << std::setw(13) << s.max_deviation << ' '
       << std::setw(13) << s.mean_deviation << ' ';
    if (s.half_pi_count == 0) {
      os << "n/a";
    } else {
      os << s.half_pi_max_deviation;
    }
    os << std::defaultfloat << '\n';
  }
  os << std::setprecision(12);
  os << "records: " << report.records.size() << '\n';
  os << "max simulated two-qubit reduced C_l1: " << report.max_two_qubit_c_l1 << '\n';
  os << "max two-qubit C_l1 spread over phi: " << report.max_two_qubit_phi_spread << '\n';
  os << "records with C_l1 < C_r: " << report.l1_below_relative_entropy << '\n';
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

namespace {

int cmd_verify(const RawOptions& raw, std::ostream& out) {
  double tol = kDefaultTolerance;
  if (auto env = env_tolerance()) tol = *env;
  if (auto t = raw.get("tolerance")) tol = parse_real(*t, "--tolerance");
  if (!(tol > 0)) throw UsageError("tolerance must be positive");
  const auto lines = run_verify(tol, raw.get("only"));
  write_verify_report(out, lines);
  const bool ok = std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.pass; });
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const RawOptions& raw, std::ostream& out) {
  const auto cfg = sweep_config_from(raw, true);
  auto os = open_output(cfg.output_path);
  const auto rows = run_sweep(cfg);
  write_sweep_csv(os, rows, cfg);
  finish_output(os, cfg.output_path);
  out << "wrote " << rows.size() << " rows to " << cfg.output_path << '\n';
  return kExitOk;
}

int cmd_figure(const RawOptions& raw, std::ostream& out) {
  auto cfg = figure_config(raw.get("id").value_or(""));
  cfg.output_path = raw.get("out").value_or("");
  auto os = open_output(cfg.output_path);
  const auto rows = run_sweep(cfg);
  write_sweep_csv(os, rows, cfg);
  finish_output(os, cfg.output_path);
  out << "wrote " << rows.size() << " rows to " << cfg.output_path << '\n';
  return kExitOk;
}

int cmd_compare(const RawOptions& raw, std::ostream& out) {
  ReportGrid grid = default_report_grid();
  ReportOptions options;
  if (auto s = raw.get("strategy")) grid.kinds = {parse_strategy(*s)};
  if (auto v = raw.get("x")) grid.xs = GridRange::parse(*v).values();
  if (auto v = raw.get("theta")) grid.thetas = GridRange::parse(*v).values(kPi);
  if (auto v = raw.get("phi")) {
    grid.phis.clear();
    for (double p : parse_real_list(*v, "--phi")) grid.phis.push_back(p * kPi);
  }
  if (auto v = raw.get("n")) grid.ns = parse_int_list(*v, "--n");
  for (double x : grid.xs) {
    if (x < 0 || x > 1) throw UsageError("x grid must lie inside [0, 1]");
  }
  for (int n : grid.ns) {
    if (n < 1) throw UsageError("channel-use counts must be >= 1");
  }

  const std::string formula = raw.get("formula").value_or("all");
  auto restrict_kind = [&](StrategyKind k) {
    if (raw.get("strategy") && grid.kinds.front() != k) {
      throw UsageError("formula '" + formula + "' does not apply to strategy " +
                       std::string(to_string(grid.kinds.front())));
    }
    grid.kinds = {k};
  };
  if (formula == "all") {
  } else if (formula == "closed") {
    options.appendix_forms = false;
  } else if (formula == "appendix") {
    options.closed_forms = false;
  } else if (formula == "closed-one" || formula == "closed-two") {
    options.appendix_forms = false;
    restrict_kind(formula == "closed-one" ? StrategyKind::OneQubit : StrategyKind::TwoQubit);
  } else if (formula == "appendix-b" || formula == "appendix-c") {
    options.closed_forms = false;
    restrict_kind(formula == "appendix-b" ? StrategyKind::OneQubit : StrategyKind::TwoQubit);
  } else {
    throw UsageError("unknown formula '" + formula +
                     "'; valid: all, closed, appendix, closed-one, closed-two, appendix-b, "
                     "appendix-c");
  }

  const std::string path = raw.get("out").value_or("");
  auto os = open_output(path);
  const auto report = discrepancy_report(grid, options);
  write_compare_csv(os, report);
  finish_output(os, path);
  write_compare_summary(out, report);
  out << "wrote " << report.records.size() << " rows to " << path << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yang-Baxter gate algebra checks and coherence-under-concatenation simulations"};
  app.require_subcommand(1);
  app.footer(
      "Angles (--theta, --phi) are given in units of pi: --theta 0.5 means pi/2.\n"
      "Grids use A:B:N for N evenly spaced points from A to B inclusive.\n"
      "Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.\n"
      "YBC_TOLERANCE overrides the default verify tolerance (1e-10).");

  std::map<std::string, std::string> cli_values;
  std::string config_path;
  auto opt = [&](CLI::App* sub, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(
        "--" + key, [&cli_values, key](const std::string& v) { cli_values[key] = v; }, help);
  };
  auto with_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "plain key=value file; flags take precedence");
  };

  auto* verify = app.add_subcommand("verify", "run the algebraic verification suite");
  opt(verify, "tolerance", "residual tolerance (default 1e-10 or $YBC_TOLERANCE)");
  opt(verify, "only", "run a single check group: s-matrix, braid, ybe-additive, "
                      "ybe-multiplicative, unitarity, dcnot, hamiltonian");
  with_config(verify);

  auto add_sweep_flags = [&](CLI::App* sub) {
    opt(sub, "strategy", "one | two");
    opt(sub, "x", "x grid A:B:N");
    opt(sub, "theta", "theta grid A:B:N in units of pi");
    opt(sub, "phi", "comma-separated phi values in units of pi");
    opt(sub, "n", "comma-separated channel-use counts");
    opt(sub, "out", "output CSV path");
    with_config(sub);
  };
  auto* sweep = app.add_subcommand("sweep", "simulate a parameter grid and write CSV");
  add_sweep_flags(sweep);
  opt(sweep, "measures", "comma-separated subset of l1,relative_entropy");

  auto* figure = app.add_subcommand("figure", "emit the preset grid for figure 2a, 2b, 4a or 4b");
  figure->add_option_function<std::string>(
      "id", [&cli_values](const std::string& v) { cli_values["id"] = v; }, "figure id")
      ->required();
  opt(figure, "out", "output CSV path");

  auto* compare = app.add_subcommand(
      "compare", "compare closed-form and element-wise formulas against simulation");
  add_sweep_flags(compare);
  opt(compare, "formula",
      "all | closed | appendix | closed-one | closed-two | appendix-b | appendix-c");

  std::vector<std::string> argv_store{"ybc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    RawOptions raw{cli_values};
    if (!config_path.empty()) raw.fill_from(parse_config_file(config_path));
    if (verify->parsed()) return cmd_verify(raw, out);
    if (sweep->parsed()) return cmd_sweep(raw, out);
    if (figure->parsed()) return cmd_figure(raw, out);
    if (compare->parsed()) return cmd_compare(raw, out);
  } catch (const UsageError& e) {
    err << "ybc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "ybc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "ybc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ybc::cli
