// Copyright 2026 The eur Authors
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

// Command-line front end: single evaluations, sweeps, simplex scans,
// crossover search and the oracle-equivalence check.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eur/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitBadArgs = 2;

const std::map<std::string, eur::Process> kProcesses{
    {"su", eur::Process::single_use}, {"sw", eur::Process::self_switch}, {"tf", eur::Process::time_flip}};
const std::map<std::string, eur::Process> kComparisons{{"sw", eur::Process::self_switch},
                                                       {"tf", eur::Process::time_flip}};
const std::map<std::string, eur::Quantity> kQuantities{{"x", eur::Quantity::x_uncertainty},
                                                       {"total", eur::Quantity::total}};

eur::BiasVector parse_alpha(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("--alpha: bad number '" + item + "'");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw std::invalid_argument("--alpha expects three comma-separated values");
  return {parts[0], parts[1], parts[2]};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_report(const char* label, const eur::UncertaintyReport& r) {
  std::cout << label << '\n'
            << "  S(X|B) = " << fmt(r.s_x_given_b) << '\n'
            << "  S(Z|B) = " << fmt(r.s_z_given_b) << '\n'
            << "  U      = " << fmt(r.total_u) << '\n'
            << "  bound  = " << fmt(r.bound_b) << '\n'
            << "  slack  = " << fmt(r.slack) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty of a Bell pair under Pauli noise, the quantum switch and the quantum time-flip"};
  app.require_subcommand(1);

  double tol = 1e-9;
  bool no_oracle_check = false;
  app.add_option("--tol", tol, "Tolerance for oracle comparisons")->check(CLI::PositiveNumber);
  app.add_flag("--no-oracle-check", no_oracle_check, "Skip density-matrix spot checks");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one channel");
  eur::Process eval_process = eur::Process::single_use;
  double eval_p = 0.0;
  std::string eval_alpha;
  std::string eval_csv;
  eval->add_option("--process", eval_process, "su | sw | tf")
      ->required()
      ->transform(CLI::CheckedTransformer(kProcesses));
  eval->add_option("--p", eval_p, "Overall error probability")->required();
  eval->add_option("--alpha", eval_alpha, "Bias vector ax,ay,az")->required();
  eval->add_option("--csv", eval_csv, "Also write a single-row CSV here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep p for a fixed bias vector");
  eur::SweepSpec sweep_spec;
  std::string sweep_alpha;
  std::string sweep_out;
  sweep->add_option("--process", sweep_spec.process, "su | sw | tf")
      ->required()
      ->transform(CLI::CheckedTransformer(kProcesses));
  sweep->add_option("--alpha", sweep_alpha, "Bias vector ax,ay,az")->required();
  sweep->add_option("--pmin", sweep_spec.p_min, "Lower end of the p grid");
  sweep->add_option("--pmax", sweep_spec.p_max, "Upper end of the p grid");
  sweep->add_option("--steps", sweep_spec.steps, "Number of grid intervals")->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "Output CSV")->required();

  // simplex
  auto* simplex = app.add_subcommand("simplex", "Scan the bias simplex at fixed p");
  eur::SimplexSpec simplex_spec;
  std::string simplex_out;
  simplex->add_option("--compare", simplex_spec.compare, "sw | tf")
      ->required()
      ->transform(CLI::CheckedTransformer(kComparisons));
  simplex->add_option("--p", simplex_spec.p, "Overall error probability")->required();
  simplex->add_option("--step", simplex_spec.denominator, "Grid denominator N (step 1/N)")
      ->check(CLI::PositiveNumber);
  simplex->add_option("--out", simplex_out, "Output CSV")->required();

  // crossover
  auto* crossover = app.add_subcommand("crossover", "Find where the process starts to beat single use");
  eur::Process cross_compare = eur::Process::self_switch;
  std::string cross_alpha;
  eur::Quantity cross_quantity = eur::Quantity::total;
  crossover->add_option("--compare", cross_compare, "sw | tf")
      ->required()
      ->transform(CLI::CheckedTransformer(kComparisons));
  crossover->add_option("--alpha", cross_alpha, "Bias vector ax,ay,az")->required();
  crossover->add_option("--quantity", cross_quantity, "x | total")
      ->transform(CLI::CheckedTransformer(kQuantities));

  // verify
  auto* verify = app.add_subcommand("verify", "Compare closed forms with the density-matrix oracle");
  std::size_t verify_samples = 1000;
  std::uint64_t verify_seed = 1;
  verify->add_option("--samples", verify_samples, "Number of random channels")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "RNG seed");

  for (auto* sub : {eval, sweep, simplex, crossover, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  const eur::OracleCheck oracle{!no_oracle_check, 100, tol};

  try {
    if (*eval) {
      const eur::PauliChannel ch(eval_p, parse_alpha(eval_alpha));
      const eur::ScanRow row = eur::evaluate_row(eval_process, ch);
      if (!no_oracle_check) {
        const auto oracle_report = eur::evaluate_maeur(eur::evolve_bell_state(eval_process, ch));
        if (std::abs(oracle_report.total_u - row.process.total_u) > tol ||
            std::abs(oracle_report.bound_b - row.process.bound_b) > tol) {
          throw eur::InvariantViolation("closed form disagrees with density-matrix oracle");
        }
      }
      std::cout << "p = " << fmt(ch.p()) << ", alpha = (" << fmt(ch.alpha().x) << ", " << fmt(ch.alpha().y)
                << ", " << fmt(ch.alpha().z) << ")\n";
      print_report("single use:", row.single_use);
      if (eval_process != eur::Process::single_use) {
        print_report(eval_process == eur::Process::self_switch ? "self switch:" : "time flip:", row.process);
        std::cout << "delta U = " << fmt(row.delta_u) << '\n';
      }
      if (row.process.slack < -1e-9 || row.single_use.slack < -1e-9) {
        throw eur::InvariantViolation("uncertainty below bound");
      }
      if (!eval_csv.empty()) eur::emit_csv({row}, eval_csv);
    } else if (*sweep) {
      sweep_spec.alpha = parse_alpha(sweep_alpha);
      sweep_spec.oracle = oracle;
      eur::emit_csv(eur::sweep_1d(sweep_spec), sweep_out);
    } else if (*simplex) {
      simplex_spec.oracle = oracle;
      eur::emit_csv(eur::scan_simplex(simplex_spec), simplex_out);
    } else if (*crossover) {
      const auto root = eur::find_crossover(parse_alpha(cross_alpha), cross_compare, cross_quantity);
      if (root) {
        std::cout << fmt(*root) << '\n';
      } else {
        std::cout << "no crossover\n";
      }
    } else if (*verify) {
      const eur::VerifySummary s = eur::verify_oracle_equivalence(verify_samples, verify_seed, tol);
      for (const auto& f : s.failures) std::cerr << "mismatch: " << f << '\n';
      std::cout << "samples " << s.samples << ", mismatches " << s.mismatches << ", max coeff error "
                << fmt(s.max_coeff_error) << ", max report error " << fmt(s.max_report_error) << ", min slack "
                << fmt(s.min_slack) << '\n';
      return s.ok() ? kExitOk : kExitInvariant;
    }
  } catch (const eur::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}
