// Copyright 2026 The qca Authors
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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qca/cli.hpp"

namespace {

struct Flags {
  std::optional<std::string> config_path;
  std::optional<double> w;
  std::optional<std::string> eve_mu;
  std::optional<std::string> bob_mu;
  std::optional<double> transmittance;
  std::optional<double> eta;
  std::optional<double> dark;
  std::optional<int64_t> pulses;
  std::optional<uint64_t> seed;
  std::optional<double> xi;
  std::optional<double> zeta;
  std::optional<double> fake_click_prob;
  std::optional<double> intrinsic_error;
  bool honest = false;
  std::optional<int64_t> window;
  std::optional<double> determinism_threshold;
  std::optional<double> coincidence_threshold;
  std::optional<std::string> out_path;
  std::optional<std::string> log_path;
  int steps = 50;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON scenario file");
  cmd->add_option("--w", flags.w, "Signal state overlap in [0, 1)");
  cmd->add_option("--eve-mu", flags.eve_mu, "Eve's mu: number, 'usd', or 'breidbart'");
  cmd->add_option("--bob-mu", flags.bob_mu, "Bob's mu: number, 'usd', or 'breidbart'");
  cmd->add_option("--t", flags.transmittance, "Channel transmittance in (0, 1]");
  cmd->add_option("--eta", flags.eta, "Detector efficiency in (0, 1]");
  cmd->add_option("--dark", flags.dark, "Dark count probability per gate");
  cmd->add_option("--n", flags.pulses, "Number of pulses");
  cmd->add_option("--seed", flags.seed, "Master seed");
  cmd->add_option("--intrinsic-error", flags.intrinsic_error,
                  "Misalignment error rate in [0, 0.5]");
  cmd->add_option("--out", flags.out_path, "Also write the primary output here");
}

qca::ScenarioConfig build_config(const Flags& flags) {
  qca::ScenarioConfig config;
  if (flags.config_path.has_value()) {
    config = qca::load_config_file(*flags.config_path);
  }
  if (flags.w.has_value()) config.w = *flags.w;
  if (flags.eve_mu.has_value()) config.eve_mu = qca::MuSpec::parse(*flags.eve_mu);
  if (flags.bob_mu.has_value()) config.bob_mu = qca::MuSpec::parse(*flags.bob_mu);
  if (flags.transmittance.has_value()) config.channel.transmittance_T = *flags.transmittance;
  if (flags.eta.has_value()) config.channel.detector_efficiency_eta = *flags.eta;
  if (flags.dark.has_value()) config.channel.dark_count_prob = *flags.dark;
  if (flags.pulses.has_value()) config.channel.pulse_count_N = *flags.pulses;
  if (flags.seed.has_value()) config.seed = *flags.seed;
  if (flags.xi.has_value()) config.xi = *flags.xi;
  if (flags.zeta.has_value()) config.zeta = *flags.zeta;
  if (flags.fake_click_prob.has_value()) config.fake_click_prob = *flags.fake_click_prob;
  if (flags.intrinsic_error.has_value()) config.intrinsic_error = *flags.intrinsic_error;
  if (flags.honest) config.eve_present = false;
  if (flags.window.has_value()) config.monitor.window_size = *flags.window;
  if (flags.determinism_threshold.has_value()) {
    config.monitor.determinism_threshold = *flags.determinism_threshold;
  }
  if (flags.coincidence_threshold.has_value()) {
    config.monitor.coincidence_threshold = *flags.coincidence_threshold;
  }
  return config;
}

int simulation_threads() {
  const char* env = std::getenv("QCA_THREADS");
  if (env == nullptr || *env == '\0') return 0;  // auto
  try {
    return std::max(0, std::stoi(env));
  } catch (...) {
    throw qca::ValidationError(std::string("QCA_THREADS must be an integer, got '") +
                               env + "'");
  }
}

void write_output_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw qca::IoError("cannot open output file: " + path);
  }
  out << bytes;
  if (!out.good()) {
    throw qca::IoError("failed while writing output file: " + path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-control attack toolkit for two-state QKD"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* probe = app.add_subcommand(
      "probe", "Outcome probabilities and POVM calibration for one (w, mu)");
  add_common_options(probe, flags);

  CLI::App* sweep =
      app.add_subcommand("sweep", "CSV feasibility sweep over Eve's mu");
  add_common_options(sweep, flags);
  sweep->add_option("--steps", flags.steps, "Grid points between the min-error and unambiguous regimes")
      ->check(CLI::Range(2, 1000000));

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo run of the full attack");
  add_common_options(simulate, flags);
  simulate->add_option("--xi", flags.xi, "Resend throttle override in [0, 1]");
  simulate->add_option("--zeta", flags.zeta, "Flip probability override in [0, 0.5]");
  simulate->add_option("--fake-click-prob", flags.fake_click_prob,
                       "Faked state click probability in (0, 1]");
  simulate->add_flag("--honest", flags.honest, "Run without Eve (calibration traffic)");
  simulate->add_option("--log", flags.log_path, "Write the per-pulse click log CSV here");

  CLI::App* monitor =
      app.add_subcommand("monitor", "Run detector-side monitors over a click log");
  add_common_options(monitor, flags);
  monitor->add_option("--log", flags.log_path, "Click log CSV to analyze")->required();
  monitor->add_option("--window", flags.window,
                      "Pulses per monitor window (0 = whole log)");
  monitor->add_option("--determinism-threshold", flags.determinism_threshold,
                      "Significance level of the click-rate statistic");
  monitor->add_option("--coincidence-threshold", flags.coincidence_threshold,
                      "Significance level of the coincidence statistic");

  CLI11_PARSE(app, argc, argv);

  try {
    const qca::ScenarioConfig config = build_config(flags);
    std::ostringstream buffer;
    int code = qca::kExitOk;
    if (probe->parsed()) {
      code = qca::run_probe(config, buffer);
    } else if (sweep->parsed()) {
      code = qca::run_sweep(config, flags.steps, buffer);
    } else if (simulate->parsed()) {
      code = qca::run_simulate(config, simulation_threads(), flags.log_path, buffer);
    } else if (monitor->parsed()) {
      code = qca::run_monitor(config, *flags.log_path, buffer);
    }
    std::cout << buffer.str();
    if (flags.out_path.has_value()) {
      write_output_file(*flags.out_path, buffer.str());
    }
    return code;
  } catch (const qca::InfeasibleError& e) {
    std::cerr << "error: infeasible: " << e.what() << '\n';
    return qca::kExitInfeasible;
  } catch (const qca::InsufficientDataError& e) {
    std::cerr << "error: validation: " << e.what() << '\n';
    return qca::kExitValidation;
  } catch (const qca::IoError& e) {
    std::cerr << "error: io: " << e.what() << '\n';
    return qca::kExitIo;
  } catch (const qca::ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << '\n';
    return qca::kExitValidation;
  } catch (const qca::Error& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
}
