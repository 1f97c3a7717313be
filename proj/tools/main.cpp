// Command-line front end: regenerates figure data over the (theta, p) grid,
// runs the complementarity margin checks over seeded random states, and
// evaluates single states. Exit codes: 0 success, 1 margin violation,
// 2 usage error, 3 write failure.

#include "cohtrade/io.hpp"
#include "cohtrade/protocols.hpp"
#include "cohtrade/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWrite = 3;

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return std::cout ? kExitOk : kExitWrite;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitWrite;
  }
  out << payload;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing " << path << "\n";
    return kExitWrite;
  }
  return kExitOk;
}

int run_figure(int figure_id, int theta_steps, int p_steps,
               const std::string& format, const std::string& output) {
  std::vector<cohtrade::SweepRecord> records;
  if (figure_id == 1 || figure_id == 3) {
    records = cohtrade::sweep(theta_steps, p_steps);
  } else {
    records = cohtrade::sweep_line(theta_steps, 0.0);
  }
  std::string payload;
  if (format == "csv") {
    payload = cohtrade::figure_csv(figure_id, records);
  } else {
    payload = cohtrade::figure_json(figure_id, records).dump(2);
    payload += '\n';
  }
  return write_output(output, payload);
}

int run_verify(std::int64_t samples, std::uint64_t seed,
               const std::string& state_spec, const std::string& output) {
  cohtrade::VerifySummary summary;
  if (state_spec.empty()) {
    summary = cohtrade::run_margin_checks(samples, seed);
  } else if (state_spec == "bell") {
    const cohtrade::DensityMatrix bell = cohtrade::densify(
        cohtrade::bell_state(cohtrade::Bell::PhiPlus),
        cohtrade::SubsystemDims{2, 2});
    summary = cohtrade::run_margin_checks_on({bell}, seed);
  } else {
    const cohtrade::DensityMatrix rho =
        cohtrade::load_density_matrix(state_spec);
    summary = cohtrade::run_margin_checks_on({rho}, seed);
  }
  std::string payload = cohtrade::to_json(summary).dump(2);
  payload += '\n';
  const int write_status = write_output(output, payload);
  if (write_status != kExitOk) {
    return write_status;
  }
  if (summary.total_violations() > 0) {
    std::cerr << "margin violations found: " << summary.total_violations()
              << " (worst states serialized in the report)\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_compute(std::optional<double> theta, double p,
                const std::string& state_path, const std::string& output) {
  cohtrade::SweepRecord rec;
  if (theta) {
    rec = cohtrade::evaluate_point(
        cohtrade::densify(cohtrade::resource_state(*theta),
                          cohtrade::SubsystemDims{2, 2}),
        p);
    rec.theta = *theta;
  } else {
    rec = cohtrade::evaluate_point(cohtrade::load_density_matrix(state_path),
                                   p);
  }
  std::string payload = cohtrade::to_json(rec).dump(2);
  payload += '\n';
  return write_output(output, payload);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cohtrade: dense-coding capacity, teleportation fidelity, and local "
      "coherence of two-qubit resources under depolarizing noise"};
  app.require_subcommand(1);

  // figure
  int figure_id = 0;
  int theta_steps = 61;
  int p_steps = 41;
  std::string format = "csv";
  std::string fig_output;
  CLI::App* figure =
      app.add_subcommand("figure", "emit data for one of the four figures");
  figure->add_option("--figure", figure_id, "figure id (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  figure->add_option("--theta-steps", theta_steps, "theta grid points")
      ->check(CLI::Range(2, 100000));
  figure->add_option("--p-steps", p_steps, "noise grid points")
      ->check(CLI::Range(2, 100000));
  figure->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  figure->add_option("--output", fig_output, "output path (default stdout)");

  // verify
  std::int64_t samples = 10000;
  std::uint64_t seed = 42;
  std::string verify_state;
  std::string verify_output;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the complementarity margin checks over random states");
  verify->add_option("--samples", samples, "number of sampled states")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{100000000}));
  verify->add_option("--seed", seed, "root seed for the state stream");
  verify->add_option("--state", verify_state,
                     "check a single state instead: 'bell' or a matrix file");
  verify->add_option("--output", verify_output,
                     "report path (default stdout)");

  // compute
  double theta = 0.0;
  double p = 0.0;
  std::string compute_state;
  std::string compute_output;
  CLI::App* compute = app.add_subcommand(
      "compute", "evaluate one resource state at noise level p");
  CLI::Option* theta_opt =
      compute->add_option("--theta", theta, "resource state angle (radians)");
  compute->add_option("--p", p, "depolarizing noise parameter")
      ->check(CLI::Range(0.0, 1.0));
  CLI::Option* state_opt = compute->add_option(
      "--state", compute_state, "matrix file with an explicit state");
  theta_opt->excludes(state_opt);
  compute->add_option("--output", compute_output,
                      "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (figure->parsed()) {
      return run_figure(figure_id, theta_steps, p_steps, format, fig_output);
    }
    if (verify->parsed()) {
      return run_verify(samples, seed, verify_state, verify_output);
    }
    if (compute->parsed()) {
      if (static_cast<bool>(*theta_opt) == static_cast<bool>(*state_opt)) {
        std::cerr << "error: compute needs exactly one of --theta, --state\n";
        return kExitUsage;
      }
      std::optional<double> theta_arg;
      if (*theta_opt) {
        theta_arg = theta;
      }
      return run_compute(theta_arg, p, compute_state, compute_output);
    }
  } catch (const cohtrade::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
