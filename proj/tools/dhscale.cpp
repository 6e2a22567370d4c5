// dhscale: synthetic peak spectra, spectral sharpening, bound sweeps,
// inequality verification, and the analytic-differentiation demo. All
// commands are deterministic in (config, seed) and leave their artifacts in
// --out; failures exit nonzero with a JSON error record on stdout.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dhs/report.hpp"
#include "dhs/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dilational Hilbert scale toolkit"};

  std::string command;
  dhs::CliOptions opt;
  std::uint64_t seed = 0;

  app.add_option("--command", command, "one of synth, sharpen, bounds, verify, diff-demo")
      ->required()
      ->check(CLI::IsMember({"synth", "sharpen", "bounds", "verify", "diff-demo"}));
  app.add_option("--config", opt.config_path, "JSON run configuration");
  app.add_option("--input", opt.input_path, "input signal CSV (sharpen)");
  app.add_option("--out", opt.out_dir, "output directory (default .)");
  auto* seed_opt = app.add_option("--seed", seed, "seed override");
  app.add_option("--trials", opt.trials, "trials per verify suite (default 100)")
      ->check(CLI::PositiveNumber);
  app.add_flag("-v", opt.verbosity, "verbose progress on stderr");
  app.add_flag_callback("-q", [&] { opt.verbosity = -1; }, "quiet");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.command = dhs::parse_command(command);
    if (seed_opt->count() > 0) opt.seed = seed;
    return dhs::run_command(opt);
  } catch (const std::exception& e) {
    dhs::ordered_json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
