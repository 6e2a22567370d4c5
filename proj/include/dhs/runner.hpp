#pragma once

// Command orchestration behind the CLI: each command reads its inputs,
// produces artifacts on disk, and returns 0 iff every check it invoked
// passed. All randomness is counter-based, so identical (config, seed)
// yields byte-identical artifacts.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhs/config.hpp"
#include "dhs/csv.hpp"
#include "dhs/hardy.hpp"
#include "dhs/peaks_deconv.hpp"
#include "dhs/report.hpp"
#include "dhs/sharpen.hpp"
#include "dhs/verify.hpp"

namespace dhs {

enum class Command { Synth, Sharpen, Bounds, Verify, DiffDemo };

struct CliOptions {
  Command command = Command::Verify;
  std::string config_path;
  std::string input_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  int trials = 100;
  int verbosity = 0;
};

inline Command parse_command(const std::string& s) {
  if (s == "synth") return Command::Synth;
  if (s == "sharpen") return Command::Sharpen;
  if (s == "bounds") return Command::Bounds;
  if (s == "verify") return Command::Verify;
  if (s == "diff-demo") return Command::DiffDemo;
  throw std::invalid_argument(
      "unknown command \"" + s + "\"; expected synth, sharpen, bounds, verify, or diff-demo");
}

namespace detail {

inline const char* method_name(SharpenMethod m) {
  switch (m) {
    case SharpenMethod::TikhonovDiscrepancy: return "tikhonov";
    case SharpenMethod::SpectralCutoff: return "cutoff";
    case SharpenMethod::GeneralizedMorozov: return "morozov";
  }
  return "?";
}

inline const char* convention_name(SigmaConvention c) {
  return c == SigmaConvention::LambdaDomain ? "lambda_domain" : "paper";
}

inline RunConfig load_config(const CliOptions& opt, const char* cmd) {
  if (opt.config_path.empty())
    throw std::invalid_argument(std::string(cmd) + ": --config is required");
  RunConfig rc = parse_config(opt.config_path);
  if (opt.seed) rc.seed = *opt.seed;
  return rc;
}

inline void note(const CliOptions& opt, const std::string& msg) {
  if (opt.verbosity > 0) std::cerr << msg << "\n";
}

inline int run_synth(const CliOptions& opt) {
  const RunConfig rc = load_config(opt, "synth");
  if (rc.peaks.empty()) throw std::invalid_argument("synth: config must list at least one peak");
  const auto& sc = rc.sharpen;
  const SynthData data = synth_spectrum(rc.peaks, sc.model, sc.gamma, sc.epsilon, rc.seed, rc.grid);
  const std::filesystem::path dir(opt.out_dir);
  write_signal_csv(data.f, (dir / "f.csv").string());
  write_signal_csv(data.g, (dir / "g.csv").string());
  write_signal_csv(data.g_eps, (dir / "g_eps.csv").string());
  note(opt, "synth: wrote f.csv, g.csv, g_eps.csv to " + dir.string());
  return 0;
}

inline int run_sharpen(const CliOptions& opt) {
  const RunConfig rc = load_config(opt, "sharpen");
  if (opt.input_path.empty()) throw std::invalid_argument("sharpen: --input is required");
  const GridSignal g_eps = read_signal_csv(opt.input_path);

  // a sibling f.csv is treated as the known truth for measured residuals
  GridSignal f_true;
  bool have_truth = false;
  const auto truth_path = std::filesystem::path(opt.input_path).parent_path() / "f.csv";
  if (std::filesystem::exists(truth_path)) {
    f_true = read_signal_csv(truth_path.string());
    have_truth = true;
    note(opt, "sharpen: using truth from " + truth_path.string());
  }

  const auto& sc = rc.sharpen;
  SharpenReport rep;
  if (sc.method == SharpenMethod::GeneralizedMorozov) {
    std::optional<double> g_psi;
    if (!rc.peaks.empty()) {
      try {
        g_psi = morozov_psi_norm(rc.peaks, sc.model, sc.gamma, sc.beta);
      } catch (const std::domain_error&) {
        // psi-norm diverges for this family/width combination; bound omitted
      }
    }
    rep = morozov_sharpen(g_eps, sc, g_psi, have_truth ? &f_true : nullptr);
  } else {
    rep = sharpen(g_eps, sc, have_truth ? &f_true : nullptr);
  }

  const std::filesystem::path dir(opt.out_dir);
  write_signal_csv(rep.z_eps, (dir / "z_eps.csv").string());

  ordered_json j;
  j["model"] = to_string(sc.model);
  j["gamma"] = sc.gamma;
  j["beta"] = sc.beta;
  j["epsilon"] = sc.epsilon;
  j["method"] = method_name(sc.method);
  j["sigma_convention"] = convention_name(sc.sigma_convention);
  j["reg_param"] = rep.reg_param;
  j["discrepancy"] = rep.discrepancy;
  j["r_norm"] = rep.r_norm;
  j["r_s_norm"] = rep.r_s_norm;
  j["residuals_measured"] = rep.residuals_measured;
  j["sigma"] = rep.sigma;
  j["bound"] = rep.bound;
  if (rep.empirical_error) j["empirical_error"] = *rep.empirical_error;
  if (rep.morozov_bound) j["morozov_bound"] = *rep.morozov_bound;
  j["degenerate"] = rep.degenerate;
  j["z_eps"] = "z_eps.csv";
  write_report(j, (dir / "report.json").string());

  bool pass = true;
  if (rep.empirical_error) {
    if (!(*rep.empirical_error <= rep.bound)) pass = false;
    if (rep.morozov_bound && !(*rep.empirical_error <= *rep.morozov_bound)) pass = false;
  }
  note(opt, std::string("sharpen: ") + (pass ? "bound holds" : "bound violated"));
  return pass ? 0 : 1;
}

inline int run_bounds(const CliOptions& opt) {
  const RunConfig rc = load_config(opt, "bounds");
  const auto& sc = rc.sharpen;

  ordered_json j;
  j["model"] = to_string(sc.model);
  j["gamma"] = sc.gamma;
  j["beta"] = sc.beta;
  j["epsilon"] = sc.epsilon;

  // family bound as a function of the interpolation exponent, at unit smooth
  // norm and noise-level plain norm
  {
    ordered_json sweep = ordered_json::array();
    for (int i = 0; i <= 10; ++i) {
      const double sigma = static_cast<double>(i) / 10.0;
      ordered_json row;
      row["sigma"] = sigma;
      row["bound"] = error_bound(sc.model, sigma, sc.epsilon, 1.0);
      sweep.push_back(row);
    }
    j["error_bound"] = sweep;
  }

  // a-priori bounds at C = 1 for the two closed-form scale pairs
  {
    const auto phi = IndexFunction::power_law(1.0);
    ordered_json log_sweep = ordered_json::array();
    ordered_json pow_sweep = ordered_json::array();
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
      ordered_json lrow;
      lrow["epsilon"] = eps;
      lrow["bound"] = apriori_bound(phi, IndexFunction::exponential(), 1.0, eps);
      log_sweep.push_back(lrow);
      ordered_json prow;
      prow["epsilon"] = eps;
      prow["bound"] = apriori_bound(phi, IndexFunction::power_law(2.0), 1.0, eps);
      pow_sweep.push_back(prow);
    }
    j["apriori_log_scale"] = log_sweep;
    j["apriori_power_scale_m2"] = pow_sweep;
  }

  write_report(j, (std::filesystem::path(opt.out_dir) / "bounds.json").string());
  note(opt, "bounds: wrote bounds.json");
  return 0;
}

inline int run_verify(const CliOptions& opt) {
  const std::uint64_t seed = opt.seed.value_or(1);
  const auto suites = run_verify_suites(seed, opt.trials);
  const bool pass = verify_passed(suites);

  ordered_json j;
  j["seed"] = seed;
  j["trials"] = opt.trials;
  ordered_json arr = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json row;
    row["inequality"] = s.inequality;
    row["trials"] = s.trials;
    row["min_margin"] = s.min_margin;
    row["failures"] = s.failures;
    arr.push_back(row);
    note(opt, "verify: " + s.inequality + " min_margin=" + std::to_string(s.min_margin) +
                  " failures=" + std::to_string(s.failures));
  }
  j["suites"] = arr;
  j["pass"] = pass;
  write_report(j, (std::filesystem::path(opt.out_dir) / "verify.json").string());
  return pass ? 0 : 1;
}

inline int run_diff_demo(const CliOptions& opt) {
  double eps = 1e-3;
  if (!opt.config_path.empty()) eps = parse_config(opt.config_path).sharpen.epsilon;
  const std::uint64_t seed = opt.seed.value_or(1);
  const std::size_t K = 256;
  const double R = 2.0;

  const HardyFunction g = unit_hardy_truth(K, R);
  const DiffReport rep = diff_experiment(g, R, eps, seed);

  ordered_json j;
  j["epsilon"] = eps;
  j["K"] = K;
  j["R"] = R;
  j["C"] = rep.C;
  j["k_star"] = rep.k_star;
  j["empirical_error"] = rep.empirical_error;
  j["vhs_bound"] = rep.vhs_bound;
  j["ohs_bound"] = rep.ohs_bound;
  write_report(j, (std::filesystem::path(opt.out_dir) / "diff_demo.json").string());

  const bool pass = rep.empirical_error <= rep.vhs_bound;
  note(opt, std::string("diff-demo: ") + (pass ? "bound holds" : "bound violated"));
  return pass ? 0 : 1;
}

}  // namespace detail

inline int run_command(const CliOptions& opt) {
  std::filesystem::create_directories(opt.out_dir);
  switch (opt.command) {
    case Command::Synth: return detail::run_synth(opt);
    case Command::Sharpen: return detail::run_sharpen(opt);
    case Command::Bounds: return detail::run_bounds(opt);
    case Command::Verify: return detail::run_verify(opt);
    case Command::DiffDemo: return detail::run_diff_demo(opt);
  }
  throw std::logic_error("run_command: bad command tag");
}

}  // namespace dhs
