#pragma once

// Strict JSON run configuration. Unknown keys are errors naming the key;
// missing optional keys take the documented defaults (method tikhonov,
// sigma_convention lambda_domain, grid 4096 x 0.01 from -20.48, seed 0,
// no peaks).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhs/peak_model.hpp"
#include "dhs/peaks_deconv.hpp"
#include "dhs/sharpen.hpp"

namespace dhs {

struct RunConfig {
  SharpenConfig sharpen;
  GridSpec grid;
  std::vector<Peak> peaks;
  std::uint64_t seed = 0;
};

namespace detail {

[[noreturn]] inline void config_error(const std::string& msg) {
  throw std::invalid_argument("config: " + msg);
}

inline double number_field(const nlohmann::ordered_json& j, const std::string& key) {
  if (!j.is_number()) config_error("\"" + key + "\" must be a number");
  return j.get<double>();
}

inline std::string string_field(const nlohmann::ordered_json& j, const std::string& key) {
  if (!j.is_string()) config_error("\"" + key + "\" must be a string");
  return j.get<std::string>();
}

inline SharpenMethod parse_method(const std::string& s) {
  if (s == "tikhonov") return SharpenMethod::TikhonovDiscrepancy;
  if (s == "cutoff") return SharpenMethod::SpectralCutoff;
  if (s == "morozov") return SharpenMethod::GeneralizedMorozov;
  config_error("unknown method \"" + s + "\" (expected tikhonov, cutoff or morozov)");
}

inline SigmaConvention parse_sigma_convention(const std::string& s) {
  if (s == "lambda_domain") return SigmaConvention::LambdaDomain;
  if (s == "paper") return SigmaConvention::OmegaDomain;
  config_error("unknown sigma_convention \"" + s + "\" (expected lambda_domain or paper)");
}

inline GridSpec parse_grid(const nlohmann::ordered_json& j) {
  if (!j.is_object()) config_error("\"grid\" must be an object");
  GridSpec grid;
  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      if (!value.is_number_integer() || value.get<long long>() <= 0)
        config_error("\"grid.n\" must be a positive integer");
      grid.n = value.get<std::size_t>();
    } else if (key == "dx") {
      grid.dx = number_field(value, "grid.dx");
    } else if (key == "x0") {
      grid.x0 = number_field(value, "grid.x0");
    } else {
      config_error("unknown key \"grid." + key + "\"");
    }
  }
  if (grid.n < 4 || grid.n % 2 != 0) config_error("\"grid.n\" must be even and >= 4");
  if (!(grid.dx > 0.0)) config_error("\"grid.dx\" must be > 0");
  if (!std::isfinite(grid.x0)) config_error("\"grid.x0\" must be finite");
  return grid;
}

inline std::vector<Peak> parse_peaks(const nlohmann::ordered_json& j) {
  if (!j.is_array()) config_error("\"peaks\" must be an array");
  std::vector<Peak> peaks;
  for (const auto& entry : j) {
    if (!entry.is_object()) config_error("each peak must be an object");
    Peak p;
    for (const auto& [key, value] : entry.items()) {
      if (key == "center")
        p.center = number_field(value, "peaks.center");
      else if (key == "amplitude")
        p.amplitude = number_field(value, "peaks.amplitude");
      else if (key == "width")
        p.width = number_field(value, "peaks.width");
      else
        config_error("unknown key \"peaks." + key + "\"");
    }
    if (!(p.width > 0.0)) config_error("\"peaks.width\" must be > 0");
    if (!std::isfinite(p.center) || !std::isfinite(p.amplitude))
      config_error("peak fields must be finite");
    peaks.push_back(p);
  }
  return peaks;
}

}  // namespace detail

inline RunConfig parse_config_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) detail::config_error("top level must be an object");
  RunConfig rc;
  bool have_model = false, have_gamma = false, have_beta = false, have_epsilon = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "model") {
      rc.sharpen.model = parse_peak_model(detail::string_field(value, "model"));
      have_model = true;
    } else if (key == "gamma") {
      rc.sharpen.gamma = detail::number_field(value, "gamma");
      have_gamma = true;
    } else if (key == "beta") {
      rc.sharpen.beta = detail::number_field(value, "beta");
      have_beta = true;
    } else if (key == "epsilon") {
      rc.sharpen.epsilon = detail::number_field(value, "epsilon");
      have_epsilon = true;
    } else if (key == "method") {
      rc.sharpen.method = detail::parse_method(detail::string_field(value, "method"));
    } else if (key == "sigma_convention") {
      rc.sharpen.sigma_convention =
          detail::parse_sigma_convention(detail::string_field(value, "sigma_convention"));
    } else if (key == "grid") {
      rc.grid = detail::parse_grid(value);
    } else if (key == "seed") {
      if (!value.is_number_integer() || value.get<long long>() < 0)
        detail::config_error("\"seed\" must be a nonnegative integer");
      rc.seed = value.get<std::uint64_t>();
    } else if (key == "peaks") {
      rc.peaks = detail::parse_peaks(value);
    } else {
      detail::config_error("unknown key \"" + key + "\"");
    }
  }
  if (!have_model) detail::config_error("missing required key \"model\"");
  if (!have_gamma) detail::config_error("missing required key \"gamma\"");
  if (!have_beta) detail::config_error("missing required key \"beta\"");
  if (!have_epsilon) detail::config_error("missing required key \"epsilon\"");
  if (!(rc.sharpen.gamma > 0.0)) detail::config_error("\"gamma\" must be > 0");
  if (!(rc.sharpen.beta > 0.0) || !(rc.sharpen.beta < rc.sharpen.gamma))
    detail::config_error("\"beta\" must lie in (0, gamma)");
  if (!(rc.sharpen.epsilon > 0.0)) detail::config_error("\"epsilon\" must be > 0");
  return rc;
}

inline RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config: " + path + " is not valid JSON: " + e.what());
  }
  return parse_config_json(j);
}

}  // namespace dhs
