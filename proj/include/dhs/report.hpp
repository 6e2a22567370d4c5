#pragma once

// JSON report emission. Keys keep insertion order, floats serialize in
// shortest round-trip form, NaN is rejected (a report with NaN is a bug,
// not a result), and infinities — which are legitimate saturated norms —
// are encoded as the strings "Infinity" / "-Infinity".

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace dhs {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline void sanitize_report(ordered_json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isnan(v)) throw std::invalid_argument("write_report: NaN field in report");
    if (std::isinf(v)) j = v > 0.0 ? "Infinity" : "-Infinity";
  } else if (j.is_object() || j.is_array()) {
    for (auto& item : j) sanitize_report(item);
  }
}

}  // namespace detail

inline void write_report(ordered_json report, const std::string& path) {
  detail::sanitize_report(report);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_report: cannot open " + path + " for writing");
  out << report.dump(2) << '\n';
  if (!out.good()) throw std::runtime_error("write_report: write failed for " + path);
}

inline ordered_json read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_report: cannot open " + path);
  return ordered_json::parse(in);
}

}  // namespace dhs
