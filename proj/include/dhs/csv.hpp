#pragma once

// CSV serialization: grid signals as `x,y` rows, index-function tables as
// `lambda,value` rows. Doubles are written in shortest round-trip form, so
// rereading reproduces the exact bits and repeated runs emit byte-identical
// files.

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "dhs/grid_signal.hpp"
#include "dhs/index_functions.hpp"

namespace dhs {
namespace detail {

inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view tok, const std::string& path, std::size_t line) {
  double v = 0.0;
  const char* last = tok.data() + tok.size();
  const auto res = std::from_chars(tok.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw std::runtime_error(path + ":" + std::to_string(line) + ": bad number \"" +
                             std::string(tok) + "\"");
  return v;
}

// two-column CSV with an exact header; returns the rows
inline std::vector<std::pair<double, double>> read_csv_pairs(const std::string& path,
                                                             std::string_view header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw std::runtime_error(path + ": expected header \"" + std::string(header) + "\"");
  std::vector<std::pair<double, double>> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected two columns");
    rows.emplace_back(parse_double({line.data(), comma}, path, lineno),
                      parse_double({line.data() + comma + 1, line.size() - comma - 1}, path,
                                   lineno));
  }
  return rows;
}

inline std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

}  // namespace detail

inline void write_signal_csv(const GridSignal& f, const std::string& path) {
  validate(f);
  std::ofstream out = detail::open_for_write(path);
  out << "x,y\n";
  for (std::size_t j = 0; j < f.size(); ++j)
    out << detail::format_double(f.x(j)) << ',' << detail::format_double(f.samples[j]) << '\n';
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

inline GridSignal read_signal_csv(const std::string& path) {
  const auto rows = detail::read_csv_pairs(path, "x,y");
  if (rows.size() < 2)
    throw std::runtime_error(path + ": need at least two samples to infer the spacing");
  const std::size_t n = rows.size();
  const double x0 = rows.front().first;
  const double dx = (rows.back().first - x0) / static_cast<double>(n - 1);
  if (!(dx > 0.0)) throw std::runtime_error(path + ": x must be strictly ascending");
  std::vector<double> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    samples[j] = rows[j].second;
    if (j > 0) {
      const double step = rows[j].first - rows[j - 1].first;
      if (!(std::abs(step - dx) <= 1e-9 * dx))
        throw std::runtime_error(path + ": nonuniform x spacing at row " + std::to_string(j + 1));
    }
  }
  return make_signal(std::move(samples), dx, x0);
}

inline void write_table_csv(const std::vector<double>& lambdas,
                            const std::vector<double>& values, const std::string& path) {
  if (lambdas.size() != values.size())
    throw std::invalid_argument("write_table_csv: column lengths differ");
  std::ofstream out = detail::open_for_write(path);
  out << "lambda,value\n";
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    out << detail::format_double(lambdas[i]) << ',' << detail::format_double(values[i]) << '\n';
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

// reads a tabulated index function; the factory enforces monotonicity
inline IndexFunction read_table_csv(const std::string& path) {
  const auto rows = detail::read_csv_pairs(path, "lambda,value");
  std::vector<double> lambdas(rows.size()), values(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    lambdas[i] = rows[i].first;
    values[i] = rows[i].second;
  }
  return IndexFunction::tabulated(std::move(lambdas), std::move(values));
}

}  // namespace dhs
