/* Copyright 2026 The frt Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "frt/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "frt/errors.hpp"

namespace frt {

namespace {

constexpr double kSpacingTolerance = 1e-9;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line) + ": cannot parse '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": non-finite value");
  }
  return value;
}

}  // namespace

SampledSignal read_signal(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw ParseError("empty signal file");
  if (trim(line) != "x,re,im") {
    throw ParseError("expected header 'x,re,im', got '" + std::string(trim(line)) + "'");
  }

  std::vector<double> xs;
  std::vector<cplx> values;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields");
    }
    xs.push_back(parse_field(row.substr(0, c1), line_no));
    const double re = parse_field(row.substr(c1 + 1, c2 - c1 - 1), line_no);
    const double im = parse_field(row.substr(c2 + 1), line_no);
    values.emplace_back(re, im);
  }

  if (xs.size() < kMinGridPoints) {
    throw ParseError("signal file has " + std::to_string(xs.size()) + " rows, need at least " +
                     std::to_string(kMinGridPoints));
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (!(xs[k] > xs[k - 1])) throw ParseError("x column is not strictly increasing");
  }
  const double half_width = 0.5 * (xs.back() - xs.front());
  if (std::abs(xs.front() + xs.back()) > kSpacingTolerance * half_width) {
    throw ParseError("x column is not symmetric about zero");
  }
  Grid grid = make_grid(half_width, xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (std::abs(xs[k] - grid.point(k)) > kSpacingTolerance * half_width) {
      throw ParseError("x column is not uniformly spaced (row " + std::to_string(k) + ")");
    }
  }
  return SampledSignal(std::move(grid), std::move(values));
}

SampledSignal read_signal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_signal(in);
}

void write_signal(const SampledSignal& f, std::ostream& out) {
  out << "x,re,im\n";
  char buf[96];
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", f.grid().point(k), f[k].real(),
                  f[k].imag());
    out << buf;
  }
}

void write_signal(const SampledSignal& f, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_signal(f, out);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace frt
