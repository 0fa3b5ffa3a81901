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

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace frt {

using cplx = std::complex<double>;

/// Uniform closed grid on [-L, L] with trapezoidal quadrature weights.
///
/// Points are generated as L * (2k - (N-1)) / (N-1), so the grid is exactly
/// antisymmetric (points[N-1-k] == -points[k]) and both endpoints are exact.
class Grid {
 public:
  Grid(double half_width, std::size_t n_points);

  double half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return points_.size(); }
  double spacing() const noexcept { return spacing_; }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double point(std::size_t k) const { return points_[k]; }
  double weight(std::size_t k) const { return weights_[k]; }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.half_width_ == b.half_width_ && a.points_.size() == b.points_.size();
  }

 private:
  double half_width_;
  double spacing_;
  std::vector<double> points_;
  std::vector<double> weights_;
};

inline constexpr std::size_t kMinGridPoints = 8;
inline constexpr double kDefaultHalfWidth = 10.0;
inline constexpr std::size_t kDefaultGridPoints = 1024;

/// Validating factory. Throws DomainError for half_width <= 0 (or
/// non-finite) and for n_points < 8.
Grid make_grid(double half_width, std::size_t n_points);

/// Complex samples of a function on a Grid. Immutable; all values finite.
class SampledSignal {
 public:
  SampledSignal(Grid grid, std::vector<cplx> values);

  /// Zero signal on `grid`.
  static SampledSignal zeros(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t k) const { return values_[k]; }

 private:
  Grid grid_;
  std::vector<cplx> values_;
};

SampledSignal sample(const Grid& grid, const std::function<cplx(double)>& fn);

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator-(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator*(cplx scale, const SampledSignal& f);

/// sum_k w_k conj(f_k) g_k. Throws GridMismatch.
cplx inner_product(const SampledSignal& f, const SampledSignal& g);

/// Quadrature L2 norm. Throws DomainError if the imaginary part of <f,f>
/// exceeds 1e-12 in magnitude.
double l2_norm(const SampledSignal& f);

/// ||actual - expected|| / ||expected||; absolute when expected is zero.
double relative_l2_error(const SampledSignal& actual, const SampledSignal& expected);

void require_same_grid(const Grid& a, const Grid& b, const char* context);

}  // namespace frt
