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

#include <Eigen/Dense>

#include "frt/grid.hpp"
#include "frt/spec.hpp"

namespace frt {

inline constexpr int kDefaultBasisOrder = 64;

/// Orthonormal Hermite-Gaussians h_m and the FrFT eigenfunctions
/// f_m = i^{-m} h_m sampled on a grid, m = 0..max_order.
///
/// Rows come from the normalized three-term recurrence
///   h_m = x sqrt(2/m) h_{m-1} - sqrt((m-1)/m) h_{m-2},
/// which never forms H_m or 2^m m! and so cannot overflow.
class HermiteBasis {
 public:
  using RealRows = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using ComplexRows = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  const Grid& grid() const noexcept { return grid_; }
  int max_order() const noexcept { return max_order_; }

  const RealRows& hermite_rows() const noexcept { return h_; }
  const ComplexRows& eigen_rows() const noexcept { return f_; }

  SampledSignal hermite(int m) const;
  SampledSignal eigenfunction(int m) const;

 private:
  friend HermiteBasis build_basis(const Grid& grid, int max_order);
  HermiteBasis(Grid grid, int max_order, RealRows h, ComplexRows f)
      : grid_(std::move(grid)), max_order_(max_order), h_(std::move(h)), f_(std::move(f)) {}

  void check_order(int m) const;

  Grid grid_;
  int max_order_;
  RealRows h_;
  ComplexRows f_;
};

/// Throws DomainError for max_order < 0 and BasisUnderflow if some row is
/// identically zero on the grid.
HermiteBasis build_basis(const Grid& grid, int max_order);

/// h_m(x) at a single point via the same recurrence.
double hermite_function(int m, double x);

/// i^{-m}, taken from the exact cycle {1, -i, -1, i}.
cplx eigen_phase_factor(int m) noexcept;

/// e^{-i m alpha}, the eigenvalue of f_m under the FrFT of angle alpha.
/// Throws Unsupported for GFrT (the hyperbolic family has no eigenfunctions).
cplx eigenvalue_phase(const TransformSpec& spec, int m);

}  // namespace frt
