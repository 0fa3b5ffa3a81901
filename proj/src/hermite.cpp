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

#include "frt/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "frt/errors.hpp"

namespace frt {

namespace {

// pi^{-1/4}
const double kGaussNorm = std::pow(std::numbers::pi, -0.25);

struct RecurrenceCoefficients {
  double up;    // sqrt(2/m)
  double down;  // sqrt((m-1)/m)
};

RecurrenceCoefficients coefficients(int m) {
  const double md = static_cast<double>(m);
  return {std::sqrt(2.0 / md), std::sqrt((md - 1.0) / md)};
}

}  // namespace

cplx eigen_phase_factor(int m) noexcept {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

cplx eigenvalue_phase(const TransformSpec& spec, int m) {
  if (spec.family() != Family::FrFT) {
    throw Unsupported("eigenvalue_phase: the hyperbolic family has no eigenfunctions");
  }
  return std::polar(1.0, -static_cast<double>(m) * spec.alpha());
}

double hermite_function(int m, double x) {
  if (m < 0) throw DomainError("Hermite order must be non-negative");
  double prev = kGaussNorm * std::exp(-0.5 * x * x);
  if (m == 0) return prev;
  double cur = std::numbers::sqrt2 * x * prev;
  for (int n = 2; n <= m; ++n) {
    const auto [up, down] = coefficients(n);
    const double next = x * up * cur - down * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

HermiteBasis build_basis(const Grid& grid, int max_order) {
  if (max_order < 0) throw DomainError("basis max_order must be non-negative");
  const auto n = static_cast<Eigen::Index>(grid.size());
  const auto x = grid.points();
  HermiteBasis::RealRows h(max_order + 1, n);

  for (Eigen::Index k = 0; k < n; ++k) h(0, k) = kGaussNorm * std::exp(-0.5 * x[k] * x[k]);
  if (max_order >= 1) {
    for (Eigen::Index k = 0; k < n; ++k) h(1, k) = std::numbers::sqrt2 * x[k] * h(0, k);
  }
  for (int m = 2; m <= max_order; ++m) {
    const auto [up, down] = coefficients(m);
    for (Eigen::Index k = 0; k < n; ++k) h(m, k) = x[k] * up * h(m - 1, k) - down * h(m - 2, k);
  }

  for (int m = 0; m <= max_order; ++m) {
    if (h.row(m).cwiseAbs().maxCoeff() == 0.0) {
      throw BasisUnderflow("Hermite-Gaussian of order " + std::to_string(m) +
                           " underflows to zero on every grid point (L=" +
                           std::to_string(grid.half_width()) + ", N=" +
                           std::to_string(grid.size()) + ")");
    }
  }

  HermiteBasis::ComplexRows f(max_order + 1, n);
  for (int m = 0; m <= max_order; ++m) {
    f.row(m) = eigen_phase_factor(m) * h.row(m).cast<cplx>();
  }
  return HermiteBasis(grid, max_order, std::move(h), std::move(f));
}

void HermiteBasis::check_order(int m) const {
  if (m < 0 || m > max_order_) {
    throw DomainError("order " + std::to_string(m) + " outside basis range [0, " +
                      std::to_string(max_order_) + "]");
  }
}

SampledSignal HermiteBasis::hermite(int m) const {
  check_order(m);
  std::vector<cplx> v(grid_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = h_(m, static_cast<Eigen::Index>(k));
  return SampledSignal(grid_, std::move(v));
}

SampledSignal HermiteBasis::eigenfunction(int m) const {
  check_order(m);
  std::vector<cplx> v(grid_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f_(m, static_cast<Eigen::Index>(k));
  return SampledSignal(grid_, std::move(v));
}

}  // namespace frt
