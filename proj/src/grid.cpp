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

#include "frt/grid.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "frt/errors.hpp"

namespace frt {

Grid::Grid(double half_width, std::size_t n_points)
    : half_width_(half_width), spacing_(2.0 * half_width / static_cast<double>(n_points - 1)) {
  points_.resize(n_points);
  weights_.assign(n_points, spacing_);
  const double last = static_cast<double>(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double j = 2.0 * static_cast<double>(k) - last;
    points_[k] = half_width * (j / last);
  }
  weights_.front() = 0.5 * spacing_;
  weights_.back() = 0.5 * spacing_;
}

Grid make_grid(double half_width, std::size_t n_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("grid half width must be positive and finite, got " +
                      std::to_string(half_width));
  }
  if (n_points < kMinGridPoints) {
    throw DomainError("grid needs at least " + std::to_string(kMinGridPoints) +
                      " points, got " + std::to_string(n_points));
  }
  return Grid(half_width, n_points);
}

void require_same_grid(const Grid& a, const Grid& b, const char* context) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << context << ": grid mismatch (L=" << a.half_width() << ", N=" << a.size()
        << " vs L=" << b.half_width() << ", N=" << b.size() << ")";
    throw GridMismatch(msg.str());
  }
}

SampledSignal::SampledSignal(Grid grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw DomainError("signal has " + std::to_string(values_.size()) + " values for a grid of " +
                      std::to_string(grid_.size()) + " points");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k].real()) || !std::isfinite(values_[k].imag())) {
      throw DomainError("signal value at index " + std::to_string(k) + " is not finite");
    }
  }
}

SampledSignal SampledSignal::zeros(const Grid& grid) {
  return SampledSignal(grid, std::vector<cplx>(grid.size()));
}

SampledSignal sample(const Grid& grid, const std::function<cplx(double)>& fn) {
  std::vector<cplx> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = fn(grid.point(k));
  return SampledSignal(grid, std::move(values));
}

namespace {

template <typename Op>
SampledSignal combine(const SampledSignal& a, const SampledSignal& b, Op op, const char* what) {
  require_same_grid(a.grid(), b.grid(), what);
  std::vector<cplx> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(a[k], b[k]);
  return SampledSignal(a.grid(), std::move(out));
}

}  // namespace

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b) {
  return combine(a, b, std::plus<>{}, "signal sum");
}

SampledSignal operator-(const SampledSignal& a, const SampledSignal& b) {
  return combine(a, b, std::minus<>{}, "signal difference");
}

SampledSignal operator*(cplx scale, const SampledSignal& f) {
  std::vector<cplx> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = scale * f[k];
  return SampledSignal(f.grid(), std::move(out));
}

cplx inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  const auto w = f.grid().weights();
  cplx sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += w[k] * std::conj(f[k]) * g[k];
  return sum;
}

double l2_norm(const SampledSignal& f) {
  const cplx ff = inner_product(f, f);
  if (std::abs(ff.imag()) > 1e-12) {
    throw DomainError("<f,f> has imaginary part " + std::to_string(ff.imag()));
  }
  return std::sqrt(std::max(ff.real(), 0.0));
}

double relative_l2_error(const SampledSignal& actual, const SampledSignal& expected) {
  const double diff = l2_norm(actual - expected);
  const double ref = l2_norm(expected);
  return ref > 0.0 ? diff / ref : diff;
}

}  // namespace frt
