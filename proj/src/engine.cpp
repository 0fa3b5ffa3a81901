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

#include "frt/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "frt/errors.hpp"
#include "frt/kernels.hpp"

namespace frt {

namespace {

using ConstVectorMap = Eigen::Map<const Eigen::VectorXcd>;

ConstVectorMap as_vector(const SampledSignal& f) {
  return ConstVectorMap(f.values().data(), static_cast<Eigen::Index>(f.size()));
}

SampledSignal from_vector(const Grid& grid, const Eigen::VectorXcd& v) {
  return SampledSignal(grid, std::vector<cplx>(v.data(), v.data() + v.size()));
}

}  // namespace

KernelMatrix::KernelMatrix(TransformSpec spec, Grid grid, ComplexMatrix entries)
    : spec_(spec), grid_(std::move(grid)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw DomainError("kernel matrix dimensions do not match the grid");
  }
  if (!entries_.allFinite()) throw DomainError("kernel matrix has non-finite entries");
}

KernelMatrix build_kernel_matrix(const TransformSpec& spec, const Grid& grid) {
  const KernelEvaluator kernel(spec);
  const auto n = static_cast<Eigen::Index>(grid.size());
  const auto x = grid.points();
  const auto w = grid.weights();
  ComplexMatrix entries(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) entries(j, k) = kernel(x[j], x[k]) * w[k];
  }
  return KernelMatrix(spec, grid, std::move(entries));
}

SampledSignal apply_quadrature(const KernelMatrix& km, const SampledSignal& f) {
  require_same_grid(km.grid(), f.grid(), "apply_quadrature");
  const Eigen::VectorXcd out = km.entries() * as_vector(f);
  return from_vector(f.grid(), out);
}

SampledSignal apply_direct(const TransformSpec& spec, const SampledSignal& f) {
  const KernelEvaluator kernel(spec);
  const Grid& grid = f.grid();
  const auto x = grid.points();
  const auto w = grid.weights();
  const std::size_t n = grid.size();

  std::vector<cplx> weighted(n);
  for (std::size_t k = 0; k < n; ++k) weighted[k] = w[k] * f[k];

  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += kernel(x[j], x[k]) * weighted[k];
    out[j] = sum;
  }
  return SampledSignal(grid, std::move(out));
}

SampledSignal apply_singular(SingularAction action, const SampledSignal& f) {
  switch (action) {
    case SingularAction::Identity:
      return f;
    case SingularAction::Parity: {
      std::vector<cplx> out(f.values().rbegin(), f.values().rend());
      return SampledSignal(f.grid(), std::move(out));
    }
    case SingularAction::NotSingular:
      break;
  }
  throw DomainError("apply_singular called for a non-singular transform");
}

KernelMatrix compose(const KernelMatrix& outer, const KernelMatrix& inner) {
  require_same_grid(outer.grid(), inner.grid(), "compose");
  const TransformSpec& a = outer.spec();
  const TransformSpec& b = inner.spec();
  if (a.family() != b.family()) throw DomainError("compose: transform families differ");
  if (a.family() == Family::GFrT && a.theta() != b.theta()) {
    throw DomainError("compose: GFrT kernels with different theta do not form a group");
  }
  ComplexMatrix product = outer.entries() * inner.entries();
  return KernelMatrix(a.with_alpha(a.alpha() + b.alpha()), outer.grid(), std::move(product));
}

const KernelMatrix& KernelCache::get(const TransformSpec& spec, const Grid& grid) {
  const Key key{static_cast<int>(spec.family()), spec.alpha(), spec.theta(), grid.half_width(),
                grid.size()};
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    auto km = std::make_unique<KernelMatrix>(build_kernel_matrix(spec, grid));
    it = entries_.emplace(key, std::move(km)).first;
  }
  return *it->second;
}

std::size_t KernelCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

SampledSignal apply_transform(const TransformSpec& spec, const SampledSignal& f,
                              KernelCache* cache) {
  const SingularAction action = singular_action(spec);
  if (action != SingularAction::NotSingular) return apply_singular(action, f);
  if (cache != nullptr) return apply_quadrature(cache->get(spec, f.grid()), f);
  return apply_direct(spec, f);
}

SpectralCoefficients project(const HermiteBasis& basis, const SampledSignal& f, int max_order) {
  require_same_grid(basis.grid(), f.grid(), "project");
  if (max_order < 0 || max_order > basis.max_order()) {
    throw DomainError("spectral order " + std::to_string(max_order) + " outside basis range [0, " +
                      std::to_string(basis.max_order()) + "]");
  }
  const auto w = f.grid().weights();
  Eigen::VectorXcd weighted(static_cast<Eigen::Index>(f.size()));
  for (std::size_t k = 0; k < f.size(); ++k) weighted[static_cast<Eigen::Index>(k)] = w[k] * f[k];

  const auto rows = basis.eigen_rows().topRows(max_order + 1);
  const Eigen::VectorXcd c = rows.conjugate() * weighted;
  return {max_order, std::vector<cplx>(c.data(), c.data() + c.size())};
}

SampledSignal reconstruct(const HermiteBasis& basis, const SpectralCoefficients& coeffs,
                          double alpha) {
  if (coeffs.max_order > basis.max_order() ||
      coeffs.c.size() != static_cast<std::size_t>(coeffs.max_order + 1)) {
    throw DomainError("coefficients do not fit the basis");
  }
  Eigen::VectorXcd scaled(coeffs.max_order + 1);
  for (int m = 0; m <= coeffs.max_order; ++m) {
    scaled[m] = coeffs.c[static_cast<std::size_t>(m)] * std::polar(1.0, -m * alpha);
  }
  const Eigen::VectorXcd out =
      basis.eigen_rows().topRows(coeffs.max_order + 1).transpose() * scaled;
  return from_vector(basis.grid(), out);
}

SampledSignal apply_spectral(const TransformSpec& spec, const HermiteBasis& basis,
                             const SampledSignal& f, int max_order) {
  if (spec.family() != Family::FrFT) {
    throw Unsupported("apply_spectral: the hyperbolic family has no eigenfunction expansion");
  }
  return reconstruct(basis, project(basis, f, max_order), spec.alpha());
}

double effective_support(const SampledSignal& f, double rel_threshold) {
  double peak = 0.0;
  for (const cplx& v : f.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  double support = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (std::abs(f[k]) >= rel_threshold * peak) {
      support = std::max(support, std::abs(f.grid().point(k)));
    }
  }
  return support;
}

bool quadrature_resolved(const TransformSpec& spec, const Grid& grid, double support) {
  if (singular_action(spec) != SingularAction::NotSingular) return true;
  const KernelEvaluator kernel(spec);
  const double rate = (std::abs(kernel.chirp_x()) + 1.0) * support +
                      std::abs(kernel.cross()) * grid.half_width();
  return rate < 2.0 * std::numbers::pi / grid.spacing();
}

}  // namespace frt
