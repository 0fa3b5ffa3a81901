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

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "frt/grid.hpp"
#include "frt/hermite.hpp"
#include "frt/spec.hpp"

namespace frt {

using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Kernel sampled on grid x grid with the quadrature weights fused into the
/// columns: entries(j, k) = K(p_j, x_k) * w_k. Applying the transform is a
/// matrix-vector product, and composing two transforms is a matrix product
/// whose inner sum is the quadrature of the intermediate variable.
class KernelMatrix {
 public:
  KernelMatrix(TransformSpec spec, Grid grid, ComplexMatrix entries);

  const TransformSpec& spec() const noexcept { return spec_; }
  const Grid& grid() const noexcept { return grid_; }
  const ComplexMatrix& entries() const noexcept { return entries_; }

 private:
  TransformSpec spec_;
  Grid grid_;
  ComplexMatrix entries_;
};

/// Throws SingularKernel for singular specs.
KernelMatrix build_kernel_matrix(const TransformSpec& spec, const Grid& grid);

/// entries * f. The output lives on the same grid, read as the p axis.
SampledSignal apply_quadrature(const KernelMatrix& km, const SampledSignal& f);

/// Same quadrature as apply_quadrature but evaluates kernel rows on the fly
/// (O(N) memory). Throws SingularKernel for singular specs.
SampledSignal apply_direct(const TransformSpec& spec, const SampledSignal& f);

/// Identity or Parity (index reversal on the symmetric grid).
SampledSignal apply_singular(SingularAction action, const SampledSignal& f);

/// Product of two kernel matrices of the same family and grid. The result
/// carries the spec with the summed alpha. Throws GridMismatch or
/// DomainError (family or theta mismatch).
KernelMatrix compose(const KernelMatrix& outer, const KernelMatrix& inner);

/// Thread-safe memo of kernel matrices keyed by (spec, grid).
class KernelCache {
 public:
  const KernelMatrix& get(const TransformSpec& spec, const Grid& grid);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, double, double, double, std::size_t>;
  mutable std::mutex mutex_;
  std::map<Key, std::unique_ptr<KernelMatrix>> entries_;
};

/// Quadrature-path transform with the singular shortcuts: Identity and
/// Parity specs bypass the kernel. Uses `cache` when given, otherwise the
/// matrix-free path.
SampledSignal apply_transform(const TransformSpec& spec, const SampledSignal& f,
                              KernelCache* cache = nullptr);

inline constexpr int kDefaultSpectralOrder = 40;

/// Expansion coefficients c_m = <f_m, f>, m = 0..max_order.
struct SpectralCoefficients {
  int max_order = 0;
  std::vector<cplx> c;
};

SpectralCoefficients project(const HermiteBasis& basis, const SampledSignal& f, int max_order);

/// sum_m c_m e^{-i m alpha} f_m on the basis grid.
SampledSignal reconstruct(const HermiteBasis& basis, const SpectralCoefficients& coeffs,
                          double alpha);

/// FrFT through the eigen-expansion. Throws Unsupported for GFrT, DomainError
/// for max_order outside [0, basis.max_order()].
SampledSignal apply_spectral(const TransformSpec& spec, const HermiteBasis& basis,
                             const SampledSignal& f, int max_order = kDefaultSpectralOrder);

/// Largest |x| with |f(x)| >= rel_threshold * max|f|.
double effective_support(const SampledSignal& f, double rel_threshold = 1e-10);

/// True when trapezoidal quadrature of K(p, .) f resolves the kernel chirp
/// for every output p on the grid: (|a| + 1) s + |b| L < 2 pi / dx, where a and
/// b are the chirp and cross coefficients and s the signal support. Beyond
/// this the first aliased image of the integrand overlaps the signal.
bool quadrature_resolved(const TransformSpec& spec, const Grid& grid, double support);

}  // namespace frt
