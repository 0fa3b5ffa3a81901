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

#include "frt/grid.hpp"
#include "frt/spec.hpp"

namespace frt {

/// Identity for FrFT alpha = 0 (mod 2 pi) and GFrT alpha = 0, Parity for
/// FrFT alpha = pi (mod 2 pi), NotSingular otherwise.
SingularAction singular_action(const TransformSpec& spec);

/// FrFT kernel
///   sqrt((1 - i cot a) / 2pi) exp[(i/2)((p^2 + x^2) cot a - 2 p x / sin a)]
/// with the principal complex square root. Throws SingularKernel when
/// |sin a| < 1e-9.
cplx frft_kernel(double alpha, double p, double x);

/// Hyperbolic kernel
///   exp[(i/2)((x^2 + p^2)/(tanh a cos t) + (x^2 - p^2) tan t
///             - 2 x p/(sinh a cos t))] / sqrt(2 pi i cos t sinh a)
/// with the principal complex square root. Throws SingularKernel when
/// |sinh a| < 1e-9 and DegenerateKernel when |cos t| < 1e-9.
cplx gfrt_kernel(double alpha, double theta, double p, double x);

cplx kernel_value(const TransformSpec& spec, double p, double x);

/// Precomputed kernel of either family, for evaluation over many (p, x).
///
/// Every kernel here has the form C exp[(i/2)(a x^2 - 2 b x p + c p^2)];
/// `chirp_x()` = a and `cross()` = b are exposed for the sampling guard.
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const TransformSpec& spec);

  cplx operator()(double p, double x) const noexcept;

  const TransformSpec& spec() const noexcept { return spec_; }
  cplx prefactor() const noexcept { return prefactor_; }
  double chirp_x() const noexcept;
  double cross() const noexcept;

 private:
  TransformSpec spec_;
  cplx prefactor_;
  // FrFT: cot, sin. GFrT: tanh*cos, tan, sinh*cos.
  double c0_ = 0.0;
  double c1_ = 0.0;
  double c2_ = 0.0;
};

}  // namespace frt
