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

#include "frt/kernels.hpp"

#include <cmath>
#include <numbers>

#include "frt/errors.hpp"

namespace frt {

SingularAction singular_action(const TransformSpec& spec) {
  if (!spec.singular()) return SingularAction::NotSingular;
  if (spec.family() == Family::GFrT) return SingularAction::Identity;
  const double turns = std::round(spec.alpha() / std::numbers::pi);
  return std::fmod(std::abs(turns), 2.0) == 0.0 ? SingularAction::Identity
                                                : SingularAction::Parity;
}

KernelEvaluator::KernelEvaluator(const TransformSpec& spec) : spec_(spec) {
  if (spec.singular()) {
    const SingularAction action = singular_action(spec);
    throw SingularKernel(action, spec.describe() + " has a delta kernel; use the " +
                                     to_string(action) + " shortcut");
  }
  if (spec.family() == Family::FrFT) {
    const double a = spec.reduced_alpha();
    const double s = std::sin(a);
    const double cot = std::cos(a) / s;
    c0_ = cot;
    c1_ = s;
    prefactor_ = std::sqrt(cplx(1.0, -cot) / (2.0 * std::numbers::pi));
  } else {
    const double a = spec.alpha();
    const double cos_t = std::cos(spec.theta());
    c0_ = std::tanh(a) * cos_t;
    c1_ = std::tan(spec.theta());
    c2_ = std::sinh(a) * cos_t;
    prefactor_ = 1.0 / std::sqrt(cplx(0.0, 2.0 * std::numbers::pi * cos_t * std::sinh(a)));
  }
}

cplx KernelEvaluator::operator()(double p, double x) const noexcept {
  double phase;
  if (spec_.family() == Family::FrFT) {
    phase = 0.5 * ((p * p + x * x) * c0_ - 2.0 * p * x / c1_);
  } else {
    phase = 0.5 * ((x * x + p * p) / c0_ + (x * x - p * p) * c1_ - 2.0 * x * p / c2_);
  }
  return prefactor_ * std::polar(1.0, phase);
}

double KernelEvaluator::chirp_x() const noexcept {
  return spec_.family() == Family::FrFT ? c0_ : 1.0 / c0_ + c1_;
}

double KernelEvaluator::cross() const noexcept {
  return spec_.family() == Family::FrFT ? 1.0 / c1_ : 1.0 / c2_;
}

cplx frft_kernel(double alpha, double p, double x) {
  return KernelEvaluator(TransformSpec::frft(alpha))(p, x);
}

cplx gfrt_kernel(double alpha, double theta, double p, double x) {
  return KernelEvaluator(TransformSpec::gfrt(alpha, theta))(p, x);
}

cplx kernel_value(const TransformSpec& spec, double p, double x) {
  return KernelEvaluator(spec)(p, x);
}

}  // namespace frt
