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

#include "frt/spec.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace frt {

const char* to_string(Family family) {
  switch (family) {
    case Family::FrFT: return "frft";
    case Family::GFrT: return "gfrt";
  }
  return "?";
}

const char* to_string(SingularAction action) {
  switch (action) {
    case SingularAction::Identity: return "Identity";
    case SingularAction::Parity: return "Parity";
    case SingularAction::NotSingular: return "NotSingular";
  }
  return "?";
}

TransformSpec TransformSpec::frft(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("FrFT alpha must be finite");
  return TransformSpec(Family::FrFT, alpha, 0.0);
}

TransformSpec TransformSpec::gfrt(double alpha, double theta) {
  if (!std::isfinite(alpha) || !std::isfinite(theta)) {
    throw DomainError("GFrT alpha and theta must be finite");
  }
  if (std::abs(std::cos(theta)) <= kSingularTolerance) {
    throw DegenerateKernel("GFrT theta is within 1e-9 of +-pi/2 (dilation limit)");
  }
  if (!(std::abs(theta) < std::numbers::pi / 2)) {
    throw DomainError("GFrT theta must lie in (-pi/2, pi/2)");
  }
  return TransformSpec(Family::GFrT, alpha, theta);
}

double TransformSpec::reduced_alpha() const noexcept {
  if (family_ == Family::GFrT) return alpha_;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(alpha_, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

bool TransformSpec::singular() const noexcept {
  if (family_ == Family::GFrT) return std::abs(std::sinh(alpha_)) < kSingularTolerance;
  return std::abs(std::remainder(alpha_, std::numbers::pi)) < kSingularTolerance;
}

TransformSpec TransformSpec::with_alpha(double alpha) const {
  return family_ == Family::FrFT ? frft(alpha) : gfrt(alpha, theta_);
}

std::string TransformSpec::describe() const {
  std::ostringstream s;
  s.precision(17);
  s << to_string(family_) << "(alpha=" << alpha_;
  if (family_ == Family::GFrT) s << ", theta=" << theta_;
  s << ")";
  return s.str();
}

}  // namespace frt
