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

#include <optional>
#include <string>

#include "frt/errors.hpp"

namespace frt {

enum class Family { FrFT, GFrT };

const char* to_string(Family family);

/// |sin alpha|, |sinh alpha| and |cos theta| below this are singular.
inline constexpr double kSingularTolerance = 1e-9;

/// Transform family plus its parameters.
///
/// FrFT: alpha is the rotation angle in radians, taken modulo 2 pi.
/// GFrT: alpha is the hyperbolic rapidity, theta in (-pi/2, pi/2) with
/// |cos theta| > 1e-9.
class TransformSpec {
 public:
  static TransformSpec frft(double alpha);
  static TransformSpec gfrt(double alpha, double theta);

  Family family() const noexcept { return family_; }
  double alpha() const noexcept { return alpha_; }
  /// Only meaningful for GFrT; zero for FrFT.
  double theta() const noexcept { return theta_; }

  /// alpha in [0, 2 pi) for FrFT; alpha unchanged for GFrT.
  double reduced_alpha() const noexcept;

  bool singular() const noexcept;

  /// Same family (and theta for GFrT) with alpha replaced.
  TransformSpec with_alpha(double alpha) const;

  std::string describe() const;

  friend bool operator==(const TransformSpec&, const TransformSpec&) = default;

 private:
  TransformSpec(Family family, double alpha, double theta)
      : family_(family), alpha_(alpha), theta_(theta) {}

  Family family_;
  double alpha_;
  double theta_;
};

}  // namespace frt
