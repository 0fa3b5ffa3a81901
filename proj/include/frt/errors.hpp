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

#include <stdexcept>
#include <string>

namespace frt {

enum class SingularAction { Identity, Parity, NotSingular };

const char* to_string(SingularAction action);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two signals (or a signal and a kernel matrix) live on different grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// The kernel degenerates to a delta. `action()` names the shortcut that
/// replaces the integral (identity or parity).
class SingularKernel : public Error {
 public:
  SingularKernel(SingularAction action, const std::string& what)
      : Error(what), action_(action) {}
  SingularAction action() const noexcept { return action_; }

 private:
  SingularAction action_;
};

/// theta too close to +-pi/2: the hyperbolic kernel collapses onto the
/// dilation operator and cannot be sampled.
class DegenerateKernel : public Error {
 public:
  using Error::Error;
};

/// The grid spacing cannot resolve the kernel chirp over the signal support.
class UnresolvedGrid : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A Hermite-Gaussian row underflowed to all zeros on the grid.
class BasisUnderflow : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the requested transform family.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace frt
