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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frt/engine.hpp"
#include "frt/grid.hpp"
#include "frt/hermite.hpp"
#include "frt/spec.hpp"
#include "frt/test_signals.hpp"

namespace frt {

using ParamValue = std::variant<bool, std::int64_t, double, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

/// Outcome of one named check. passed is always residual <= tolerance.
struct CheckReport {
  std::string check_name;
  Params parameters;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CheckReport make_report(std::string name, Params parameters, double residual, double tolerance);

bool is_negative_control(const CheckReport& report);

/// One JSON object, no trailing newline. Non-finite residuals become null.
std::string to_json_line(const CheckReport& report);

// Individual checks. Each throws on invalid input (see the per-check notes)
// and otherwise reports the measured residual.

/// ||F_a[F_b[f]] - F_{a+b}[f]|| / ||f||. theta is required for GFrT.
/// Singular parameters go through the Identity/Parity shortcuts.
CheckReport check_additivity(Family family, double alpha, double beta,
                             std::optional<double> theta, const SampledSignal& f,
                             double tolerance = 1e-5, KernelCache* cache = nullptr);

/// | ||F[f]|| / ||f|| - 1 |. Throws DomainError for a zero signal and
/// SingularKernel for singular specs.
CheckReport check_parseval(const TransformSpec& spec, const SampledSignal& f,
                           double tolerance = 1e-6, KernelCache* cache = nullptr);

/// ||F_a[f_m] - e^{-i m a} f_m|| on the quadrature path. Throws Unsupported for
/// GFrT and DomainError for m outside the basis.
CheckReport check_eigen(const TransformSpec& spec, int m, const HermiteBasis& basis,
                        double tolerance = 1e-5, KernelCache* cache = nullptr);

/// max over m, m' <= max_order of |<f_m, f_m'> - delta|. max_order defaults to
/// min(basis.max_order(), 30).
CheckReport check_orthogonality(const HermiteBasis& basis, std::optional<int> max_order = {},
                                double tolerance = 1e-8);

/// Relative L2 error of reconstructing f from its first max_order + 1
/// coefficients.
CheckReport check_completeness(const HermiteBasis& basis, const SampledSignal& f,
                               int max_order = kDefaultSpectralOrder, double tolerance = 1e-6);

/// FrFT at pi/2 against a direct sum of e^{-ipx}/sqrt(2pi) f(x) w(x).
CheckReport check_fourier_reduction(const SampledSignal& f, double tolerance = 1e-8,
                                    KernelCache* cache = nullptr);

/// Quadrature path against spectral path, relative L2.
CheckReport check_spectral_agreement(const TransformSpec& spec, const HermiteBasis& basis,
                                     const SampledSignal& f,
                                     int max_order = kDefaultSpectralOrder,
                                     double tolerance = 1e-5, KernelCache* cache = nullptr);

/// ||F_{-a}[F_a[f]] - f|| / ||f||.
CheckReport check_inversion(const TransformSpec& spec, const SampledSignal& f,
                            double tolerance = 1e-5, KernelCache* cache = nullptr);

/// Max relative deviation between gfrt_kernel(a, 0, p, x) and an independent
/// evaluation of the theta = 0 closed form over random samples with
/// a in [0.2, 2], p, x in [-half_width, half_width].
CheckReport check_theta0_reduction(std::size_t samples = 10000, std::uint64_t seed = 20260415,
                                   double half_width = kDefaultHalfWidth,
                                   double tolerance = 1e-14);

/// Applies GFrT(alpha, pi/2 - eps) to f for each eps (strictly decreasing)
/// and measures d_eps = ||F[f](p) - e^{-alpha/2} f(p e^{-alpha})|| / ||f|| after
/// aligning the phase at the output peak. residual = d at the smallest eps,
/// or +inf if d fails to decrease strictly (above a 1e-12 floor).
/// Throws DomainError for bad eps lists and UnresolvedGrid when the grid
/// cannot sample the kernel at some eps.
CheckReport check_dilation_limit(double alpha, const std::vector<double>& epsilons,
                                 const Grid& grid, const AnalyticSignal& f,
                                 double threshold = 0.1);

/// Check groups of the acceptance matrix.
enum class SuiteGroup {
  FourierReduction,
  FrftAdditivity,
  GfrtAdditivity,
  Parseval,
  EigenRelations,
  OrthogonalityCompleteness,
  SpectralAgreement,
  Theta0Reduction,
  DilationLimit,
  Inversion,
  NegativeControls,
};

const char* to_string(SuiteGroup group);
std::optional<SuiteGroup> parse_suite_group(const std::string& name);
std::set<SuiteGroup> all_suite_groups();

struct SuiteConfig {
  std::set<SuiteGroup> groups;
  double half_width = kDefaultHalfWidth;
  std::size_t n_points = kDefaultGridPoints;
  int basis_order = kDefaultSpectralOrder;
  // The dilation limit needs a much finer grid than the rest of the matrix.
  double dilation_half_width = 10.0;
  std::size_t dilation_points = 4096;
  double dilation_threshold = 0.1;
  // Grid of the truncation negative control.
  double negative_control_half_width = 2.0;

  /// Every group, default grids.
  static SuiteConfig defaults();
};

/// Runs the enabled groups. Failures are returned as reports, not thrown.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// True when every regular report passed and every negative control failed.
bool suite_passed(const std::vector<CheckReport>& reports);

}  // namespace frt
