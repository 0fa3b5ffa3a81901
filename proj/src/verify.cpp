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

#include "frt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "frt/errors.hpp"
#include "frt/kernels.hpp"

namespace frt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMonotoneFloor = 1e-12;

TransformSpec make_spec(Family family, double alpha, std::optional<double> theta) {
  if (family == Family::GFrT) {
    if (!theta) throw DomainError("GFrT checks need theta");
    return TransformSpec::gfrt(alpha, *theta);
  }
  if (theta) throw DomainError("theta only applies to the GFrT family");
  return TransformSpec::frft(alpha);
}

void add_spec_params(Params& params, const TransformSpec& spec) {
  params.emplace_back("family", std::string(to_string(spec.family())));
  params.emplace_back("alpha", spec.alpha());
  if (spec.family() == Family::GFrT) params.emplace_back("theta", spec.theta());
}

double nonzero_norm(const SampledSignal& f, const char* check) {
  const double n = l2_norm(f);
  if (n == 0.0) throw DomainError(std::string(check) + ": zero signal");
  return n;
}

std::string eps_key(double eps) {
  std::ostringstream s;
  s << "d[eps=" << eps << "]";
  return s.str();
}

}  // namespace

CheckReport make_report(std::string name, Params parameters, double residual, double tolerance) {
  return {std::move(name), std::move(parameters), residual, tolerance, residual <= tolerance};
}

bool is_negative_control(const CheckReport& report) {
  for (const auto& [key, value] : report.parameters) {
    if (key == "negative_control") {
      const bool* flag = std::get_if<bool>(&value);
      return flag != nullptr && *flag;
    }
  }
  return false;
}

std::string to_json_line(const CheckReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  nlohmann::ordered_json j;
  j["check_name"] = report.check_name;
  j["parameters"] = std::move(params);
  j["residual"] = report.residual;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  return j.dump();
}

CheckReport check_additivity(Family family, double alpha, double beta,
                             std::optional<double> theta, const SampledSignal& f,
                             double tolerance, KernelCache* cache) {
  const TransformSpec first = make_spec(family, alpha, theta);
  const TransformSpec second = make_spec(family, beta, theta);
  const TransformSpec sum = make_spec(family, alpha + beta, theta);
  const double norm = nonzero_norm(f, "check_additivity");

  const SampledSignal sequential = apply_transform(first, apply_transform(second, f, cache), cache);
  const SampledSignal direct = apply_transform(sum, f, cache);

  Params params{{"family", std::string(to_string(family))}, {"alpha", alpha}, {"beta", beta}};
  if (theta) params.emplace_back("theta", *theta);
  return make_report("additivity", std::move(params), l2_norm(sequential - direct) / norm,
                     tolerance);
}

CheckReport check_parseval(const TransformSpec& spec, const SampledSignal& f, double tolerance,
                           KernelCache* cache) {
  if (spec.singular()) {
    throw SingularKernel(singular_action(spec), "check_parseval: " + spec.describe() +
                                                    " is singular");
  }
  const double norm = nonzero_norm(f, "check_parseval");
  const double ratio = l2_norm(apply_transform(spec, f, cache)) / norm;
  Params params;
  add_spec_params(params, spec);
  params.emplace_back("norm_ratio", ratio);
  return make_report("parseval", std::move(params), std::abs(ratio - 1.0), tolerance);
}

CheckReport check_eigen(const TransformSpec& spec, int m, const HermiteBasis& basis,
                        double tolerance, KernelCache* cache) {
  const cplx lambda = eigenvalue_phase(spec, m);
  const SampledSignal fm = basis.eigenfunction(m);
  const SampledSignal out = apply_transform(spec, fm, cache);
  const cplx measured = inner_product(fm, out) / inner_product(fm, fm);

  Params params;
  add_spec_params(params, spec);
  params.emplace_back("m", static_cast<std::int64_t>(m));
  params.emplace_back("eigenvalue_re", lambda.real());
  params.emplace_back("eigenvalue_im", lambda.imag());
  params.emplace_back("measured_re", measured.real());
  params.emplace_back("measured_im", measured.imag());
  return make_report("eigen", std::move(params), l2_norm(out - lambda * fm), tolerance);
}

CheckReport check_orthogonality(const HermiteBasis& basis, std::optional<int> max_order,
                                double tolerance) {
  const int top = max_order.value_or(std::min(basis.max_order(), 30));
  if (top < 0 || top > basis.max_order()) {
    throw DomainError("check_orthogonality: order outside the basis");
  }
  const auto w = basis.grid().weights();
  const Eigen::Map<const Eigen::VectorXd> weights(w.data(), static_cast<Eigen::Index>(w.size()));
  const auto rows = basis.eigen_rows().topRows(top + 1);
  const ComplexMatrix gram = rows.conjugate() * weights.cast<cplx>().asDiagonal() * rows.transpose();

  double off_diagonal = 0.0;
  double diagonal = 0.0;
  for (Eigen::Index i = 0; i <= top; ++i) {
    for (Eigen::Index j = 0; j <= top; ++j) {
      if (i == j) {
        diagonal = std::max(diagonal, std::abs(gram(i, j) - 1.0));
      } else {
        off_diagonal = std::max(off_diagonal, std::abs(gram(i, j)));
      }
    }
  }
  Params params{{"max_order", static_cast<std::int64_t>(top)},
                {"half_width", basis.grid().half_width()},
                {"n_points", static_cast<std::int64_t>(basis.grid().size())},
                {"max_off_diagonal", off_diagonal},
                {"max_diagonal_deviation", diagonal}};
  return make_report("orthogonality", std::move(params), std::max(off_diagonal, diagonal),
                     tolerance);
}

CheckReport check_completeness(const HermiteBasis& basis, const SampledSignal& f, int max_order,
                               double tolerance) {
  nonzero_norm(f, "check_completeness");
  const SampledSignal rebuilt = reconstruct(basis, project(basis, f, max_order), 0.0);
  Params params{{"max_order", static_cast<std::int64_t>(max_order)},
                {"half_width", basis.grid().half_width()},
                {"n_points", static_cast<std::int64_t>(basis.grid().size())}};
  return make_report("completeness", std::move(params), relative_l2_error(rebuilt, f), tolerance);
}

CheckReport check_fourier_reduction(const SampledSignal& f, double tolerance, KernelCache* cache) {
  nonzero_norm(f, "check_fourier_reduction");
  const SampledSignal frft = apply_transform(TransformSpec::frft(std::numbers::pi / 2), f, cache);

  const Grid& grid = f.grid();
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::vector<cplx> direct(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    cplx sum = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      sum += grid.weight(k) * std::polar(scale, -grid.point(j) * grid.point(k)) * f[k];
    }
    direct[j] = sum;
  }
  const SampledSignal fourier(grid, std::move(direct));
  return make_report("fourier_reduction", {{"alpha", std::numbers::pi / 2}},
                     relative_l2_error(frft, fourier), tolerance);
}

CheckReport check_spectral_agreement(const TransformSpec& spec, const HermiteBasis& basis,
                                     const SampledSignal& f, int max_order, double tolerance,
                                     KernelCache* cache) {
  const SampledSignal spectral = apply_spectral(spec, basis, f, max_order);
  const SampledSignal quadrature = apply_transform(spec, f, cache);
  Params params;
  add_spec_params(params, spec);
  params.emplace_back("max_order", static_cast<std::int64_t>(max_order));
  return make_report("spectral_agreement", std::move(params),
                     relative_l2_error(spectral, quadrature), tolerance);
}

CheckReport check_inversion(const TransformSpec& spec, const SampledSignal& f, double tolerance,
                            KernelCache* cache) {
  const double norm = nonzero_norm(f, "check_inversion");
  const SampledSignal forward = apply_transform(spec, f, cache);
  const SampledSignal back = apply_transform(spec.with_alpha(-spec.alpha()), forward, cache);
  Params params;
  add_spec_params(params, spec);
  return make_report("inversion", std::move(params), l2_norm(back - f) / norm, tolerance);
}

CheckReport check_theta0_reduction(std::size_t samples, std::uint64_t seed, double half_width,
                                   double tolerance) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> alpha_dist(0.2, 2.0);
  std::uniform_real_distribution<double> coord_dist(-half_width, half_width);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double a = alpha_dist(rng);
    const double p = coord_dist(rng);
    const double x = coord_dist(rng);
    const cplx reference =
        std::exp(cplx(0.0, 0.5) * ((x * x + p * p) / std::tanh(a) - 2.0 * x * p / std::sinh(a))) /
        std::sqrt(cplx(0.0, 1.0) * (2.0 * std::numbers::pi) * std::sinh(a));
    const cplx value = gfrt_kernel(a, 0.0, p, x);
    worst = std::max(worst, std::abs(value - reference) / std::abs(reference));
  }
  Params params{{"samples", static_cast<std::int64_t>(samples)},
                {"seed", static_cast<std::int64_t>(seed)},
                {"half_width", half_width}};
  return make_report("theta0_reduction", std::move(params), worst, tolerance);
}

CheckReport check_dilation_limit(double alpha, const std::vector<double>& epsilons,
                                 const Grid& grid, const AnalyticSignal& f, double threshold) {
  if (epsilons.empty()) throw DomainError("check_dilation_limit: empty epsilon list");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    const double eps = epsilons[i];
    if (!std::isfinite(eps) || !(eps < std::numbers::pi)) {
      throw DomainError("check_dilation_limit: epsilon must be finite and below pi");
    }
    if (std::abs(std::sin(eps)) <= kSingularTolerance) {
      throw DegenerateKernel("check_dilation_limit: epsilon below the kernel singularity tolerance");
    }
    if (i > 0 && !(eps < epsilons[i - 1])) {
      throw DomainError("check_dilation_limit: epsilons must be strictly decreasing");
    }
  }

  const SampledSignal input = f.on(grid);
  const double norm = nonzero_norm(input, "check_dilation_limit");
  const double shrink = std::exp(-alpha);
  const double gain = std::exp(-alpha / 2.0);
  const SampledSignal target =
      sample(grid, [&](double p) { return gain * f.eval(p * shrink); });
  const double support = effective_support(input);

  Params params{{"alpha", alpha},
                {"signal", f.name},
                {"half_width", grid.half_width()},
                {"n_points", static_cast<std::int64_t>(grid.size())}};
  std::vector<double> deviations;
  for (const double eps : epsilons) {
    const TransformSpec spec = TransformSpec::gfrt(alpha, std::numbers::pi / 2 - eps);
    if (!quadrature_resolved(spec, grid, support)) {
      std::ostringstream msg;
      msg << "check_dilation_limit: grid (L=" << grid.half_width() << ", N=" << grid.size()
          << ") cannot resolve the kernel chirp at eps=" << eps;
      throw UnresolvedGrid(msg.str());
    }
    SampledSignal out = apply_transform(spec, input);

    std::size_t peak = 0;
    for (std::size_t k = 1; k < out.size(); ++k) {
      if (std::abs(out[k]) > std::abs(out[peak])) peak = k;
    }
    if (std::abs(out[peak]) > 0.0 && std::abs(target[peak]) > 0.0) {
      const cplx rotation = std::conj(out[peak] / std::abs(out[peak])) *
                            (target[peak] / std::abs(target[peak]));
      out = rotation * out;
    }
    const double d = l2_norm(out - target) / norm;
    deviations.push_back(d);
    params.emplace_back(eps_key(eps), d);
  }

  bool monotone = true;
  for (std::size_t i = 1; i < deviations.size(); ++i) {
    if (!(deviations[i] < deviations[i - 1]) && deviations[i - 1] > kMonotoneFloor) {
      monotone = false;
    }
  }
  params.emplace_back("monotone", monotone);
  return make_report("dilation_limit", std::move(params), monotone ? deviations.back() : kInf,
                     threshold);
}

const char* to_string(SuiteGroup group) {
  switch (group) {
    case SuiteGroup::FourierReduction: return "fourier";
    case SuiteGroup::FrftAdditivity: return "frft_additivity";
    case SuiteGroup::GfrtAdditivity: return "gfrt_additivity";
    case SuiteGroup::Parseval: return "parseval";
    case SuiteGroup::EigenRelations: return "eigen";
    case SuiteGroup::OrthogonalityCompleteness: return "orthogonality";
    case SuiteGroup::SpectralAgreement: return "spectral";
    case SuiteGroup::Theta0Reduction: return "theta0";
    case SuiteGroup::DilationLimit: return "dilation";
    case SuiteGroup::Inversion: return "inversion";
    case SuiteGroup::NegativeControls: return "negative_controls";
  }
  return "?";
}

std::set<SuiteGroup> all_suite_groups() {
  return {SuiteGroup::FourierReduction, SuiteGroup::FrftAdditivity,
          SuiteGroup::GfrtAdditivity,   SuiteGroup::Parseval,
          SuiteGroup::EigenRelations,   SuiteGroup::OrthogonalityCompleteness,
          SuiteGroup::SpectralAgreement, SuiteGroup::Theta0Reduction,
          SuiteGroup::DilationLimit,    SuiteGroup::Inversion,
          SuiteGroup::NegativeControls};
}

std::optional<SuiteGroup> parse_suite_group(const std::string& name) {
  for (const SuiteGroup g : all_suite_groups()) {
    if (name == to_string(g)) return g;
  }
  return std::nullopt;
}

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig config;
  config.groups = all_suite_groups();
  return config;
}

namespace {

const std::vector<double> kFrftAngles{0.4, 0.7, 1.1};
const std::vector<double> kGfrtRapidities{0.3, 0.6};
const std::vector<double> kGfrtThetas{0.0, 0.3};
const std::vector<double> kCrossAngles{0.4, std::numbers::pi / 2, 2.0};
const std::vector<int> kEigenOrders{0, 1, 2, 5, 10, 20};

// Runs one check; a thrown library error becomes a failed report.
template <typename Fn>
void run_check(std::vector<CheckReport>& out, const std::string& name, const std::string& signal,
               Fn&& fn) {
  CheckReport report;
  try {
    report = fn();
  } catch (const Error& e) {
    report = make_report(name, {{"error", std::string(e.what())}}, kInf, 0.0);
  }
  if (!signal.empty()) report.parameters.emplace_back("signal", signal);
  out.push_back(std::move(report));
}

std::vector<double> frft_sum_angles() {
  std::vector<double> sums;
  for (double a : kFrftAngles) {
    for (double b : kFrftAngles) {
      if (a + b < std::numbers::pi) sums.push_back(a + b);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  std::vector<CheckReport> reports;
  if (config.groups.empty()) return reports;
  const auto enabled = [&](SuiteGroup g) { return config.groups.count(g) > 0; };

  const Grid grid = make_grid(config.half_width, config.n_points);
  const HermiteBasis basis = build_basis(grid, std::max(config.basis_order, 30));
  const std::vector<AnalyticSignal> signals{hermite_gaussian(0), hermite_gaussian(3), gaussian(1.0)};
  std::vector<SampledSignal> sampled;
  for (const auto& s : signals) sampled.push_back(s.on(grid));
  const AnalyticSignal gauss = gaussian();
  const SampledSignal gauss_sampled = gauss.on(grid);

  if (enabled(SuiteGroup::FourierReduction)) {
    KernelCache cache;
    for (std::size_t i = 0; i < signals.size(); ++i) {
      run_check(reports, "fourier_reduction", signals[i].name,
                [&] { return check_fourier_reduction(sampled[i], 1e-8, &cache); });
    }
  }

  if (enabled(SuiteGroup::FrftAdditivity)) {
    KernelCache cache;
    for (double a : kFrftAngles) {
      for (double b : kFrftAngles) {
        if (!(a + b < std::numbers::pi)) continue;
        for (std::size_t i = 0; i < signals.size(); ++i) {
          run_check(reports, "additivity", signals[i].name, [&] {
            return check_additivity(Family::FrFT, a, b, std::nullopt, sampled[i], 1e-5, &cache);
          });
        }
      }
    }
  }

  if (enabled(SuiteGroup::GfrtAdditivity)) {
    for (double theta : kGfrtThetas) {
      KernelCache cache;
      for (double a : kGfrtRapidities) {
        for (double b : kGfrtRapidities) {
          run_check(reports, "additivity", gauss.name, [&] {
            return check_additivity(Family::GFrT, a, b, theta, gauss_sampled, 1e-5, &cache);
          });
        }
      }
    }
  }

  if (enabled(SuiteGroup::Parseval)) {
    std::vector<double> frft_angles = kFrftAngles;
    for (double s : frft_sum_angles()) frft_angles.push_back(s);
    for (double a : frft_angles) {
      KernelCache cache;
      for (std::size_t i = 0; i < signals.size(); ++i) {
        run_check(reports, "parseval", signals[i].name,
                  [&] { return check_parseval(TransformSpec::frft(a), sampled[i], 1e-6, &cache); });
      }
    }
    for (double theta : kGfrtThetas) {
      for (double a : {0.3, 0.6, 0.9, 1.2}) {
        run_check(reports, "parseval", gauss.name, [&] {
          return check_parseval(TransformSpec::gfrt(a, theta), gauss_sampled, 1e-6);
        });
      }
    }
  }

  if (enabled(SuiteGroup::EigenRelations)) {
    for (double a : kCrossAngles) {
      KernelCache cache;
      const TransformSpec spec = TransformSpec::frft(a);
      for (int m : kEigenOrders) {
        run_check(reports, "eigen", "", [&] { return check_eigen(spec, m, basis, 1e-5, &cache); });
        run_check(reports, "eigenvalue_phase", "", [&] {
          const cplx phase = eigenvalue_phase(spec, m);
          const cplx expected = std::exp(cplx(0.0, -static_cast<double>(m) * a));
          return make_report("eigenvalue_phase",
                             {{"alpha", a}, {"m", static_cast<std::int64_t>(m)}},
                             std::abs(phase - expected), 1e-15);
        });
      }
    }
  }

  if (enabled(SuiteGroup::OrthogonalityCompleteness)) {
    run_check(reports, "orthogonality", "", [&] { return check_orthogonality(basis, 30, 1e-8); });
    run_check(reports, "completeness", signals[2].name, [&] {
      return check_completeness(basis, sampled[2], config.basis_order, 1e-6);
    });
  }

  if (enabled(SuiteGroup::SpectralAgreement)) {
    for (double a : kCrossAngles) {
      KernelCache cache;
      for (std::size_t i = 0; i < signals.size(); ++i) {
        run_check(reports, "spectral_agreement", signals[i].name, [&] {
          return check_spectral_agreement(TransformSpec::frft(a), basis, sampled[i],
                                          config.basis_order, 1e-5, &cache);
        });
      }
    }
  }

  if (enabled(SuiteGroup::Theta0Reduction)) {
    run_check(reports, "theta0_reduction", "", [&] { return check_theta0_reduction(); });
  }

  if (enabled(SuiteGroup::DilationLimit)) {
    run_check(reports, "dilation_limit", "", [&] {
      const Grid fine = make_grid(config.dilation_half_width, config.dilation_points);
      return check_dilation_limit(0.5, {0.2, 0.1, 0.05}, fine, gauss, config.dilation_threshold);
    });
  }

  if (enabled(SuiteGroup::Inversion)) {
    for (double a : {0.4, 1.1}) {
      for (std::size_t i = 0; i < signals.size(); ++i) {
        run_check(reports, "inversion", signals[i].name,
                  [&] { return check_inversion(TransformSpec::frft(a), sampled[i]); });
      }
    }
    for (double a : kGfrtRapidities) {
      for (std::size_t i = 0; i < signals.size(); ++i) {
        run_check(reports, "inversion", signals[i].name,
                  [&] { return check_inversion(TransformSpec::gfrt(a, 0.0), sampled[i]); });
      }
    }
  }

  if (enabled(SuiteGroup::NegativeControls)) {
    const std::size_t first = reports.size();
    const Grid truncated = make_grid(config.negative_control_half_width, config.n_points);
    const HermiteBasis narrow = build_basis(truncated, std::max(config.basis_order, 30));
    run_check(reports, "orthogonality", "", [&] { return check_orthogonality(narrow, 30, 1e-8); });
    run_check(reports, "completeness", signals[2].name, [&] {
      return check_completeness(narrow, signals[2].on(truncated), config.basis_order, 1e-6);
    });
    for (std::size_t i = first; i < reports.size(); ++i) {
      reports[i].parameters.emplace_back("negative_control", true);
    }
  }

  return reports;
}

bool suite_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) {
    return is_negative_control(r) ? !r.passed : r.passed;
  });
}

}  // namespace frt
