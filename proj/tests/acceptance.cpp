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

// Acceptance run: one PASS/FAIL line per criterion on the default desk grid
// (L=10, N=1024, M=40). Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "frt/verify.hpp"

using namespace frt;

namespace {

constexpr double kCriterionSeconds = 60.0;
constexpr double kSuiteSeconds = 300.0;

struct Criterion {
  int id;
  const char* name;
  std::vector<SuiteGroup> groups;
};

double worst_residual(const std::vector<CheckReport>& reports) {
  double worst = 0.0;
  for (const auto& r : reports) {
    if (is_negative_control(r)) continue;
    if (!std::isfinite(r.residual)) return r.residual;
    worst = std::max(worst, r.residual);
  }
  return worst;
}

void print_failures(const std::vector<CheckReport>& reports, bool expect_fail) {
  for (const auto& r : reports) {
    const bool bad = (expect_fail || is_negative_control(r)) ? r.passed : !r.passed;
    if (bad) std::printf("    offending: %s\n", to_json_line(r).c_str());
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fourier reduction", {SuiteGroup::FourierReduction}},
      {2, "frft additivity", {SuiteGroup::FrftAdditivity}},
      {3, "gfrt additivity", {SuiteGroup::GfrtAdditivity}},
      {4, "parseval", {SuiteGroup::Parseval}},
      {5, "eigen relations", {SuiteGroup::EigenRelations}},
      {6, "orthogonality and completeness", {SuiteGroup::OrthogonalityCompleteness}},
      {7, "spectral/quadrature agreement", {SuiteGroup::SpectralAgreement}},
      {8, "theta=0 reduction", {SuiteGroup::Theta0Reduction}},
      {9, "dilation limit", {SuiteGroup::DilationLimit}},
      {10, "inversion", {SuiteGroup::Inversion}},
  };

  const auto suite_start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& c : criteria) {
    SuiteConfig config = SuiteConfig::defaults();
    config.groups = {c.groups.begin(), c.groups.end()};
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_suite(config);
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    const bool ok = !reports.empty() && suite_passed(reports) && secs.count() < kCriterionSeconds;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %2d %-32s checks=%-3zu worst_residual=%.3e time=%.2fs\n",
                ok ? "PASS" : "FAIL", c.id, c.name, reports.size(), worst_residual(reports),
                secs.count());
    if (!ok) print_failures(reports, false);
  }

  // Criterion 11: the truncated grid must make criterion 6 fail, and the
  // built-in negative controls must be reported as failing checks.
  {
    const auto start = std::chrono::steady_clock::now();
    SuiteConfig truncated = SuiteConfig::defaults();
    truncated.groups = {SuiteGroup::OrthogonalityCompleteness};
    truncated.half_width = 2.0;
    const auto live = run_suite(truncated);
    const bool truncated_fails = !live.empty() && !suite_passed(live) &&
                                 std::all_of(live.begin(), live.end(),
                                             [](const CheckReport& r) { return !r.passed; });

    SuiteConfig controls = SuiteConfig::defaults();
    controls.groups = {SuiteGroup::NegativeControls};
    const auto negatives = run_suite(controls);
    const bool controls_fail = negatives.size() == 2 && suite_passed(negatives);

    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    const bool ok = truncated_fails && controls_fail && secs.count() < kCriterionSeconds;
    failures += ok ? 0 : 1;
    std::printf("%s criterion %2d %-32s checks=%-3zu truncated_orthogonality=%.3e time=%.2fs\n",
                ok ? "PASS" : "FAIL", 11, "negative controls", live.size() + negatives.size(),
                live.empty() ? NAN : live.front().residual, secs.count());
    if (!ok) {
      print_failures(live, true);
      print_failures(negatives, false);
    }
  }

  const std::chrono::duration<double> total = std::chrono::steady_clock::now() - suite_start;
  const bool in_budget = total.count() < kSuiteSeconds;
  failures += in_budget ? 0 : 1;
  std::printf("%s full suite time %.2fs (budget %.0fs)\n", in_budget ? "PASS" : "FAIL", total.count(),
              kSuiteSeconds);
  std::printf("%s %d failure(s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
