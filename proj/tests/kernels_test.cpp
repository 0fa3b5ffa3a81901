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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "frt/errors.hpp"
#include "frt/kernels.hpp"

using namespace frt;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen from 50-digit mpmath evaluations of the closed forms
// (tests/oracles/oracles.py).
const cplx kFrftPiOver3(0.38058192797619831497354067356073571088906085131496,
                        -0.19731622987440866245047278869664761346591966687679);
const cplx kGfrtSample(0.42621173404805381157290521592098441217139318634968,
                       -0.19482730053175692371997021164207387567798314273018);

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(FrftKernel, QuarterTurnIsFourierKernel) {
  for (double p : {-3.0, -0.5, 0.0, 1.25, 4.0}) {
    for (double x : {-2.0, 0.0, 0.75, 3.5}) {
      const cplx fourier = std::polar(1.0 / std::sqrt(2.0 * kPi), -p * x);
      EXPECT_LE(std::abs(frft_kernel(kPi / 2, p, x) - fourier), 1e-15);
    }
  }
}

TEST(FrftKernel, OriginAtEighthTurn) {
  const cplx expected = std::sqrt(cplx(1.0, -1.0) / (2.0 * kPi));
  EXPECT_LE(rel(frft_kernel(kPi / 4, 0.0, 0.0), expected), 1e-15);
}

TEST(FrftKernel, PinnedValue) {
  EXPECT_LE(rel(frft_kernel(kPi / 3, 0.5, 1.0), kFrftPiOver3), 1e-14);
}

TEST(FrftKernel, SingularAnglesRejected) {
  for (double a : {0.0, kPi, 2 * kPi, -kPi, 5e-10}) {
    EXPECT_THROW(frft_kernel(a, 0.1, 0.2), SingularKernel) << a;
  }
  try {
    frft_kernel(kPi, 0.0, 0.0);
    FAIL();
  } catch (const SingularKernel& e) {
    EXPECT_EQ(e.action(), SingularAction::Parity);
  }
}

TEST(FrftKernelProperty, ModulusLaw) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.05, 2 * kPi - 0.05);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = angle(rng);
    if (std::abs(std::sin(a)) < 0.05) continue;
    const double expected = 1.0 / std::sqrt(2 * kPi * std::abs(std::sin(a)));
    EXPECT_NEAR(std::abs(frft_kernel(a, coord(rng), coord(rng))) / expected, 1.0, 1e-12);
  }
}

TEST(FrftKernelProperty, SymmetricInArguments) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0.05, 3.0);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = angle(rng), p = coord(rng), x = coord(rng);
    EXPECT_EQ(frft_kernel(a, p, x), frft_kernel(a, x, p));
  }
}

TEST(FrftKernelProperty, ConjugateIsInverseAngle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.05, kPi - 0.05);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = angle(rng), p = coord(rng), x = coord(rng);
    const cplx k = frft_kernel(a, p, x);
    // -a is reduced to 2pi - a, so the phase carries a rounding error
    // proportional to its own magnitude.
    const double phase = 0.5 * ((p * p + x * x) / std::abs(std::tan(a)) + 2 * std::abs(p * x / std::sin(a)));
    EXPECT_LE(rel(std::conj(k), frft_kernel(-a, p, x)), 4e-14 * (1.0 + phase));
  }
}

TEST(GfrtKernel, ThetaZeroClosedForm) {
  for (double a : {0.3, 1.0, 1.7}) {
    for (double p : {-2.0, 0.0, 0.5}) {
      for (double x : {-1.0, 0.25, 3.0}) {
        const cplx expected =
            std::exp(cplx(0, 0.5) * ((x * x + p * p) / std::tanh(a) - 2 * x * p / std::sinh(a))) /
            std::sqrt(cplx(0, 2 * kPi * std::sinh(a)));
        EXPECT_LE(rel(gfrt_kernel(a, 0.0, p, x), expected), 1e-14);
      }
    }
  }
}

TEST(GfrtKernel, OriginValue) {
  const cplx expected = 1.0 / std::sqrt(cplx(0.0, 2 * kPi * std::sinh(1.0)));
  EXPECT_LE(rel(gfrt_kernel(1.0, 0.0, 0.0, 0.0), expected), 1e-15);
}

TEST(GfrtKernel, PinnedValue) {
  EXPECT_LE(rel(gfrt_kernel(0.7, 0.3, 0.5, -0.2), kGfrtSample), 1e-14);
}

TEST(GfrtKernel, SingularAndDegenerateParameters) {
  EXPECT_THROW(gfrt_kernel(0.0, 0.3, 0.1, 0.2), SingularKernel);
  EXPECT_THROW(gfrt_kernel(1e-10, 0.0, 0.1, 0.2), SingularKernel);
  EXPECT_THROW(gfrt_kernel(0.5, kPi / 2, 0.1, 0.2), DegenerateKernel);
  EXPECT_THROW(gfrt_kernel(0.5, 2.0, 0.1, 0.2), DomainError);
  EXPECT_NO_THROW(gfrt_kernel(0.5, kPi / 2 - 0.02, 0.1, 0.2));
}

TEST(GfrtKernelProperty, ThetaAsymmetryRatio) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> rap(0.2, 2.0);
  std::uniform_real_distribution<double> tilt(-1.2, 1.2);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = rap(rng), t = tilt(rng), p = coord(rng), x = coord(rng);
    const cplx ratio = gfrt_kernel(a, t, p, x) / gfrt_kernel(a, t, x, p);
    const cplx expected = std::polar(1.0, (x * x - p * p) * std::tan(t));
    EXPECT_LE(std::abs(ratio - expected), 1e-12);
  }
}

TEST(GfrtKernelProperty, ThetaZeroSymmetricAndConjugateInverse) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> rap(0.2, 2.0);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = rap(rng), p = coord(rng), x = coord(rng);
    EXPECT_EQ(gfrt_kernel(a, 0.0, p, x), gfrt_kernel(a, 0.0, x, p));
    EXPECT_LE(rel(std::conj(gfrt_kernel(a, 0.0, p, x)), gfrt_kernel(-a, 0.0, p, x)), 1e-12);
  }
}

TEST(GfrtKernelProperty, ModulusLaw) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> rap(0.2, 2.0);
  std::uniform_real_distribution<double> tilt(-1.2, 1.2);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = rap(rng), t = tilt(rng);
    const double expected = 1.0 / std::sqrt(2 * kPi * std::cos(t) * std::sinh(a));
    EXPECT_NEAR(std::abs(gfrt_kernel(a, t, coord(rng), coord(rng))) / expected, 1.0, 1e-12);
  }
}

TEST(SingularAction, Classification) {
  EXPECT_EQ(singular_action(TransformSpec::frft(0.0)), SingularAction::Identity);
  EXPECT_EQ(singular_action(TransformSpec::frft(2 * kPi)), SingularAction::Identity);
  EXPECT_EQ(singular_action(TransformSpec::frft(-4 * kPi)), SingularAction::Identity);
  EXPECT_EQ(singular_action(TransformSpec::frft(kPi)), SingularAction::Parity);
  EXPECT_EQ(singular_action(TransformSpec::frft(-kPi)), SingularAction::Parity);
  EXPECT_EQ(singular_action(TransformSpec::frft(3 * kPi + 5e-10)), SingularAction::Parity);
  EXPECT_EQ(singular_action(TransformSpec::frft(kPi + 1e-6)), SingularAction::NotSingular);
  EXPECT_EQ(singular_action(TransformSpec::frft(1.0)), SingularAction::NotSingular);
  EXPECT_EQ(singular_action(TransformSpec::gfrt(0.0, 0.3)), SingularAction::Identity);
  EXPECT_EQ(singular_action(TransformSpec::gfrt(0.5, 0.3)), SingularAction::NotSingular);
}

TEST(TransformSpec, Reduction) {
  EXPECT_NEAR(TransformSpec::frft(-0.4).reduced_alpha(), 2 * kPi - 0.4, 1e-15);
  EXPECT_NEAR(TransformSpec::frft(7.0).reduced_alpha(), 7.0 - 2 * kPi, 1e-15);
  EXPECT_EQ(TransformSpec::gfrt(-0.4, 0.1).reduced_alpha(), -0.4);
  EXPECT_THROW(TransformSpec::frft(std::nan("")), DomainError);
}

TEST(KernelEvaluator, ChirpCoefficients) {
  const KernelEvaluator frft(TransformSpec::frft(0.4));
  EXPECT_NEAR(frft.chirp_x(), 1.0 / std::tan(0.4), 1e-14);
  EXPECT_NEAR(frft.cross(), 1.0 / std::sin(0.4), 1e-14);
  const KernelEvaluator gfrt(TransformSpec::gfrt(0.5, 0.3));
  EXPECT_NEAR(gfrt.chirp_x(), 1.0 / (std::tanh(0.5) * std::cos(0.3)) + std::tan(0.3), 1e-14);
  EXPECT_NEAR(gfrt.cross(), 1.0 / (std::sinh(0.5) * std::cos(0.3)), 1e-14);
}
