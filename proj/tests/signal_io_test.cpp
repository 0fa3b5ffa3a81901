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
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "frt/errors.hpp"
#include "frt/signal_io.hpp"
#include "frt/test_signals.hpp"

using namespace frt;

namespace {

std::string csv(const SampledSignal& f) {
  std::ostringstream s;
  write_signal(f, s);
  return s.str();
}

SampledSignal parse(const std::string& text) {
  std::istringstream in(text);
  return read_signal(in);
}

}  // namespace

TEST(SignalIo, GaussianRoundTripThroughFile) {
  const Grid g = make_grid(10.0, 1024);
  const SampledSignal f = cplx(0.3, -1.7) * gaussian(0.25).on(g);
  const auto path = std::filesystem::temp_directory_path() / "frt_signal_io_test.csv";
  write_signal(f, path);
  const SampledSignal back = read_signal(path);
  std::filesystem::remove(path);

  ASSERT_EQ(back.grid(), g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    EXPECT_EQ(back.grid().point(k), g.point(k));
    EXPECT_LE(std::abs(back[k] - f[k]), 1e-15 * std::abs(f[k]));
  }
}

TEST(SignalIoProperty, RandomValuesRoundTripExactly) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> n(8, 300);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g = make_grid(std::abs(u(rng)) + 1e-3, static_cast<std::size_t>(n(rng)));
    std::vector<cplx> v(g.size());
    for (auto& z : v) z = {u(rng) * 1e-7, u(rng)};
    const SampledSignal f(g, v);
    const SampledSignal back = parse(csv(f));
    ASSERT_EQ(back.grid(), g);
    for (std::size_t k = 0; k < g.size(); ++k) EXPECT_EQ(back[k], f[k]);
  }
}

TEST(SignalIo, HeaderAndPrecision) {
  const SampledSignal f = gaussian().on(make_grid(1.0, 8));
  const std::string text = csv(f);
  EXPECT_EQ(text.substr(0, 8), "x,re,im\n");
  // 17 significant digits of pi^{-1/4} e^{-1/2}.
  EXPECT_NE(text.find("-1,0.45558067201133"), std::string::npos);
}

TEST(SignalIo, ShuffledRowsRejected) {
  std::string text = "x,re,im\n";
  const double xs[] = {-1, -0.5, 0, 0.5, 1, 0.25, -0.25, 0.75, -0.75};
  for (double x : xs) text += std::to_string(x) + ",1,0\n";
  EXPECT_THROW(parse(text), ParseError);
}

TEST(SignalIo, EmptyFileRejected) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("\n\n"), ParseError);
  EXPECT_THROW(parse("x,re,im\n"), ParseError);
}

TEST(SignalIo, MalformedRowsRejected) {
  const std::string head = "x,re,im\n";
  std::string rows;
  for (int k = -4; k <= 3; ++k) rows += std::to_string(k * 0.25) + ",0,0\n";
  EXPECT_THROW(parse(head + rows + "1,abc,0\n"), ParseError);
  EXPECT_THROW(parse(head + rows + "1,0\n"), ParseError);
  EXPECT_THROW(parse(head + rows + "1,0,0,0\n"), ParseError);
  EXPECT_THROW(parse("t,re,im\n" + rows + "1,0,0\n"), ParseError);
  EXPECT_NO_THROW(parse(head + rows + "1,0,0\n"));
}

TEST(SignalIo, NanRejected) {
  std::string text = "x,re,im\n";
  for (int k = -4; k <= 4; ++k) text += std::to_string(k * 0.25) + (k == 2 ? ",nan,0\n" : ",0,0\n");
  EXPECT_THROW(parse(text), ParseError);
}

TEST(SignalIo, NonUniformSpacingRejected) {
  std::string text = "x,re,im\n";
  const double xs[] = {-1, -0.75, -0.5, -0.25, 0.01, 0.25, 0.5, 0.75, 1};
  for (double x : xs) text += std::to_string(x) + ",0,0\n";
  EXPECT_THROW(parse(text), ParseError);
}

TEST(SignalIo, AsymmetricAxisRejected) {
  std::string text = "x,re,im\n";
  for (int k = 0; k < 9; ++k) text += std::to_string(k * 0.25) + ",0,0\n";
  EXPECT_THROW(parse(text), ParseError);
}

TEST(SignalIo, MissingFile) {
  EXPECT_THROW(read_signal(std::filesystem::path("/nonexistent/frt.csv")), Error);
}
