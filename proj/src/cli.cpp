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

#include "frt/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frt/engine.hpp"
#include "frt/errors.hpp"
#include "frt/hermite.hpp"
#include "frt/kernels.hpp"
#include "frt/signal_io.hpp"
#include "frt/verify.hpp"

namespace frt::cli {

namespace {

struct CliConfig {
  Family family = Family::FrFT;
  double alpha = 0.0;
  std::optional<double> theta;
  std::size_t grid_n = kDefaultGridPoints;
  double grid_l = kDefaultHalfWidth;
  std::string method = "quad";
  int max_order = kDefaultSpectralOrder;
  std::string input;
  std::string output;
  std::string suite = "all";
};

TransformSpec spec_from(const CliConfig& c) {
  if (c.family == Family::GFrT) {
    if (!c.theta) throw DomainError("--theta is required for --family gfrt");
    return TransformSpec::gfrt(c.alpha, *c.theta);
  }
  if (c.theta) throw DomainError("--theta only applies to --family gfrt");
  return TransformSpec::frft(c.alpha);
}

// Writes through `path`, or to `out` when the path is empty or "-".
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write " + path);
  writer(file);
  if (!file) throw Error("write failed for " + path);
}

int cmd_transform(const CliConfig& c, bool grid_given, std::ostream& out, std::ostream& err) {
  const TransformSpec spec = spec_from(c);
  if (c.method != "quad" && c.method != "spectral") {
    throw DomainError("--method must be quad or spectral");
  }
  if (c.method == "spectral" && spec.family() != Family::FrFT) {
    throw DomainError("--method spectral requires --family frft");
  }
  if (c.input.empty()) throw DomainError("--input is required");

  const SampledSignal f = read_signal(std::filesystem::path(c.input));
  if (grid_given && !(f.grid() == make_grid(c.grid_l, c.grid_n))) {
    throw GridMismatch("input grid (L=" + std::to_string(f.grid().half_width()) + ", N=" +
                       std::to_string(f.grid().size()) + ") differs from --grid-l/--grid-n");
  }

  SampledSignal result = f;
  const SingularAction action = singular_action(spec);
  if (c.method == "spectral") {
    const HermiteBasis basis = build_basis(f.grid(), c.max_order);
    result = apply_spectral(spec, basis, f, c.max_order);
  } else if (action != SingularAction::NotSingular) {
    err << "note: " << spec.describe() << " is singular; applied " << to_string(action)
        << " shortcut\n";
    result = apply_singular(action, f);
  } else {
    result = apply_quadrature(build_kernel_matrix(spec, f.grid()), f);
  }

  emit(c.output, out, [&](std::ostream& s) { write_signal(result, s); });
  const double norm = l2_norm(f);
  if (norm > 0.0) {
    std::ostringstream ratio;
    ratio.precision(17);
    ratio << l2_norm(result) / norm;
    err << "parseval ratio: " << ratio.str() << "\n";
  }
  return 0;
}

int cmd_kernel(const CliConfig& c, std::ostream& out) {
  const TransformSpec spec = spec_from(c);
  const KernelEvaluator kernel(spec);
  const Grid grid = make_grid(c.grid_l, c.grid_n);
  emit(c.output, out, [&](std::ostream& s) {
    s << "p,x,re,im\n";
    char buf[128];
    for (const double p : grid.points()) {
      for (const double x : grid.points()) {
        const cplx k = kernel(p, x);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p, x, k.real(), k.imag());
        s << buf;
      }
    }
  });
  return 0;
}

int cmd_eigen(const CliConfig& c, std::ostream& err) {
  if (c.output.empty()) throw DomainError("--output directory is required");
  const Grid grid = make_grid(c.grid_l, c.grid_n);
  const HermiteBasis basis = build_basis(grid, c.max_order);
  const std::filesystem::path dir(c.output);
  std::filesystem::create_directories(dir);
  for (int m = 0; m <= c.max_order; ++m) {
    write_signal(basis.eigenfunction(m), dir / ("f_" + std::to_string(m) + ".csv"));
  }
  err << "wrote " << c.max_order + 1 << " eigenfunctions to " << dir.string() << "\n";
  return 0;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  SuiteConfig config = SuiteConfig::defaults();
  config.half_width = c.grid_l;
  config.n_points = c.grid_n;
  config.basis_order = c.max_order;
  if (c.suite == "none") {
    config.groups.clear();
  } else if (c.suite != "all") {
    config.groups.clear();
    std::stringstream list(c.suite);
    std::string name;
    while (std::getline(list, name, ',')) {
      const auto group = parse_suite_group(name);
      if (!group) throw DomainError("unknown suite group '" + name + "'");
      config.groups.insert(*group);
    }
  }
  const auto reports = run_suite(config);
  for (const auto& r : reports) out << to_json_line(r) << "\n";
  return suite_passed(reports) ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional and generalized fractional transforms on sampled signals"};
  app.require_subcommand(1);
  CliConfig c;

  const std::map<std::string, Family> families{{"frft", Family::FrFT}, {"gfrt", Family::GFrT}};
  const auto add_spec_flags = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "frft or gfrt")
        ->transform(CLI::CheckedTransformer(families, CLI::ignore_case))
        ->option_text("frft|gfrt");
    sub->add_option("--alpha", c.alpha, "Order (radians) or rapidity")->required();
    sub->add_option("--theta", c.theta, "GFrT angle in (-pi/2, pi/2)");
  };
  const auto add_grid_flags = [&](CLI::App* sub) {
    sub->add_option("--grid-n", c.grid_n, "Grid points")->check(CLI::PositiveNumber);
    sub->add_option("--grid-l", c.grid_l, "Grid half width");
  };

  auto* transform = app.add_subcommand("transform", "Transform a signal CSV");
  add_spec_flags(transform);
  add_grid_flags(transform);
  transform->add_option("--method", c.method, "quad or spectral");
  transform->add_option("--max-order", c.max_order, "Spectral truncation order");
  transform->add_option("--input", c.input, "Input CSV (x,re,im)")->required();
  transform->add_option("--output", c.output, "Output CSV (default stdout)");

  auto* kernel = app.add_subcommand("kernel", "Dump raw kernel values as p,x,re,im");
  add_spec_flags(kernel);
  add_grid_flags(kernel);
  kernel->add_option("--output", c.output, "Output CSV (default stdout)");

  auto* eigen = app.add_subcommand("eigen", "Write FrFT eigenfunctions f_0..f_M");
  add_grid_flags(eigen);
  eigen->add_option("--max-order", c.max_order, "Highest order M");
  eigen->add_option("--output", c.output, "Output directory")->required();

  auto* verify = app.add_subcommand("verify", "Run the property suite, JSON lines to stdout");
  add_grid_flags(verify);
  verify->add_option("--max-order", c.max_order, "Spectral truncation order");
  verify->add_option("--suite", c.suite, "all, none, or a comma list of groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (transform->parsed()) {
      const bool grid_given =
          transform->count("--grid-n") > 0 || transform->count("--grid-l") > 0;
      return cmd_transform(c, grid_given, out, err);
    }
    if (kernel->parsed()) return cmd_kernel(c, out);
    if (eigen->parsed()) return cmd_eigen(c, err);
    if (verify->parsed()) return cmd_verify(c, out);
  } catch (const SingularKernel& e) {
    err << "error: singular transform (" << to_string(e.action()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace frt::cli
