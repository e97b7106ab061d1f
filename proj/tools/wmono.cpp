// SPDX-License-Identifier: Apache-2.0
//
// wmono — monogamy bounds workbench for generalized W-class states.
//
//   wmono figure fig1|fig2 [--spec file] [--grid lo:step:hi] [--out csv] [--svg]
//   wmono verify lemma1|thm1|thm2|thm3|thm4|eq1|eq3|all [--seed N] [--budget N]
//   wmono bound 1|2|3|4 --subset 2,3 (--x v | --y v | --alpha v) [--spec file]

#include "wmono/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::domain_error("bad subset entry '" + token + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw std::domain_error("subset list is empty");
  return out;
}

void apply_tolerance_overrides(wmono::cli::RunConfig& config,
                               const std::vector<std::string>& entries) {
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::domain_error("tolerance override must be name=value, got '" + entry + "'");
    }
    try {
      config.tolerances[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::domain_error("bad tolerance value in '" + entry + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monogamy bounds workbench for generalized W-class states"};
  app.require_subcommand(1);

  std::string spec_path, grid, out_path, suite, which;
  std::uint64_t seed = 0;
  int budget = 200;
  std::vector<std::string> tol_overrides;
  bool svg = false;
  int theorem = 0;
  std::string subset_text;
  double x_val = 0, y_val = 0, alpha_val = 0;

  auto* figure = app.add_subcommand("figure", "Emit a bound-curve sweep as CSV (and SVG)");
  figure->add_option("which", which, "fig1 (exponent sweep) or fig2 (Renyi-order sweep)")
      ->required();
  figure->add_option("--spec", spec_path, "state-spec JSON file");
  figure->add_option("--grid", grid, "parameter grid lo:step:hi");
  figure->add_option("--out", out_path, "CSV output path (default: stdout)");
  figure->add_option("--seed", seed, "random seed");
  figure->add_option("--budget", budget, "decomposition-search budget");
  figure->add_flag("--svg", svg, "also write an SVG plot next to --out");

  auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  verify->add_option("suite", suite, "lemma1|thm1|thm2|thm3|thm4|eq1|eq3|all")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--budget", budget, "decomposition-search budget (>= 100)");
  verify->add_option("--tol", tol_overrides, "tolerance override name=value")
      ->take_all();

  auto* bound = app.add_subcommand("bound", "Evaluate one bound for one state");
  bound->add_option("theorem", theorem, "1|2|3|4")->required();
  bound->add_option("--spec", spec_path, "state-spec JSON file");
  bound->add_option("--subset", subset_text, "partner qubits, e.g. 2,3 (qubit 1 implied)");
  auto* xopt = bound->add_option("--x", x_val, "power exponent, x >= 2");
  auto* yopt = bound->add_option("--y", y_val, "power exponent, y <= 0");
  auto* aopt = bound->add_option("--alpha", alpha_val, "Renyi order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    wmono::cli::RunConfig config;
    config.seed = seed;
    config.budget = budget;
    config.out_path = out_path;
    apply_tolerance_overrides(config, tol_overrides);

    if (figure->parsed()) {
      wmono::cli::FigureArgs args;
      args.which = which;
      if (!spec_path.empty()) args.spec_path = spec_path;
      if (!grid.empty()) args.grid = grid;
      args.svg = svg;
      return wmono::cli::cmd_figure(args, config, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      return wmono::cli::cmd_verify(suite, config, std::cout, std::cerr);
    }
    wmono::cli::BoundArgs args;
    args.theorem = theorem;
    if (!spec_path.empty()) args.spec_path = spec_path;
    if (!subset_text.empty()) args.subset = parse_subset(subset_text);
    if (xopt->count() > 0) args.x = x_val;
    if (yopt->count() > 0) args.y = y_val;
    if (aopt->count() > 0) args.alpha = alpha_val;
    return wmono::cli::cmd_bound(args, config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
