// SPDX-License-Identifier: Apache-2.0
//
// Library-level entry points behind the `wmono` executable, separated from
// main() so tests can drive them directly.  Exit-code contract:
//   0 - success / all checks hold
//   1 - an inequality check failed
//   2 - usage or domain error

#pragma once

#include "wmono/verify.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wmono::cli {

struct FigureArgs {
  std::string which;                      // "fig1" | "fig2"
  std::optional<std::string> spec_path;
  std::optional<std::string> grid;        // "lo:step:hi"
  bool svg = false;
};

struct BoundArgs {
  int theorem = 0;                        // 1..4
  std::optional<std::string> spec_path;
  std::vector<int> subset;                // partner qubits, excluding 1
  std::optional<double> x;
  std::optional<double> y;
  std::optional<double> alpha;
};

/// Parse "lo:step:hi" into lo, lo+step, ... <= hi (+1e-9); always contains
/// at least lo.  Throws std::domain_error on malformed text or step <= 0.
std::vector<double> parse_grid(const std::string& text);

int cmd_figure(const FigureArgs& args, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_bound(const BoundArgs& args, const RunConfig& config, std::ostream& out,
              std::ostream& err);

}  // namespace wmono::cli
