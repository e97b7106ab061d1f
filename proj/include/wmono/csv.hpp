// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wmono/monogamy.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace wmono::cli {

/// Locale-independent shortest-faithful rendering at 12 significant digits.
std::string format_double(double value);

/// Header `param,curve_name,value`, LF line endings, one row per
/// (grid point, curve), curves emitted in order.  Byte-identical across runs
/// for identical inputs.
void write_curves_csv(std::ostream& out, const std::vector<monogamy::NamedCurve>& curves);

/// Minimal self-contained line plot; single-point curves become dashed
/// horizontal reference lines.
void write_curves_svg(std::ostream& out, const std::vector<monogamy::NamedCurve>& curves,
                      const std::string& title);

}  // namespace wmono::cli
