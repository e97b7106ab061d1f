// SPDX-License-Identifier: Apache-2.0

#include "wmono/commands.hpp"

#include "wmono/csv.hpp"
#include "wmono/monogamy.hpp"
#include "wmono/state_spec.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wmono::cli {

namespace {

double parse_real(const std::string& text, const char* what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
    throw std::domain_error(std::string("cannot parse ") + what + " from '" + text + "'");
  }
  return value;
}

wclass::WClassParams resolve_state(const std::optional<std::string>& spec_path) {
  return spec_path ? load_state_spec(*spec_path) : default_state();
}

std::vector<double> default_fig2_grid() {
  std::vector<double> grid;
  for (int k = 823; k <= 990; ++k) grid.push_back(k / 1000.0);
  for (int k = 1001; k <= 1302; ++k) grid.push_back(k / 1000.0);
  return grid;
}

std::string joined(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

void emit_fig2_comparison(const std::vector<monogamy::NamedCurve>& curves, std::ostream& rep) {
  const double quoted[2] = {monogamy::kQuotedMinSmall, monogamy::kQuotedMinLarge};
  int idx = 0;
  for (const auto& curve : curves) {
    if (curve.rows.size() < 2) continue;
    double best_param = curve.rows.front().first;
    double best_value = curve.rows.front().second;
    bool any_left = false;
    double at_quoted = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [p, v] : curve.rows) {
      if (p <= 0.99 + 1e-12) {
        if (!any_left || v < best_value) {
          best_value = v;
          best_param = p;
          any_left = true;
        }
      }
      if (std::abs(p - monogamy::kQuotedArgmin) < 1e-12) at_quoted = v;
    }
    const double q = (idx < 2) ? quoted[idx] : std::numeric_limits<double>::quiet_NaN();
    ++idx;
    rep << "comparison " << curve.name << ": ";
    if (any_left) {
      rep << "sweep minimum on [0.823, 0.99] is " << format_double(best_value) << " at alpha = "
          << format_double(best_param);
    } else {
      rep << "grid has no points at or below 0.99";
    }
    rep << "; quoted reference minimum " << format_double(q) << " at alpha = "
        << format_double(monogamy::kQuotedArgmin);
    if (std::isfinite(at_quoted)) {
      rep << "; sweep value at alpha = 0.971 is " << format_double(at_quoted)
          << " (difference vs quoted: " << format_double(at_quoted - q) << ")";
    } else {
      rep << "; grid does not contain alpha = 0.971";
    }
    rep << "\n";
  }
  rep << "note: each upper-bound value is nonincreasing in alpha at fixed state, so the sweep"
         " minimum over [0.823, 0.99] sits at the right edge of the grid; the quoted interior"
         " minimum is reported for comparison only and is not enforced.\n";
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw std::domain_error("grid must have the form lo:step:hi, got '" + text + "'");
  }
  const double lo = parse_real(text.substr(0, first), "grid lo");
  const double step = parse_real(text.substr(first + 1, second - first - 1), "grid step");
  const double hi = parse_real(text.substr(second + 1), "grid hi");
  if (!(step > 0.0)) {
    throw std::domain_error("grid step must be > 0");
  }
  std::vector<double> grid;
  grid.push_back(lo);
  for (int k = 1;; ++k) {
    const double p = lo + k * step;
    if (p > hi + 1e-9) break;
    grid.push_back(p);
    if (grid.size() > 2000000) throw std::domain_error("grid has too many points");
  }
  return grid;
}

int cmd_figure(const FigureArgs& args, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  try {
    config.validate();
    if (args.which != "fig1" && args.which != "fig2") {
      throw std::domain_error("figure must be fig1 or fig2, got '" + args.which + "'");
    }
    if (args.svg && config.out_path.empty()) {
      throw std::domain_error("--svg needs --out to name the plot file");
    }
    monogamy::SweepQuery query;
    query.params = resolve_state(args.spec_path);
    query.subsets = {{2, 3}, {2, 3, 4}};
    if (args.which == "fig1") {
      query.kind = monogamy::SweepQuery::Kind::fig1;
      query.grid = args.grid ? parse_grid(*args.grid) : parse_grid("2:0.1:10");
    } else {
      query.kind = monogamy::SweepQuery::Kind::fig2;
      query.grid = args.grid ? parse_grid(*args.grid) : default_fig2_grid();
    }
    const std::vector<monogamy::NamedCurve> curves = monogamy::sweep(query);

    if (config.out_path.empty()) {
      write_curves_csv(out, curves);
      if (args.which == "fig2") emit_fig2_comparison(curves, err);
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw std::domain_error("cannot open output file '" + config.out_path + "'");
      write_curves_csv(file, curves);
      if (!file) throw std::domain_error("failed writing '" + config.out_path + "'");
      out << "wrote " << config.out_path << "\n";
      if (args.svg) {
        std::string svg_path = config.out_path;
        const auto dot = svg_path.find_last_of('.');
        svg_path = (dot == std::string::npos ? svg_path : svg_path.substr(0, dot)) + ".svg";
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw std::domain_error("cannot open output file '" + svg_path + "'");
        write_curves_svg(svg, curves, args.which);
        out << "wrote " << svg_path << "\n";
      }
      if (args.which == "fig2") emit_fig2_comparison(curves, out);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  try {
    config.validate();
    std::vector<std::string> todo;
    if (suite == "all") {
      todo = suite_names();
    } else {
      todo.push_back(suite);
    }
    bool all_pass = true;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : todo) {
      const SuiteResult r = run_suite(name, config);
      all_pass = all_pass && (r.failures == 0);
      out << "suite " << r.name << ": checks=" << r.checks << " passed="
          << (r.checks - r.failures) << " failed=" << r.failures;
      if (r.skipped > 0) out << " skipped=" << r.skipped;
      out << " " << r.worst_kind << "=" << format_double(r.worst) << "\n";
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    out << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
        << elapsed.count() << " ms, seed " << config.seed << ")\n";
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_bound(const BoundArgs& args, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  try {
    config.validate();
    const wclass::WClassParams params = resolve_state(args.spec_path);
    if (args.theorem < 1 || args.theorem > 4) {
      throw std::domain_error("bound: theorem must be 1, 2, 3 or 4");
    }
    const bool needs_subset = (args.theorem == 1 || args.theorem == 2 || args.theorem == 4);
    if (needs_subset && args.subset.empty()) {
      throw std::domain_error("bound: theorems 1, 2 and 4 need --subset (partner qubits)");
    }
    if (!needs_subset && !args.subset.empty()) {
      throw std::domain_error("bound: theorem 3 addresses the full state; drop --subset");
    }

    monogamy::BoundReport report;
    std::optional<double> bound_value;
    std::string exponent_label;
    double exponent = 0.0;

    switch (args.theorem) {
      case 1: {
        if (!args.x) throw std::domain_error("bound: theorem 1 needs --x (>= 2)");
        if (args.y || args.alpha) throw std::domain_error("bound: theorem 1 takes only --x");
        const auto b = monogamy::crenoa_lower_bound(
            params, lin::QubitSubset{std::vector<int>(args.subset)}, *args.x);
        report = b.report;
        bound_value = b.bound;
        exponent_label = "x";
        exponent = *args.x;
        break;
      }
      case 2: {
        if (!args.y) throw std::domain_error("bound: theorem 2 needs --y (<= 0)");
        if (args.x || args.alpha) throw std::domain_error("bound: theorem 2 takes only --y");
        report = monogamy::crenoa_upper_check(
            params, lin::QubitSubset{std::vector<int>(args.subset)}, *args.y);
        exponent_label = "y";
        exponent = *args.y;
        break;
      }
      case 3: {
        if (!args.alpha) throw std::domain_error("bound: theorem 3 needs --alpha");
        if (args.x || args.y) throw std::domain_error("bound: theorem 3 takes only --alpha");
        report = monogamy::ealpha_sum_upper(params, measures::RenyiOrder{*args.alpha});
        exponent_label = "alpha";
        exponent = *args.alpha;
        break;
      }
      case 4: {
        if (!args.alpha) throw std::domain_error("bound: theorem 4 needs --alpha");
        if (args.x || args.y) throw std::domain_error("bound: theorem 4 takes only --alpha");
        std::vector<int> s;
        s.push_back(1);
        s.insert(s.end(), args.subset.begin(), args.subset.end());
        const auto b = monogamy::sre_upper_bound(params, lin::QubitSubset{std::vector<int>(s)},
                                                 measures::RenyiOrder{*args.alpha});
        report = b.report;
        bound_value = b.bound;
        exponent_label = "alpha";
        exponent = *args.alpha;
        break;
      }
      default:
        throw std::domain_error("bound: theorem must be 1, 2, 3 or 4");
    }

    const char* rel = (report.relation == monogamy::Relation::geq)
                          ? "lhs >= rhs"
                          : (report.relation == monogamy::Relation::leq ? "lhs <= rhs"
                                                                        : "lhs < rhs (strict)");
    out << "context     : " << report.context << "\n";
    out << "relation    : " << rel << "\n";
    out << "lhs         : " << format_double(report.lhs) << "\n";
    out << "rhs         : " << format_double(report.rhs) << "\n";
    out << "coefficient : " << format_double(report.coefficient) << "\n";
    if (bound_value) out << "bound       : " << format_double(*bound_value) << "\n";
    out << "margin      : " << format_double(report.margin) << "\n";
    out << "verdict     : " << (report.holds ? "HOLDS" : "VIOLATED") << "\n";

    out << "RESULT theorem=" << args.theorem << " subset=" << joined(args.subset) << " "
        << exponent_label << "=" << format_double(exponent) << " lhs="
        << format_double(report.lhs) << " rhs=" << format_double(report.rhs)
        << " coefficient=" << format_double(report.coefficient);
    if (bound_value) out << " bound=" << format_double(*bound_value);
    out << " margin=" << format_double(report.margin) << " holds=" << (report.holds ? 1 : 0)
        << "\n";
    return report.holds ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wmono::cli
