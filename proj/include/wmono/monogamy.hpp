// SPDX-License-Identifier: Apache-2.0
//
// Monogamy-type entanglement bounds for generalized W-class states.  All
// inequalities are evaluated through the analytic pair / one-vs-rest CREN
// values of wclass (the closed forms that make these states tractable);
// the convexroof module provides the independent numerical route, and the
// randomized suites in verify.cpp compare the two.

#pragma once

#include "wmono/lin.hpp"
#include "wmono/measures.hpp"
#include "wmono/wclass.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace wmono::monogamy {

/// x / (2^x - 1), continued through x = 0 by its limit 1/ln 2.
double coeff(double x);

enum class Relation { geq, leq, strict_less };

/// Result of one inequality evaluation.  `margin` is signed so that
/// positive means satisfied: lhs - rhs for >=-type relations, rhs - lhs for
/// <=-type.  Non-strict relations hold when margin >= -1e-10, strict ones
/// when margin > 1e-10.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double coefficient = 0.0;
  double margin = 0.0;
  bool holds = false;
  Relation relation = Relation::geq;
  std::string context;
};

struct BoundWithReport {
  double bound = 0.0;
  BoundReport report;
};

/// [coeff(x) * sum_i c_i^x]^(1/x) — homogeneous of degree 1 in the c_i.
double power_bound(const std::vector<double>& pair_crens, double x);

/// One-vs-group CRENoA lower bound (x >= 2):
///   CRENoA(A_1 | j)^x >= coeff(x) * sum_{i in j} pair_cren(i)^x.
/// `j` must not contain qubit 1.  `bound` is the rhs^(1/x); the report
/// compares both sides on the x-power scale.
BoundWithReport crenoa_lower_bound(const wclass::WClassParams& params,
                                   const lin::QubitSubset& j, double x);

/// Strict upper-bound counterpart for y <= 0:
///   CRENoA(A_1 | j)^y < coeff(y) * sum_{i in j} pair_cren(i)^y.
/// Requires every pair_cren(i) > 1e-9 (the y-th powers diverge otherwise);
/// violations name the offending qubit index.
BoundReport crenoa_upper_check(const wclass::WClassParams& params, const lin::QubitSubset& j,
                               double y);

/// Power monogamy of the CREN itself (coefficient 1, x >= 2):
///   CREN(A_1 | A_2..A_n)^x >= sum_i CREN(A_1 A_i)^x, equality at x = 2.
BoundReport cren_power_monogamy_check(const wclass::WClassParams& params, double x);

/// Squared Renyi-alpha entanglement lower bound (coefficient 1):
///   E_alpha^2(A_1 | A_2..A_n) >= sum_i E_alpha^2(A_1 A_i).
BoundReport sre_lower_check(const wclass::WClassParams& params, measures::RenyiOrder order);

/// Sum upper bound on the one-vs-rest Renyi-alpha entanglement:
///   E_alpha(A_1 | A_2..A_n) <= sum_i E_alpha(A_1 A_i).
BoundReport ealpha_sum_upper(const wclass::WClassParams& params, measures::RenyiOrder order);

/// Squared Renyi-alpha entanglement upper bound on subset s (containing 1,
/// |s| = m):  E_alpha^2(A_1 | rest of s) <= (m-1) * sum_{i} E_alpha^2(A_1 A_i).
/// `bound` is the rhs.
BoundWithReport sre_upper_bound(const wclass::WClassParams& params, const lin::QubitSubset& s,
                                measures::RenyiOrder order);

/// Display-only comparison constants emitted with the fig1/fig2 sweeps:
/// externally quoted endpoint values for the built-in example state.  The
/// sweeps report their own extrema next to these; agreement is reported,
/// never enforced.
inline constexpr double kCoaRefSmall = 0.249;     // assistance-based endpoint, A1 | A2A3
inline constexpr double kCoaRefLarge = 0.471;     // assistance-based endpoint, A1 | A2A3A4
inline constexpr double kQuotedMinSmall = 0.02334;  // quoted fig2 minimum, A1 | A2A3
inline constexpr double kQuotedMinLarge = 0.24211;  // quoted fig2 minimum, A1 | A2A3A4
inline constexpr double kQuotedArgmin = 0.971;      // quoted location of both minima

struct NamedCurve {
  std::string name;
  std::vector<std::pair<double, double>> rows;  // (parameter, value), params strictly increasing
};

struct SweepQuery {
  enum class Kind { fig1, fig2, custom };
  Kind kind = Kind::fig1;
  wclass::WClassParams params;
  std::vector<std::vector<int>> subsets;  // partner groups, qubit 1 excluded
  std::vector<double> grid;               // strictly increasing
  std::string custom_name;                // custom sweeps only
  std::function<double(double)> custom_op;
};

/// fig1: crenoa_lower_bound values over an exponent grid (x >= 2) for each
/// subset, plus the two assistance-based reference constants as single-row
/// curves.  fig2: sre_upper_bound values over a Renyi-order grid that must
/// stay inside the validity window and avoid the open band (0.99, 1.001).
/// custom: the caller-provided op over the grid.
std::vector<NamedCurve> sweep(const SweepQuery& query);

/// "A1_vs_A2A3"-style label for a partner group {2,3}.
std::string subset_label(const std::vector<int>& partners);

}  // namespace wmono::monogamy
