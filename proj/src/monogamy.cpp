// SPDX-License-Identifier: Apache-2.0

#include "wmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wmono::monogamy {

namespace {

constexpr double kMarginTol = 1e-10;
constexpr double kGridFuzz = 1e-9;
constexpr double kExcludedBandLo = 0.99;
constexpr double kExcludedBandHi = 1.001;

void check_thm1_exponent(double x, const char* who) {
  if (!(x >= 2.0)) {
    std::ostringstream os;
    os << who << ": exponent " << x << " invalid; lower-bound checks need x >= 2";
    throw std::domain_error(os.str());
  }
}

void check_thm2_exponent(double y, const char* who) {
  if (!(y <= 0.0)) {
    std::ostringstream os;
    os << who << ": exponent " << y << " invalid; upper-bound checks need y <= 0";
    throw std::domain_error(os.str());
  }
}

void check_window(measures::RenyiOrder order, const char* who) {
  if (!order.in_2xd_window()) {
    std::ostringstream os;
    os << who << ": Renyi order " << order.alpha << " outside the validity window ["
       << measures::two_qubit_alpha_min() << ", " << measures::qubit_qudit_alpha_max() << "]";
    throw std::domain_error(os.str());
  }
}

lin::QubitSubset partners_to_group(const wclass::WClassParams& params,
                                   const lin::QubitSubset& j, const char* who) {
  params.validate(1e-9);
  j.validate_against(params.n);
  if (j.contains(1)) {
    std::ostringstream os;
    os << who << ": partner subset must not contain qubit 1";
    throw std::domain_error(os.str());
  }
  std::vector<int> with_one;
  with_one.reserve(j.size() + 1);
  with_one.push_back(1);
  with_one.insert(with_one.end(), j.indices.begin(), j.indices.end());
  return lin::QubitSubset(std::move(with_one));
}

BoundReport make_report(double lhs, double rhs, double coefficient, Relation relation,
                        std::string context) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.coefficient = coefficient;
  r.relation = relation;
  r.margin = (relation == Relation::geq) ? lhs - rhs : rhs - lhs;
  r.holds = (relation == Relation::strict_less) ? (r.margin > kMarginTol)
                                                : (r.margin >= -kMarginTol);
  r.context = std::move(context);
  return r;
}

std::vector<double> group_pair_crens(const wclass::WClassParams& params,
                                     const lin::QubitSubset& j) {
  std::vector<double> out;
  out.reserve(j.size());
  for (int i : j.indices) out.push_back(wclass::pair_cren(params, i));
  return out;
}

}  // namespace

double coeff(double x) {
  if (std::abs(x) < 1e-12) return 1.0 / std::log(2.0);
  return x / (std::exp2(x) - 1.0);
}

double power_bound(const std::vector<double>& pair_crens, double x) {
  if (pair_crens.empty()) {
    throw std::domain_error("power_bound: need at least one pair value");
  }
  double sum = 0.0;
  for (double c : pair_crens) {
    if (c < 0.0) throw std::domain_error("power_bound: pair values must be >= 0");
    sum += std::pow(c, x);
  }
  return std::pow(coeff(x) * sum, 1.0 / x);
}

BoundWithReport crenoa_lower_bound(const wclass::WClassParams& params,
                                   const lin::QubitSubset& j, double x) {
  check_thm1_exponent(x, "crenoa_lower_bound");
  const lin::QubitSubset group = partners_to_group(params, j, "crenoa_lower_bound");
  const double t = wclass::one_vs_rest_cren(params, group);
  const std::vector<double> pairs = group_pair_crens(params, j);
  double power_sum = 0.0;
  for (double c : pairs) power_sum += std::pow(c, x);

  std::ostringstream ctx;
  ctx << "one-vs-group CRENoA power lower bound, group " << subset_label(j.indices)
      << ", x = " << x;
  BoundWithReport out;
  out.report = make_report(std::pow(t, x), coeff(x) * power_sum, coeff(x), Relation::geq,
                           ctx.str());
  out.bound = power_bound(pairs, x);
  return out;
}

BoundReport crenoa_upper_check(const wclass::WClassParams& params, const lin::QubitSubset& j,
                               double y) {
  check_thm2_exponent(y, "crenoa_upper_check");
  const lin::QubitSubset group = partners_to_group(params, j, "crenoa_upper_check");
  for (int i : j.indices) {
    if (wclass::pair_cren(params, i) <= 1e-9) {
      std::ostringstream os;
      os << "crenoa_upper_check: pair CREN of (A_1, A_" << i
         << ") vanishes (<= 1e-9); negative powers are undefined for this group";
      throw std::domain_error(os.str());
    }
  }
  const double t = wclass::one_vs_rest_cren(params, group);
  double power_sum = 0.0;
  for (int i : j.indices) power_sum += std::pow(wclass::pair_cren(params, i), y);

  std::ostringstream ctx;
  ctx << "one-vs-group CRENoA power upper bound (strict), group " << subset_label(j.indices)
      << ", y = " << y;
  return make_report(std::pow(t, y), coeff(y) * power_sum, coeff(y), Relation::strict_less,
                     ctx.str());
}

BoundReport cren_power_monogamy_check(const wclass::WClassParams& params, double x) {
  check_thm1_exponent(x, "cren_power_monogamy_check");
  params.validate(1e-9);
  std::vector<int> all(static_cast<std::size_t>(params.n - 1));
  for (int i = 2; i <= params.n; ++i) all[static_cast<std::size_t>(i - 2)] = i;
  const lin::QubitSubset j{std::vector<int>(all)};
  const lin::QubitSubset group = partners_to_group(params, j, "cren_power_monogamy_check");

  const double t = wclass::one_vs_rest_cren(params, group);
  double power_sum = 0.0;
  for (int i : j.indices) power_sum += std::pow(wclass::pair_cren(params, i), x);

  std::ostringstream ctx;
  ctx << "CREN power monogamy across A_1 | rest, x = " << x;
  return make_report(std::pow(t, x), power_sum, 1.0, Relation::geq, ctx.str());
}

BoundReport sre_lower_check(const wclass::WClassParams& params, measures::RenyiOrder order) {
  check_window(order, "sre_lower_check");
  params.validate(1e-9);
  std::vector<int> all;
  for (int i = 1; i <= params.n; ++i) all.push_back(i);
  const double t = wclass::one_vs_rest_cren(params, lin::QubitSubset{std::vector<int>(all)});
  const double lhs_e = measures::f_alpha(t * t, order);
  double rhs = 0.0;
  for (int i = 2; i <= params.n; ++i) {
    const double c = wclass::pair_cren(params, i);
    const double e = measures::f_alpha(c * c, order);
    rhs += e * e;
  }
  std::ostringstream ctx;
  ctx << "squared Renyi-entanglement lower bound across A_1 | rest, alpha = " << order.alpha;
  return make_report(lhs_e * lhs_e, rhs, 1.0, Relation::geq, ctx.str());
}

BoundReport ealpha_sum_upper(const wclass::WClassParams& params, measures::RenyiOrder order) {
  check_window(order, "ealpha_sum_upper");
  params.validate(1e-9);
  std::vector<int> all;
  for (int i = 1; i <= params.n; ++i) all.push_back(i);
  const double t = wclass::one_vs_rest_cren(params, lin::QubitSubset{std::vector<int>(all)});
  const double lhs = measures::f_alpha(t * t, order);
  double rhs = 0.0;
  for (int i = 2; i <= params.n; ++i) {
    const double c = wclass::pair_cren(params, i);
    rhs += measures::f_alpha(c * c, order);
  }
  std::ostringstream ctx;
  ctx << "Renyi-entanglement sum upper bound across A_1 | rest, alpha = " << order.alpha;
  return make_report(lhs, rhs, 1.0, Relation::leq, ctx.str());
}

BoundWithReport sre_upper_bound(const wclass::WClassParams& params, const lin::QubitSubset& s,
                                measures::RenyiOrder order) {
  check_window(order, "sre_upper_bound");
  params.validate(1e-9);
  s.validate_against(params.n);
  if (!s.contains(1)) {
    throw std::domain_error("sre_upper_bound: subset must contain qubit 1");
  }
  if (s.size() < 2) {
    throw std::domain_error("sre_upper_bound: subset needs at least one qubit besides 1");
  }
  const int m = static_cast<int>(s.size());
  const double t = wclass::one_vs_rest_cren(params, s);
  const double lhs_e = measures::f_alpha(t * t, order);
  double sum = 0.0;
  std::vector<int> partners;
  for (int q : s.indices) {
    if (q == 1) continue;
    partners.push_back(q);
    const double c = wclass::pair_cren(params, q);
    const double e = measures::f_alpha(c * c, order);
    sum += e * e;
  }
  const double bound = (m - 1) * sum;

  std::ostringstream ctx;
  ctx << "squared Renyi-entanglement upper bound, group " << subset_label(partners)
      << ", alpha = " << order.alpha;
  BoundWithReport out;
  out.report = make_report(lhs_e * lhs_e, bound, static_cast<double>(m - 1), Relation::leq,
                           ctx.str());
  out.bound = bound;
  return out;
}

std::string subset_label(const std::vector<int>& partners) {
  std::ostringstream os;
  os << "A1_vs_";
  for (int q : partners) os << "A" << q;
  return os.str();
}

namespace {

void check_grid_shape(const std::vector<double>& grid, const char* who) {
  if (grid.empty()) {
    std::ostringstream os;
    os << who << ": empty parameter grid";
    throw std::domain_error(os.str());
  }
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    if (!(grid[k] < grid[k + 1])) {
      std::ostringstream os;
      os << who << ": grid must be strictly increasing";
      throw std::domain_error(os.str());
    }
  }
}

}  // namespace

std::vector<NamedCurve> sweep(const SweepQuery& query) {
  check_grid_shape(query.grid, "sweep");
  std::vector<NamedCurve> out;

  switch (query.kind) {
    case SweepQuery::Kind::fig1: {
      if (query.subsets.empty()) throw std::domain_error("sweep: fig1 needs partner subsets");
      for (const auto& partners : query.subsets) {
        NamedCurve curve;
        curve.name = "crenoa_lower_" + subset_label(partners);
        for (double x : query.grid) {
          const auto b =
              crenoa_lower_bound(query.params, lin::QubitSubset{std::vector<int>(partners)}, x);
          curve.rows.emplace_back(x, b.bound);
        }
        out.push_back(std::move(curve));
      }
      out.push_back({"coa_ref_A1_vs_A2A3", {{query.grid.front(), kCoaRefSmall}}});
      out.push_back({"coa_ref_A1_vs_A2A3A4", {{query.grid.front(), kCoaRefLarge}}});
      break;
    }
    case SweepQuery::Kind::fig2: {
      if (query.subsets.empty()) throw std::domain_error("sweep: fig2 needs partner subsets");
      for (double a : query.grid) {
        if (a > kExcludedBandLo + kGridFuzz && a < kExcludedBandHi - kGridFuzz) {
          std::ostringstream os;
          os << "sweep: grid point " << a << " lies inside the excluded band ("
             << kExcludedBandLo << ", " << kExcludedBandHi << ")";
          throw std::domain_error(os.str());
        }
      }
      for (const auto& partners : query.subsets) {
        std::vector<int> s;
        s.push_back(1);
        s.insert(s.end(), partners.begin(), partners.end());
        NamedCurve curve;
        curve.name = "sre_upper_" + subset_label(partners);
        for (double a : query.grid) {
          const auto b = sre_upper_bound(query.params, lin::QubitSubset{std::vector<int>(s)},
                                         measures::RenyiOrder{a});
          curve.rows.emplace_back(a, b.bound);
        }
        out.push_back(std::move(curve));
      }
      break;
    }
    case SweepQuery::Kind::custom: {
      if (!query.custom_op) throw std::domain_error("sweep: custom sweep without an operation");
      NamedCurve curve;
      curve.name = query.custom_name.empty() ? "custom" : query.custom_name;
      for (double p : query.grid) curve.rows.emplace_back(p, query.custom_op(p));
      out.push_back(std::move(curve));
      break;
    }
  }
  return out;
}

}  // namespace wmono::monogamy
