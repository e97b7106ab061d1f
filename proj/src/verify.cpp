// SPDX-License-Identifier: Apache-2.0

#include "wmono/verify.hpp"

#include "wmono/convexroof.hpp"
#include "wmono/measures.hpp"
#include "wmono/monogamy.hpp"
#include "wmono/rng.hpp"
#include "wmono/wclass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wmono::cli {

double RunConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

void RunConfig::validate() const {
  if (budget < 100) {
    std::ostringstream os;
    os << "run config: budget " << budget << " below the minimum of 100";
    throw std::domain_error(os.str());
  }
}

namespace {

constexpr int kCorpusSize = 500;
constexpr int kSubsetsPerState = 5;
constexpr int kAlphaCount = 20;
constexpr int kDecompositionsPerPair = 20;
constexpr int kOptimizeSpotChecks = 50;

int corpus_n(int k) { return 3 + (k % 4); }  // 3..6 qubits

wclass::WClassParams corpus_state(std::uint64_t seed, int k) {
  return wclass::sample_random(rng::derive_seed(seed, static_cast<std::uint64_t>(k)),
                               corpus_n(k));
}

/// Non-empty random subset of {2..n}, uniform over the 2^(n-1)-1 choices.
std::vector<int> random_partners(std::mt19937_64& gen, int n) {
  const std::uint64_t cells = (std::uint64_t{1} << (n - 1)) - 1;
  const std::uint64_t mask = 1 + gen() % cells;
  std::vector<int> out;
  for (int i = 2; i <= n; ++i) {
    if (mask & (std::uint64_t{1} << (i - 2))) out.push_back(i);
  }
  return out;
}

std::vector<double> window_alphas() {
  const double lo = measures::two_qubit_alpha_min();
  const double hi = measures::qubit_qudit_alpha_max();
  std::vector<double> alphas(kAlphaCount);
  for (int t = 0; t < kAlphaCount; ++t) {
    alphas[static_cast<std::size_t>(t)] = lo + t * (hi - lo) / (kAlphaCount - 1);
  }
  return alphas;
}

void track_min(SuiteResult& r, double margin, double tol) {
  r.checks += 1;
  r.worst = std::min(r.worst, margin);
  if (margin < tol) r.failures += 1;
}

SuiteResult run_lemma1(const RunConfig& config) {
  SuiteResult result;
  result.name = "lemma1";
  result.worst = 0.0;
  result.worst_kind = "max deviation";
  const double avg_tol = config.tol("lemma1_avg", 1e-9);
  const double gap_tol = config.tol("optimize_gap", 1e-6);

  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    for (int i = 2; i <= params.n; ++i) {
      const double analytic = wclass::pair_cren(params, i);
      const lin::DensityMatrix rho = wclass::reduced_pair(params, i);
      const int rank = convexroof::numerical_rank(rho);
      std::mt19937_64 gen(rng::derive_seed(config.seed,
                                           0x10000000ULL + 1000ULL * static_cast<std::uint64_t>(k) +
                                               static_cast<std::uint64_t>(i)));
      for (int d = 0; d < kDecompositionsPerPair; ++d) {
        const int rows = rank + (d % 5);  // K in {rank .. rank+4}
        const auto u = convexroof::random_mixing_matrix(gen, rows, rank);
        const double avg = convexroof::average_entanglement(
            convexroof::hjw_ensemble(rho, u), lin::QubitSubset{1},
            measures::Measure::negativity);
        const double dev = std::abs(avg - analytic);
        result.checks += 1;
        result.worst = std::max(result.worst, dev);
        if (dev > avg_tol) result.failures += 1;
      }
    }
  }

  // Roof-optimization spot checks: by the constant-decomposition property the
  // min and max must collapse onto the analytic value.
  for (int t = 0; t < kOptimizeSpotChecks; ++t) {
    const int k = t * (kCorpusSize / kOptimizeSpotChecks);
    const wclass::WClassParams params = corpus_state(config.seed, k);
    std::mt19937_64 gen(rng::derive_seed(config.seed, 0x20000000ULL + static_cast<std::uint64_t>(t)));
    std::vector<int> partners = random_partners(gen, params.n);
    if (partners.size() > 2) partners.resize(2);  // keep member dimension small
    std::vector<int> s;
    s.push_back(1);
    s.insert(s.end(), partners.begin(), partners.end());
    const lin::QubitSubset subset{std::vector<int>(s)};
    const double analytic = wclass::one_vs_rest_cren(params, subset);
    const lin::DensityMatrix rho = wclass::reduced_subset(params, subset);
    const auto lo = convexroof::optimize(rho, lin::QubitSubset{1}, measures::Measure::negativity,
                                         convexroof::Direction::minimize, config.budget,
                                         rng::derive_seed(config.seed, 0x30000000ULL + static_cast<std::uint64_t>(t)));
    const auto hi = convexroof::optimize(rho, lin::QubitSubset{1}, measures::Measure::negativity,
                                         convexroof::Direction::maximize, config.budget,
                                         rng::derive_seed(config.seed, 0x40000000ULL + static_cast<std::uint64_t>(t)));
    const double dev = std::max({std::abs(lo.value - analytic), std::abs(hi.value - analytic),
                                 hi.value - lo.value});
    result.checks += 1;
    result.worst = std::max(result.worst, dev);
    if (dev > gap_tol) result.failures += 1;
  }
  return result;
}

SuiteResult run_thm1(const RunConfig& config) {
  SuiteResult result;
  result.name = "thm1";
  result.worst = std::numeric_limits<double>::infinity();
  result.worst_kind = "min margin";
  const double tol = config.tol("margin", -1e-10);
  const double xs[] = {2.0, 2.5, 3.0, 5.0, 10.0};
  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    std::mt19937_64 gen(rng::derive_seed(config.seed, 0x50000000ULL + static_cast<std::uint64_t>(k)));
    for (int t = 0; t < kSubsetsPerState; ++t) {
      const lin::QubitSubset j{random_partners(gen, params.n)};
      for (double x : xs) {
        const auto b = monogamy::crenoa_lower_bound(params, j, x);
        track_min(result, b.report.margin, tol);
      }
    }
  }
  return result;
}

SuiteResult run_thm2(const RunConfig& config) {
  SuiteResult result;
  result.name = "thm2";
  result.worst = std::numeric_limits<double>::infinity();
  result.worst_kind = "min margin";
  const double tol = config.tol("strict_margin", 1e-10);
  const double ys[] = {-5.0, -2.0, -1.0, -0.1, 0.0};
  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    std::mt19937_64 gen(rng::derive_seed(config.seed, 0x60000000ULL + static_cast<std::uint64_t>(k)));
    for (int t = 0; t < kSubsetsPerState; ++t) {
      const std::vector<int> partners = random_partners(gen, params.n);
      const bool nonvanishing = std::all_of(partners.begin(), partners.end(), [&](int i) {
        return wclass::pair_cren(params, i) > 1e-9;
      });
      if (!nonvanishing) {
        result.skipped += 1;
        continue;
      }
      const lin::QubitSubset j{std::vector<int>(partners)};
      for (double y : ys) {
        const auto rep = monogamy::crenoa_upper_check(params, j, y);
        result.checks += 1;
        result.worst = std::min(result.worst, rep.margin);
        if (!(rep.margin > tol)) result.failures += 1;
      }
    }
  }
  return result;
}

SuiteResult run_thm3(const RunConfig& config) {
  SuiteResult result;
  result.name = "thm3";
  result.worst = std::numeric_limits<double>::infinity();
  result.worst_kind = "min margin";
  const double tol = config.tol("margin", -1e-10);
  const auto alphas = window_alphas();
  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    for (double a : alphas) {
      const auto rep = monogamy::ealpha_sum_upper(params, measures::RenyiOrder{a});
      track_min(result, rep.margin, tol);
    }
  }
  return result;
}

SuiteResult run_thm4(const RunConfig& config) {
  SuiteResult result;
  result.name = "thm4";
  result.worst = std::numeric_limits<double>::infinity();
  result.worst_kind = "min margin";
  const double tol = config.tol("margin", -1e-10);
  const auto alphas = window_alphas();
  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    std::mt19937_64 gen(rng::derive_seed(config.seed, 0x70000000ULL + static_cast<std::uint64_t>(k)));
    for (int t = 0; t < kSubsetsPerState; ++t) {
      std::vector<int> s;
      s.push_back(1);
      const std::vector<int> partners = random_partners(gen, params.n);
      s.insert(s.end(), partners.begin(), partners.end());
      const lin::QubitSubset subset{std::vector<int>(s)};
      for (double a : alphas) {
        const auto b = monogamy::sre_upper_bound(params, subset, measures::RenyiOrder{a});
        track_min(result, b.report.margin, tol);
      }
    }
  }
  return result;
}

SuiteResult run_eq1(const RunConfig& config) {
  SuiteResult result;
  result.name = "eq1";
  result.worst = std::numeric_limits<double>::infinity();
  result.worst_kind = "min margin";
  const double eq_tol = config.tol("eq1_equality", 1e-10);
  const double tol = config.tol("margin", -1e-10);
  const double xs[] = {2.1, 2.5, 3.0, 5.0, 7.0, 10.0};
  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    const auto at2 = monogamy::cren_power_monogamy_check(params, 2.0);
    result.checks += 1;
    result.worst = std::min(result.worst, -std::abs(at2.margin));
    if (std::abs(at2.margin) > eq_tol) result.failures += 1;
    for (double x : xs) {
      const auto rep = monogamy::cren_power_monogamy_check(params, x);
      track_min(result, rep.margin, tol);
    }
  }
  return result;
}

SuiteResult run_eq3(const RunConfig& config) {
  SuiteResult result;
  result.name = "eq3";
  result.worst = std::numeric_limits<double>::infinity();
  result.worst_kind = "min margin";
  const double tol = config.tol("margin", -1e-10);
  const auto alphas = window_alphas();
  for (int k = 0; k < kCorpusSize; ++k) {
    const wclass::WClassParams params = corpus_state(config.seed, k);
    for (double a : alphas) {
      const auto rep = monogamy::sre_lower_check(params, measures::RenyiOrder{a});
      track_min(result, rep.margin, tol);
    }
  }
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma1", "thm1", "thm2", "thm3",
                                                 "thm4",   "eq1",  "eq3"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
  config.validate();
  if (name == "lemma1") return run_lemma1(config);
  if (name == "thm1") return run_thm1(config);
  if (name == "thm2") return run_thm2(config);
  if (name == "thm3") return run_thm3(config);
  if (name == "thm4") return run_thm4(config);
  if (name == "eq1") return run_eq1(config);
  if (name == "eq3") return run_eq3(config);
  throw std::domain_error("unknown verification suite '" + name + "'");
}

}  // namespace wmono::cli
