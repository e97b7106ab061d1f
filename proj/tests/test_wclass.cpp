// SPDX-License-Identifier: Apache-2.0

#include "wmono/wclass.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "wmono/measures.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace wmono;
using lin::Complex;
using lin::Matrix;
using lin::Vector;

namespace {

// Independent construction of the unnormalized in-subset vector
// a |0..0> + sum_{i in s} b_i |excite position of i>.
Vector in_subset_vector(const wclass::WClassParams& params, const std::vector<int>& s) {
  const int m = static_cast<int>(s.size());
  Vector x = Vector::Zero(1 << m);
  x(0) = params.a;
  for (int pos = 0; pos < m; ++pos) {
    x(1 << (m - 1 - pos)) = params.b[static_cast<std::size_t>(s[static_cast<std::size_t>(pos)] - 1)];
  }
  return x;
}

}  // namespace

TEST_CASE("the built-in example state has the advertised coefficients") {
  const wclass::WClassParams p = wclass::example_state();
  REQUIRE(p.n == 5);
  CHECK(std::abs(p.a - Complex(1.0 / std::sqrt(10.0), 0.0)) <= 1e-15);
  CHECK(std::abs(p.b[0] - Complex(1.0 / std::sqrt(15.0), 0.0)) <= 1e-15);
  CHECK(std::abs(p.b[1] - Complex(1.0 / std::sqrt(10.0), 0.0)) <= 1e-15);
  CHECK(std::abs(p.b[2] - Complex(std::sqrt(2.0 / 15.0), 0.0)) <= 1e-15);
  CHECK(std::abs(p.b[3] - Complex(std::sqrt(3.0 / 5.0), 0.0)) <= 1e-15);
  CHECK(std::abs(p.b[4]) == 0.0);
  CHECK_NOTHROW(p.validate());
  CHECK(p.b_abs2_sum() == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("parameter validation rejects malformed inputs") {
  wclass::WClassParams p = wclass::example_state();
  p.a *= 1.001;  // breaks normalization beyond 1e-9
  CHECK_THROWS_AS(p.validate(), std::domain_error);

  wclass::WClassParams q = wclass::example_state();
  q.b.pop_back();
  CHECK_THROWS_AS(q.validate(), std::domain_error);

  wclass::WClassParams r;
  r.n = 1;
  r.a = 1.0;
  r.b = {Complex(0.0, 0.0)};
  CHECK_THROWS_AS(r.validate(), std::domain_error);
}

TEST_CASE("make_wclass places b_i on the excitation of qubit i") {
  const wclass::WClassParams p = wclass::example_state();
  const lin::PureState psi = wclass::make_wclass(p);
  REQUIRE(psi.dim() == 32);

  // Qubit i is the i-th most significant bit: |e_i> has index 2^(n-i).
  CHECK(std::abs(psi.amplitudes()(0) - p.a) <= 1e-15);
  for (int i = 1; i <= 5; ++i) {
    CHECK(std::abs(psi.amplitudes()(1 << (5 - i)) - p.b[static_cast<std::size_t>(i - 1)]) <=
          1e-15);
  }
  // Everything outside the vacuum + single-excitation support vanishes.
  double leak = 0.0;
  for (int idx = 0; idx < 32; ++idx) {
    if (idx != 0 && (idx & (idx - 1)) != 0) leak += std::norm(psi.amplitudes()(idx));
    if (idx == 3) leak += std::norm(psi.amplitudes()(idx));  // double excitation
  }
  CHECK(leak == 0.0);
}

TEST_CASE("closed-form pair reduction agrees with the partial-trace route") {
  const wclass::WClassParams example = wclass::example_state();
  const lin::DensityMatrix full = lin::density_of(wclass::make_wclass(example));
  for (int i = 2; i <= 5; ++i) {
    const lin::DensityMatrix closed = wclass::reduced_pair(example, i);
    const lin::DensityMatrix traced = lin::partial_trace(full, lin::QubitSubset{1, i});
    CHECK((closed.entries() - traced.entries()).cwiseAbs().maxCoeff() <= 1e-12);
  }

  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const wclass::WClassParams p = wclass::sample_random(seed, n);
    const lin::DensityMatrix rho = lin::density_of(wclass::make_wclass(p));
    for (int i = 2; i <= n; ++i) {
      const lin::DensityMatrix closed = wclass::reduced_pair(p, i);
      const lin::DensityMatrix traced = lin::partial_trace(rho, lin::QubitSubset{1, i});
      CHECK((closed.entries() - traced.entries()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("subset reduction: dual route, rank two, and support") {
  const std::vector<std::vector<int>> subsets = {{1, 2}, {1, 3, 5}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}};
  for (std::uint64_t seed = 20; seed <= 23; ++seed) {
    const wclass::WClassParams p = wclass::sample_random(seed, 5);
    const lin::DensityMatrix rho = lin::density_of(wclass::make_wclass(p));
    for (const auto& s : subsets) {
      const lin::QubitSubset subset(s);
      const lin::DensityMatrix closed = wclass::reduced_subset(p, subset);
      const lin::DensityMatrix traced = lin::partial_trace(rho, subset);
      CHECK((closed.entries() - traced.entries()).cwiseAbs().maxCoeff() <= 1e-12);

      const lin::Spectrum spec = lin::hermitian_spectrum(closed.entries());
      for (std::size_t k = 2; k < spec.eigenvalues.size(); ++k) {
        CHECK(std::abs(spec.eigenvalues[k]) <= 1e-12);
      }

      // Support lies in span{in-subset vector, vacuum}: project out and
      // check nothing remains.
      const int dim = closed.dim();
      Matrix basis(dim, 2);
      basis.col(0) = in_subset_vector(p, s).normalized();
      Vector vac = Vector::Zero(dim);
      vac(0) = 1.0;
      vac -= basis.col(0) * (basis.col(0).adjoint() * vac)(0);
      basis.col(1) = vac.normalized();
      const Matrix proj = basis * basis.adjoint();
      const Matrix rem = closed.entries() - proj * closed.entries() * proj;
      CHECK(rem.cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("analytic pair values match the fixed example") {
  const wclass::WClassParams p = wclass::example_state();
  CHECK(wclass::pair_cren(p, 2) == doctest::Approx(0.163299316185545207).epsilon(1e-12));
  CHECK(wclass::pair_cren(p, 3) == doctest::Approx(0.188561808316412673).epsilon(1e-12));
  CHECK(wclass::pair_cren(p, 4) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(wclass::pair_cren(p, 5) == 0.0);

  CHECK(wclass::one_vs_rest_cren(p, lin::QubitSubset{1, 2, 3}) ==
        doctest::Approx(0.249443825784929426).epsilon(1e-12));
  CHECK(wclass::one_vs_rest_cren(p, lin::QubitSubset{1, 2, 3, 4}) ==
        doctest::Approx(0.471404520791031683).epsilon(1e-12));
  // b_5 = 0, so including qubit 5 changes nothing.
  CHECK(wclass::one_vs_rest_cren(p, lin::QubitSubset{1, 2, 3, 4, 5}) ==
        doctest::Approx(0.471404520791031683).epsilon(1e-12));

  // Squared pair values, used downstream as f-arguments.
  CHECK(std::pow(wclass::pair_cren(p, 2), 2) == doctest::Approx(2.0 / 75.0).epsilon(1e-12));
  CHECK(std::pow(wclass::pair_cren(p, 3), 2) == doctest::Approx(8.0 / 225.0).epsilon(1e-12));
  CHECK(std::pow(wclass::pair_cren(p, 4), 2) == doctest::Approx(12.0 / 75.0).epsilon(1e-12));
}

TEST_CASE("squared one-vs-rest value is additive over the pairs") {
  for (std::uint64_t seed = 40; seed <= 49; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const wclass::WClassParams p = wclass::sample_random(seed, n);
    std::vector<int> s{1};
    for (int i = 2; i <= n; i += (seed % 2 == 0 ? 1 : 2)) s.push_back(i);
    if (s.size() < 2) s.push_back(2);
    double pair_sq_sum = 0.0;
    for (std::size_t k = 1; k < s.size(); ++k) {
      pair_sq_sum += std::pow(wclass::pair_cren(p, s[k]), 2);
    }
    const double rest = wclass::one_vs_rest_cren(p, lin::QubitSubset(s));
    CHECK(rest * rest == doctest::Approx(pair_sq_sum).epsilon(1e-12));
  }
}

TEST_CASE("full-state negativity across 1|rest matches the analytic value") {
  // On the full (pure) state the roof construction is vacuous, so the plain
  // negativity must reproduce one_vs_rest_cren over the complete qubit set.
  const wclass::WClassParams example = wclass::example_state();
  const lin::DensityMatrix full = lin::density_of(wclass::make_wclass(example));
  const double neg = measures::negativity(full, lin::QubitSubset{1}).value;
  CHECK(neg == doctest::Approx(0.471404520791031683).epsilon(1e-10));

  for (std::uint64_t seed = 60; seed <= 67; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    const wclass::WClassParams p = wclass::sample_random(seed, n);
    std::vector<int> everyone(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) everyone[static_cast<std::size_t>(q - 1)] = q;
    const double analytic = wclass::one_vs_rest_cren(p, lin::QubitSubset(everyone));
    const lin::PureState psi = wclass::make_wclass(p);
    const double n_route =
        measures::negativity(lin::density_of(psi), lin::QubitSubset{1}).value;
    const double c_route = measures::concurrence_pure(psi, lin::QubitSubset{1}).value;
    CHECK(n_route == doctest::Approx(analytic).epsilon(1e-10));
    CHECK(c_route == doctest::Approx(analytic).epsilon(1e-10));
  }
}

TEST_CASE("mixed reductions: plain negativity never exceeds the roof value") {
  for (std::uint64_t seed = 70; seed <= 75; ++seed) {
    const wclass::WClassParams p = wclass::sample_random(seed, 4);
    for (int i = 2; i <= 4; ++i) {
      const double neg =
          measures::negativity(wclass::reduced_pair(p, i), lin::QubitSubset{1}).value;
      CHECK(neg <= wclass::pair_cren(p, i) + 1e-10);
    }
  }
}

TEST_CASE("two-qubit family edge: the pair reduction is pure") {
  wclass::WClassParams p;
  p.n = 2;
  p.a = Complex(0.6, 0.0);
  p.b = {Complex(0.0, 0.48), Complex(0.64, 0.0)};
  CHECK_NOTHROW(p.validate(1e-9));
  const lin::DensityMatrix rho = wclass::reduced_pair(p, 2);
  const double purity = (rho.entries() * rho.entries()).trace().real();
  CHECK(purity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("subset and pair arguments are validated") {
  const wclass::WClassParams p = wclass::example_state();
  CHECK_THROWS_AS(wclass::reduced_pair(p, 1), std::domain_error);
  CHECK_THROWS_AS(wclass::reduced_pair(p, 6), std::domain_error);
  CHECK_THROWS_AS(wclass::one_vs_rest_cren(p, lin::QubitSubset{2, 3}), std::domain_error);
  CHECK_THROWS_AS(wclass::one_vs_rest_cren(p, lin::QubitSubset{1}), std::domain_error);
  CHECK_THROWS_AS(wclass::reduced_subset(p, lin::QubitSubset{2, 3}), std::domain_error);
}

TEST_CASE("random sampling is deterministic and unbiased") {
  const wclass::WClassParams p1 = wclass::sample_random(123, 5);
  const wclass::WClassParams p2 = wclass::sample_random(123, 5);
  REQUIRE(p1.b.size() == p2.b.size());
  CHECK(p1.a == p2.a);
  for (std::size_t k = 0; k < p1.b.size(); ++k) CHECK(p1.b[k] == p2.b[k]);

  const wclass::WClassParams p3 = wclass::sample_random(124, 5);
  CHECK(std::abs(p1.a - p3.a) > 0.0);

  // Exact normalization, well inside the 1e-9 parameter check.
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const wclass::WClassParams q = wclass::sample_random(seed, 3 + static_cast<int>(seed % 4));
    CHECK(std::abs(std::norm(q.a) + q.b_abs2_sum() - 1.0) <= 1e-14);
  }

  // Moduli-squared are exchangeable across the n+1 slots, so E|a|^2 is
  // 1/(n+1).  n = 4: mean 0.2, sd of the sample mean about 0.00163.
  const int samples = 10000;
  double acc = 0.0;
  for (int k = 0; k < samples; ++k) {
    acc += std::norm(wclass::sample_random(static_cast<std::uint64_t>(k), 4).a);
  }
  const double mean = acc / samples;
  CHECK(std::abs(mean - 0.2) <= 3.0 * 0.00164);
}
