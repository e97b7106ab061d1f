// SPDX-License-Identifier: Apache-2.0

#include "wmono/wclass.hpp"

#include "wmono/rng.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace wmono::wclass {

using lin::Complex;
using lin::Matrix;
using lin::Vector;

void WClassParams::validate(double tol) const {
  if (n < 2) throw std::domain_error("WClassParams: n must be >= 2");
  if (b.size() != static_cast<std::size_t>(n)) {
    std::ostringstream os;
    os << "WClassParams: expected " << n << " excitation amplitudes, got " << b.size();
    throw std::domain_error(os.str());
  }
  const double total = std::norm(a) + b_abs2_sum();
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream os;
    os << "WClassParams: |a|^2 + sum|b_i|^2 = " << total << " deviates from 1 beyond " << tol;
    throw std::domain_error(os.str());
  }
}

double WClassParams::b_abs2_sum() const {
  double s = 0.0;
  for (const Complex& v : b) s += std::norm(v);
  return s;
}

WClassParams example_state() {
  WClassParams p;
  p.n = 5;
  p.a = Complex(1.0 / std::sqrt(10.0), 0.0);
  p.b = {Complex(1.0 / std::sqrt(15.0), 0.0), Complex(1.0 / std::sqrt(10.0), 0.0),
         Complex(std::sqrt(2.0 / 15.0), 0.0), Complex(std::sqrt(3.0 / 5.0), 0.0),
         Complex(0.0, 0.0)};
  return p;
}

lin::PureState make_wclass(const WClassParams& params) {
  params.validate(1e-9);
  const std::size_t dim = std::size_t{1} << params.n;
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim));
  amps(0) = params.a;
  for (int i = 1; i <= params.n; ++i) {
    // qubit i is the bit worth 2^(n-i)
    amps(static_cast<Eigen::Index>(std::size_t{1} << (params.n - i))) =
        params.b[static_cast<std::size_t>(i - 1)];
  }
  amps /= std::sqrt(amps.squaredNorm());
  return lin::PureState(params.n, std::move(amps));
}

lin::DensityMatrix reduced_pair(const WClassParams& params, int i) {
  params.validate(1e-9);
  if (i < 2 || i > params.n) {
    std::ostringstream os;
    os << "reduced_pair: partner index " << i << " outside [2, " << params.n << "]";
    throw std::domain_error(os.str());
  }
  double w2 = 0.0;
  for (int k = 1; k <= params.n; ++k) {
    if (k != 1 && k != i) w2 += std::norm(params.b[static_cast<std::size_t>(k - 1)]);
  }
  // Basis order |q1 qi>: 00, 01, 10, 11.
  Eigen::Vector4cd x = Eigen::Vector4cd::Zero();
  x(0) = params.a;
  x(1) = params.b[static_cast<std::size_t>(i - 1)];
  x(2) = params.b[0];
  Matrix rho = x * x.adjoint();
  rho(0, 0) += w2;
  const Complex tr = rho.trace();
  rho /= tr.real();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return lin::DensityMatrix({2, 2}, std::move(rho));
}

lin::DensityMatrix reduced_subset(const WClassParams& params, const lin::QubitSubset& s) {
  params.validate(1e-9);
  s.validate_against(params.n);
  if (!s.contains(1)) {
    throw std::domain_error("reduced_subset: subset must contain qubit 1");
  }
  const int m = static_cast<int>(s.size());
  const std::size_t dim = std::size_t{1} << m;

  double w2 = 0.0;
  for (int k = 1; k <= params.n; ++k) {
    if (!s.contains(k)) w2 += std::norm(params.b[static_cast<std::size_t>(k - 1)]);
  }
  Vector x = Vector::Zero(static_cast<Eigen::Index>(dim));
  x(0) = params.a;
  for (int pos = 0; pos < m; ++pos) {
    const int q = s.indices[static_cast<std::size_t>(pos)];
    x(static_cast<Eigen::Index>(std::size_t{1} << (m - 1 - pos))) =
        params.b[static_cast<std::size_t>(q - 1)];
  }
  Matrix rho = x * x.adjoint();
  rho(0, 0) += w2;
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return lin::DensityMatrix(std::vector<int>(static_cast<std::size_t>(m), 2), std::move(rho));
}

double pair_cren(const WClassParams& params, int i) {
  params.validate(1e-9);
  if (i < 2 || i > params.n) {
    std::ostringstream os;
    os << "pair_cren: partner index " << i << " outside [2, " << params.n << "]";
    throw std::domain_error(os.str());
  }
  return 2.0 * std::abs(params.b[0]) * std::abs(params.b[static_cast<std::size_t>(i - 1)]);
}

double one_vs_rest_cren(const WClassParams& params, const lin::QubitSubset& s) {
  params.validate(1e-9);
  s.validate_against(params.n);
  if (!s.contains(1)) {
    throw std::domain_error("one_vs_rest_cren: subset must contain qubit 1");
  }
  if (s.size() < 2) {
    throw std::domain_error("one_vs_rest_cren: subset needs at least one qubit besides 1");
  }
  double rest = 0.0;
  for (int q : s.indices) {
    if (q != 1) rest += std::norm(params.b[static_cast<std::size_t>(q - 1)]);
  }
  return 2.0 * std::abs(params.b[0]) * std::sqrt(rest);
}

WClassParams sample_random(std::uint64_t seed, int n) {
  if (n < 2) throw std::domain_error("sample_random: n must be >= 2");
  std::mt19937_64 gen(seed);
  std::vector<Complex> raw(static_cast<std::size_t>(n) + 1);
  double total = 0.0;
  for (auto& v : raw) {
    v = rng::standard_complex_gaussian(gen);
    total += std::norm(v);
  }
  const double inv = 1.0 / std::sqrt(total);
  WClassParams p;
  p.n = n;
  p.a = raw[0] * inv;
  p.b.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.b[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i) + 1] * inv;
  return p;
}

}  // namespace wmono::wclass
