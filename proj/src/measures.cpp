// SPDX-License-Identifier: Apache-2.0

#include "wmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wmono::measures {

using lin::Complex;
using lin::Matrix;

namespace {

constexpr double kAlphaLimitTol = 1e-6;   // |alpha-1| below this -> limit branch
constexpr double kProbTruncation = 1e-12; // eigenvalue -> probability truncation

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0)) {
    std::ostringstream os;
    os << who << ": Renyi order must be > 0, got " << alpha;
    throw std::domain_error(os.str());
  }
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

}  // namespace

double two_qubit_alpha_min() { return (std::sqrt(7.0) - 1.0) / 2.0; }
double qubit_qudit_alpha_max() { return (std::sqrt(13.0) - 1.0) / 2.0; }

bool RenyiOrder::in_two_qubit_window() const { return alpha >= two_qubit_alpha_min(); }

bool RenyiOrder::in_2xd_window() const {
  return alpha >= two_qubit_alpha_min() && alpha <= qubit_qudit_alpha_max();
}

EntanglementValue concurrence_pure(const lin::PureState& psi, const lin::QubitSubset& cut) {
  cut.validate_against(psi.num_qubits());
  if (static_cast<int>(cut.size()) == psi.num_qubits()) {
    throw std::domain_error("concurrence_pure: cut must be a proper subset of the qubits");
  }
  const lin::DensityMatrix reduced = lin::partial_trace(lin::density_of(psi), cut);
  const double purity = reduced.entries().squaredNorm();  // Tr rho^2 for Hermitian rho
  const double c2 = std::max(0.0, 2.0 * (1.0 - purity));
  return {std::sqrt(c2), Measure::concurrence};
}

EntanglementValue negativity(const lin::DensityMatrix& rho, const lin::QubitSubset& cut) {
  const Matrix pt = lin::partial_transpose(rho, cut);
  const double value = lin::trace_norm(pt) - 1.0;
  return {std::max(0.0, value), Measure::negativity};
}

EntanglementValue wootters_concurrence(const lin::DensityMatrix& rho) {
  if (rho.subsystem_dims() != std::vector<int>{2, 2}) {
    throw std::domain_error("wootters_concurrence: input must be a two-qubit state");
  }
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix tilde = yy * rho.entries().conjugate() * yy;

  // Eigenvalues of rho * tilde via the Hermitian form sqrt(rho) tilde sqrt(rho).
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
  if (es.info() != Eigen::Success) {
    throw std::domain_error("wootters_concurrence: eigensolver did not converge");
  }
  const Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
  const Matrix sqrt_rho =
      es.eigenvectors() * clamped.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  const Matrix herm = sqrt_rho * tilde * sqrt_rho;
  const lin::Spectrum mu = lin::hermitian_spectrum((herm + herm.adjoint()) / 2.0);

  double c = 0.0;
  for (std::size_t k = 0; k < mu.eigenvalues.size(); ++k) {
    const double lambda = std::sqrt(std::max(0.0, mu.eigenvalues[k]));
    c += (k == 0) ? lambda : -lambda;
  }
  return {std::max(0.0, c), Measure::concurrence};
}

double renyi_entropy(const lin::Spectrum& spectrum, RenyiOrder order) {
  check_alpha(order.alpha, "renyi_entropy");
  for (double v : spectrum.eigenvalues) {
    if (v < -1e-10) {
      std::ostringstream os;
      os << "renyi_entropy: eigenvalue " << v << " is negative beyond tolerance";
      throw std::domain_error(os.str());
    }
  }
  double result;
  if (std::abs(order.alpha - 1.0) < kAlphaLimitTol) {
    double s = 0.0;
    for (double v : spectrum.eigenvalues) {
      if (v > kProbTruncation) s -= v * std::log2(v);
    }
    result = s;
  } else {
    double acc = 0.0;
    for (double v : spectrum.eigenvalues) {
      if (v > kProbTruncation) acc += std::pow(v, order.alpha);
    }
    if (acc <= 0.0) {
      throw std::domain_error("renyi_entropy: spectrum has no probability mass");
    }
    result = std::log2(acc) / (1.0 - order.alpha);
  }
  // Probability truncation can leave the spectrum a hair subnormalized, which
  // shows up as entropy at the -1e-13 scale; snap that to the exact floor.
  if (result < 0.0 && result > -1e-9) result = 0.0;
  return result;
}

double renyi_entropy(const lin::DensityMatrix& rho, RenyiOrder order) {
  return renyi_entropy(lin::hermitian_spectrum(rho.entries()), order);
}

double f_alpha(double x, RenyiOrder order) {
  check_alpha(order.alpha, "f_alpha");
  if (x < -1e-12 || x > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "f_alpha: argument " << x << " outside [0, 1] beyond tolerance";
    throw std::domain_error(os.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  const double root = std::sqrt(1.0 - x);
  const double p = (1.0 - root) / 2.0;
  const double q = (1.0 + root) / 2.0;
  if (std::abs(order.alpha - 1.0) < kAlphaLimitTol) {
    return binary_entropy(p);
  }
  const double num = (p > 0.0 ? std::pow(p, order.alpha) : 0.0) + std::pow(q, order.alpha);
  return std::max(0.0, std::log2(num) / (1.0 - order.alpha));
}

EntanglementValue e_alpha_pair(double c_squared, RenyiOrder order, PairKind kind) {
  if (kind == PairKind::two_qubit && !order.in_two_qubit_window()) {
    std::ostringstream os;
    os << "e_alpha_pair: order " << order.alpha << " below the two-qubit validity threshold "
       << two_qubit_alpha_min();
    throw std::domain_error(os.str());
  }
  if (kind == PairKind::qubit_qudit && !order.in_2xd_window()) {
    std::ostringstream os;
    os << "e_alpha_pair: order " << order.alpha << " outside the qubit-qudit validity window ["
       << two_qubit_alpha_min() << ", " << qubit_qudit_alpha_max() << "]";
    throw std::domain_error(os.str());
  }
  return {f_alpha(c_squared, order), Measure::renyi};
}

}  // namespace wmono::measures
