// SPDX-License-Identifier: Apache-2.0

#include "wmono/convexroof.hpp"

#include "wmono/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wmono::convexroof {

using lin::Matrix;
using lin::Vector;

namespace {

constexpr double kWeightFloor = 1e-14;   // ensemble members below this are dropped
constexpr double kRankThreshold = 1e-12;

void check_qubit_dims(const lin::DensityMatrix& rho, const char* who) {
  for (int d : rho.subsystem_dims()) {
    if (d != 2) {
      std::ostringstream os;
      os << who << ": ensemble machinery requires qubit subsystems, got dimension " << d;
      throw std::domain_error(os.str());
    }
  }
}

/// Eigen-decomposition restricted to the numerical range: columns sqrt(mu_j) |e_j>.
struct ScaledEigenbasis {
  Matrix columns;  // dim x rank
  int rank() const { return static_cast<int>(columns.cols()); }
};

ScaledEigenbasis scaled_eigenbasis(const lin::DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
  if (es.info() != Eigen::Success) {
    throw std::domain_error("convexroof: eigensolver did not converge");
  }
  // Eigen sorts ascending; walk from the top.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = es.eigenvalues().size() - 1; j >= 0; --j) {
    if (es.eigenvalues()(j) > kRankThreshold) keep.push_back(j);
  }
  if (keep.empty()) {
    throw std::domain_error("convexroof: density matrix has no probability mass");
  }
  ScaledEigenbasis basis;
  basis.columns.resize(rho.dim(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    basis.columns.col(static_cast<Eigen::Index>(k)) =
        std::sqrt(es.eigenvalues()(keep[k])) * es.eigenvectors().col(keep[k]);
  }
  return basis;
}

int num_qubits_of(const lin::DensityMatrix& rho) {
  return static_cast<int>(rho.subsystem_dims().size());
}

double pure_measure(const lin::PureState& psi, const lin::QubitSubset& cut,
                    measures::Measure measure) {
  switch (measure) {
    case measures::Measure::concurrence:
      return measures::concurrence_pure(psi, cut).value;
    case measures::Measure::negativity:
      return measures::negativity(lin::density_of(psi), cut).value;
    default:
      throw std::domain_error(
          "average_entanglement: measure must be concurrence or negativity");
  }
}

/// Fast objective used inside optimize(): same math as hjw_ensemble +
/// average_entanglement but against a cached eigenbasis.  A unit test pins
/// the two routes together to 1e-12.
double ensemble_average(const ScaledEigenbasis& basis, const Matrix& u, int num_qubits,
                        const lin::QubitSubset& cut, measures::Measure measure) {
  const Matrix members = basis.columns * u.transpose();  // dim x K
  double acc = 0.0;
  for (Eigen::Index h = 0; h < members.cols(); ++h) {
    const double p = members.col(h).squaredNorm();
    if (p < kWeightFloor) continue;
    const Vector normalized = members.col(h) / std::sqrt(p);
    acc += p * pure_measure(lin::PureState(num_qubits, normalized), cut, measure);
  }
  return acc;
}

Matrix orthonormalize(const Matrix& a) {
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
}

}  // namespace

void MixingMatrix::validate() const {
  if (u.cols() < 1 || u.rows() < u.cols()) {
    std::ostringstream os;
    os << "MixingMatrix: need rows >= cols >= 1, got " << u.rows() << "x" << u.cols();
    throw std::domain_error(os.str());
  }
  const double defect =
      (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "MixingMatrix: column orthonormality defect " << defect << " exceeds 1e-10";
    throw std::domain_error(os.str());
  }
}

MixingMatrix random_mixing_matrix(std::mt19937_64& gen, int rows, int cols) {
  if (cols < 1 || rows < cols) {
    throw std::domain_error("random_mixing_matrix: need rows >= cols >= 1");
  }
  Matrix a(rows, cols);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      a(r, c) = rng::standard_complex_gaussian(gen);
    }
  }
  return MixingMatrix{orthonormalize(a)};
}

int numerical_rank(const lin::DensityMatrix& rho) {
  const lin::Spectrum s = lin::hermitian_spectrum(rho.entries());
  int rank = 0;
  for (double v : s.eigenvalues) {
    if (v > kRankThreshold) ++rank;
  }
  return rank;
}

Ensemble hjw_ensemble(const lin::DensityMatrix& rho, const MixingMatrix& u) {
  check_qubit_dims(rho, "hjw_ensemble");
  u.validate();
  const ScaledEigenbasis basis = scaled_eigenbasis(rho);
  if (u.cols() != basis.rank()) {
    std::ostringstream os;
    os << "hjw_ensemble: mixing matrix has " << u.cols() << " columns but the state has rank "
       << basis.rank();
    throw std::domain_error(os.str());
  }
  const int n = num_qubits_of(rho);
  const Matrix members = basis.columns * u.u.transpose();  // dim x K

  Ensemble out;
  double total = 0.0;
  for (Eigen::Index h = 0; h < members.cols(); ++h) {
    const double p = members.col(h).squaredNorm();
    if (p < kWeightFloor) continue;
    total += p;
    out.members.push_back({p, lin::PureState(n, members.col(h) / std::sqrt(p))});
  }
  for (auto& m : out.members) m.weight /= total;
  return out;
}

double average_entanglement(const Ensemble& ensemble, const lin::QubitSubset& cut,
                            measures::Measure measure) {
  double acc = 0.0;
  for (const auto& m : ensemble.members) {
    acc += m.weight * pure_measure(m.state, cut, measure);
  }
  return acc;
}

double reconstruction_error(const Ensemble& ensemble, const lin::DensityMatrix& rho) {
  Matrix sum = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& m : ensemble.members) {
    sum += m.weight * (m.state.amplitudes() * m.state.amplitudes().adjoint());
  }
  return (sum - rho.entries()).cwiseAbs().maxCoeff();
}

OptimizeResult optimize(const lin::DensityMatrix& rho, const lin::QubitSubset& cut,
                        measures::Measure measure, Direction direction, int budget,
                        std::uint64_t seed) {
  check_qubit_dims(rho, "optimize");
  if (budget < 100) {
    throw std::domain_error("optimize: budget must be at least 100");
  }
  const ScaledEigenbasis basis = scaled_eigenbasis(rho);
  const int rank = basis.rank();
  if (rank > 4) {
    std::ostringstream os;
    os << "optimize: numerical rank " << rank << " exceeds the supported maximum of 4";
    throw std::domain_error(os.str());
  }
  const int n = num_qubits_of(rho);
  const double sign = (direction == Direction::minimize) ? 1.0 : -1.0;
  auto score = [&](const Matrix& u) {
    return sign * ensemble_average(basis, u, n, cut, measure);
  };

  // Random-restart phase: row count K cycles rank..rank+4.  Strict
  // improvement keeps the lowest-index winner on ties.
  std::mt19937_64 gen(seed);
  Matrix best_raw;
  double best = 0.0;
  for (int t = 0; t < budget; ++t) {
    const int k = rank + (t % 5);
    Matrix a(k, rank);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        a(r, c) = rng::standard_complex_gaussian(gen);
      }
    }
    const double v = score(orthonormalize(a));
    if (t == 0 || v < best) {
      best = v;
      best_raw = a;
    }
  }

  // Coordinate-wise step-halving on the raw (pre-orthonormalization)
  // entries.  The floor sits at 1e-10: the roof objective has |.|-type
  // kinks at separable optima, so the attainable objective error scales
  // with the final step size.
  for (double step = 0.1; step >= 1e-10; step /= 2.0) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (Eigen::Index r = 0; r < best_raw.rows(); ++r) {
        for (Eigen::Index c = 0; c < best_raw.cols(); ++c) {
          for (int part = 0; part < 2; ++part) {
            const lin::Complex delta =
                (part == 0) ? lin::Complex(step, 0.0) : lin::Complex(0.0, step);
            for (double dirsign : {1.0, -1.0}) {
              Matrix cand = best_raw;
              cand(r, c) += dirsign * delta;
              const double v = score(orthonormalize(cand));
              if (v < best) {
                best = v;
                best_raw = cand;
                improved = true;
              }
            }
          }
        }
      }
    }
  }

  OptimizeResult result;
  result.value = sign * best;
  result.mixing = MixingMatrix{orthonormalize(best_raw)};
  return result;
}

}  // namespace wmono::convexroof
