// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for small multi-qubit systems: validated
// state/density types plus the handful of operations everything else is
// built from (partial trace, partial transpose, Hermitian spectra, trace
// norm).  Qubit 1 is the most-significant bit of the computational-basis
// index, i.e. qubit i contributes 2^(n-i) to the index.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wmono::lin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// 1-based, strictly increasing, non-empty subsystem indices.
struct QubitSubset {
  std::vector<int> indices;

  QubitSubset(std::initializer_list<int> idx);
  explicit QubitSubset(std::vector<int> idx);

  std::size_t size() const { return indices.size(); }
  bool contains(int q) const;

  /// Throws std::domain_error unless every index lies in [1, num_subsystems].
  void validate_against(int num_subsystems) const;
};

/// Normalized n-qubit pure state (sum of |amplitude|^2 equal to 1 within 1e-12).
class PureState {
 public:
  PureState(int num_qubits, Vector amplitudes);

  int num_qubits() const { return num_qubits_; }
  const Vector& amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

 private:
  int num_qubits_;
  Vector amplitudes_;
};

/// Density matrix over an ordered list of subsystem dimensions.  Construction
/// enforces hermiticity (1e-12 entrywise), unit trace (1e-12) and positive
/// semidefiniteness (eigenvalues >= -1e-10).
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> subsystem_dims, Matrix entries);

  const std::vector<int>& subsystem_dims() const { return dims_; }
  const Matrix& entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }

 private:
  std::vector<int> dims_;
  Matrix entries_;
};

/// Real eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
};

/// |psi><psi| with one dim-2 subsystem per qubit.
DensityMatrix density_of(const PureState& psi);

/// Trace out every subsystem not in `keep`; remaining subsystems stay in
/// their original order.  `keep` may be the full set (identity).
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);

/// Transpose the indices of the subsystems in `side`.  The result is
/// Hermitian but in general not positive, hence a raw matrix.
Matrix partial_transpose(const DensityMatrix& rho, const QubitSubset& side);

/// Eigenvalues of a Hermitian matrix, descending.  The input must be
/// Hermitian within 1e-10 entrywise; magnitudes below 1e-12 are truncated to
/// exact zeros so downstream code can treat them as probabilities.
Spectrum hermitian_spectrum(const Matrix& m);

/// Sum of singular values; for Hermitian input the sum of |eigenvalue|.
double trace_norm(const Matrix& m);

}  // namespace wmono::lin
