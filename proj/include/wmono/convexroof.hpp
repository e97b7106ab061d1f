// SPDX-License-Identifier: Apache-2.0
//
// Ensemble decompositions of low-rank density matrices and brute-force
// convex/concave-roof optimization.  Every decomposition of rho arises from
// a column-orthonormal mixing matrix applied to the scaled eigenvectors
// (the mixing-matrix form of ensemble equivalence), which is what makes a
// random-restart search over mixing matrices an exhaustive-in-the-limit
// oracle for roof quantities.

#pragma once

#include "wmono/lin.hpp"
#include "wmono/measures.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace wmono::convexroof {

/// K x r complex matrix with orthonormal columns (within 1e-10), K >= r >= 1.
struct MixingMatrix {
  lin::Matrix u;

  int rows() const { return static_cast<int>(u.rows()); }
  int cols() const { return static_cast<int>(u.cols()); }
  void validate() const;  // throws std::domain_error on shape/orthonormality
};

/// Haar-style random mixing matrix: thin QR of a standard complex Gaussian.
MixingMatrix random_mixing_matrix(std::mt19937_64& gen, int rows, int cols);

struct EnsembleMember {
  double weight;
  lin::PureState state;
};

/// Pure-state ensemble {p_h, |psi_h>} with sum p_h = 1 (within 1e-10) that
/// reconstructs its source density matrix within 1e-9.
struct Ensemble {
  std::vector<EnsembleMember> members;
};

/// Number of eigenvalues above the 1e-12 probability truncation threshold.
int numerical_rank(const lin::DensityMatrix& rho);

/// The ensemble induced by mixing matrix u on the eigen-decomposition of
/// rho: |phi_h> = sum_j u_{hj} sqrt(mu_j) |e_j>, weight p_h = <phi_h|phi_h>.
/// u must have exactly numerical_rank(rho) columns; members with weight
/// below 1e-14 are dropped and the remaining weights renormalized.
Ensemble hjw_ensemble(const lin::DensityMatrix& rho, const MixingMatrix& u);

/// sum_h p_h * measure(|psi_h>, cut); measure must be concurrence or
/// negativity (the pure-state measures an ensemble average is defined for).
double average_entanglement(const Ensemble& ensemble, const lin::QubitSubset& cut,
                            measures::Measure measure);

double reconstruction_error(const Ensemble& ensemble, const lin::DensityMatrix& rho);

enum class Direction { minimize, maximize };

struct OptimizeResult {
  double value = 0.0;
  MixingMatrix mixing;  // the matrix realizing `value`
};

/// Random-restart roof optimization: `budget` random mixing matrices with
/// row count swept over rank..rank+4, then coordinate-wise step-halving
/// refinement of the best candidate.  Deterministic given (seed, budget).
/// Requires budget >= 100 and numerical rank <= 4.
OptimizeResult optimize(const lin::DensityMatrix& rho, const lin::QubitSubset& cut,
                        measures::Measure measure, Direction direction, int budget,
                        std::uint64_t seed);

}  // namespace wmono::convexroof
