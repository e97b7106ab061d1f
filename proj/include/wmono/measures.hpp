// SPDX-License-Identifier: Apache-2.0
//
// Entanglement measures and entropies.  Conventions:
//   - concurrence of a pure state across a cut: sqrt(2 (1 - Tr rho_cut^2))
//   - negativity: || rho^{T_cut} ||_1 - 1, clamped at 0.  With this
//     normalization concurrence and negativity coincide on 2 x d pure states.
//   - Renyi-alpha entropy: S_alpha = log2(sum lambda^alpha) / (1 - alpha),
//     continued through alpha = 1 by the von Neumann entropy.

#pragma once

#include "wmono/lin.hpp"

namespace wmono::measures {

/// Renyi order with the validity windows used by the entanglement bounds:
/// the two-qubit formula needs alpha >= (sqrt(7)-1)/2, the qubit-qudit
/// (2 x d) extension needs alpha in [(sqrt(7)-1)/2, (sqrt(13)-1)/2].
struct RenyiOrder {
  double alpha = 1.0;

  bool in_two_qubit_window() const;
  bool in_2xd_window() const;
};

/// [(sqrt(7)-1)/2, (sqrt(13)-1)/2], the 2 x d validity window.
double two_qubit_alpha_min();
double qubit_qudit_alpha_max();

enum class Measure { concurrence, negativity, cren, crenoa, renyi };

struct EntanglementValue {
  double value = 0.0;  // >= 0
  Measure measure = Measure::concurrence;
};

/// Pure-state concurrence across cut | complement.  The cut must be a
/// non-empty proper subset of the qubits.
EntanglementValue concurrence_pure(const lin::PureState& psi, const lin::QubitSubset& cut);

/// Negativity across cut | complement, clamped at 0.
EntanglementValue negativity(const lin::DensityMatrix& rho, const lin::QubitSubset& cut);

/// Two-qubit mixed-state concurrence max(0, l1 - l2 - l3 - l4) where l_i are
/// the descending square roots of the eigenvalues of
/// rho (sy x sy) conj(rho) (sy x sy).
EntanglementValue wootters_concurrence(const lin::DensityMatrix& rho);

double renyi_entropy(const lin::Spectrum& spectrum, RenyiOrder order);
double renyi_entropy(const lin::DensityMatrix& rho, RenyiOrder order);

/// f_alpha(x) = log2( ((1-sqrt(1-x))/2)^alpha + ((1+sqrt(1-x))/2)^alpha )
///              / (1-alpha),
/// continued through alpha = 1 by the binary entropy of (1-sqrt(1-x))/2.
/// Inputs within 1e-12 outside [0, 1] are clamped; beyond that, domain error.
double f_alpha(double x, RenyiOrder order);

/// Which closed-form validity window e_alpha_pair must check.
enum class PairKind { two_qubit, qubit_qudit };

/// Renyi-alpha entanglement of a pair from its squared concurrence:
/// E_alpha = f_alpha(C^2).  Throws std::domain_error when alpha lies outside
/// the window selected by `kind`.
EntanglementValue e_alpha_pair(double c_squared, RenyiOrder order, PairKind kind);

}  // namespace wmono::measures
