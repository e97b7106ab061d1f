// SPDX-License-Identifier: Apache-2.0
//
// Generalized W-class states
//
//   |psi> = a |0...0> + sum_i b_i |e_i>,   |a|^2 + sum_i |b_i|^2 = 1,
//
// where |e_i> has qubit i excited and all others in |0>.  Amplitude b_i
// always belongs to the excitation of qubit i.  The closed-form reduced
// states and the analytic one-vs-one / one-vs-rest entanglement values for
// this family live here; their numerical counterparts (used as the opposite
// route of every cross-check) live in lin/ and convexroof/.

#pragma once

#include "wmono/lin.hpp"

#include <cstdint>
#include <vector>

namespace wmono::wclass {

struct WClassParams {
  int n = 0;                       // number of qubits, >= 2
  lin::Complex a;                  // vacuum amplitude
  std::vector<lin::Complex> b;     // b[i-1] excites qubit i; size n

  /// Throws std::domain_error unless n >= 2, b.size() == n and
  /// | |a|^2 + sum |b_i|^2 - 1 | <= tol.
  void validate(double tol = 1e-9) const;

  double b_abs2_sum() const;       // sum_i |b_i|^2
};

/// Built-in 5-qubit example state used as the default everywhere:
///   a = b_2 = 1/sqrt(10), b_1 = 1/sqrt(15), b_3 = sqrt(2/15),
///   b_4 = sqrt(3/5), b_5 = 0.
WClassParams example_state();

/// Full 2^n amplitude vector for the params (renormalized to machine
/// precision after the 1e-9 parameter check).
lin::PureState make_wclass(const WClassParams& params);

/// Closed-form two-qubit reduced state of qubits (1, i), i in [2, n]:
/// rho = |x><x| + |y><y| with |x> = a|00> + b_1|10> + b_i|01> and
/// |y> = sqrt(sum_{k != 1, i} |b_k|^2) |00>.
lin::DensityMatrix reduced_pair(const WClassParams& params, int i);

/// Closed-form reduced state on subset s (which must contain qubit 1):
/// rank <= 2, spanned by the in-subset W-class vector and the vacuum.
lin::DensityMatrix reduced_subset(const WClassParams& params, const lin::QubitSubset& s);

/// Analytic CREN (= CRENoA) of the pair (A_1, A_i): 2 |b_1| |b_i|.
double pair_cren(const WClassParams& params, int i);

/// Analytic CREN (= CRENoA) across the A_1 | rest-of-s cut of the reduced
/// state on s: 2 |b_1| sqrt(sum_{i in s, i != 1} |b_i|^2).  s must contain 1
/// and at least one other qubit.
double one_vs_rest_cren(const WClassParams& params, const lin::QubitSubset& s);

/// Deterministic random parameters: moduli from normalized squared standard
/// Gaussians across (a, b_1..b_n), phases uniform; renormalized exactly.
WClassParams sample_random(std::uint64_t seed, int n);

}  // namespace wmono::wclass
