// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace wmono::rng {

/// splitmix64 step; used to derive stable per-case seeds from (seed, index)
/// so randomized suites stay reproducible regardless of evaluation order.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x51ed2701ULL));
}

inline std::complex<double> standard_complex_gaussian(std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(gen);
  const double im = normal(gen);
  return {re, im};
}

}  // namespace wmono::rng
