#pragma once

// Seeded random ensembles. Every trial draws from its own generator whose
// seed is derived by SplitMix64 mixing of (campaign seed, stream ids...), so
// trials can be evaluated in any order and still reproduce bit for bit.

#include <cstdint>
#include <initializer_list>
#include <random>

#include "hylab/schatten.hpp"

namespace hylab {

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);
/// Folds a list of stream identifiers into a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> stream);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal();

  /// d x d matrix with independent standard complex Gaussian entries.
  ComplexMatrix gaussian_matrix(Eigen::Index d);
  /// g* g + eps I with g Gaussian.
  PositiveMatrix spd_matrix(Eigen::Index d, double eps = 1e-3);
  /// Haar-distributed unitary (QR of a Gaussian matrix with phase fix).
  ComplexMatrix unitary(Eigen::Index d);

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace hylab
