#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qmono {

// Mixes (seed, index) into the seed of an independent substream. Every work
// unit that needs its own randomness (sample, restart, marginal) derives its
// seed this way, so results do not depend on scheduling or parallelism.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic random stream. Uniform and normal variates are generated
// directly from mt19937_64 output so identical seeds give identical values
// on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform();                       // [0, 1)
  double normal();                        // N(0, 1), Box-Muller
  std::complex<double> complex_normal();  // re, im ~ N(0, 1) independent

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, SeededRng& rng);

// Haar-distributed n x n unitary: QR of a Gaussian matrix with the R-diagonal
// phase ambiguity fixed.
Eigen::MatrixXcd haar_random_unitary(int n, SeededRng& rng);

// Haar-distributed m x r matrix with orthonormal columns, m >= r.
Eigen::MatrixXcd haar_random_isometry(int m, int r, SeededRng& rng);

}  // namespace qmono
