#include "qmono/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmono {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over seed advanced by (index + 1) golden-ratio increments.
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SeededRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  have_cached_ = true;
  return radius * std::cos(angle);
}

std::complex<double> SeededRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, SeededRng& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

Eigen::MatrixXcd haar_random_isometry(int m, int r, SeededRng& rng) {
  if (m < 1 || r < 1 || r > m)
    throw std::invalid_argument("haar_random_isometry: need 1 <= r <= m");
  Eigen::MatrixXcd a = gaussian_matrix(m, r, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, r);
  // Fix the phase freedom so the distribution is Haar, not QR-convention-bound.
  const Eigen::MatrixXcd& qrm = qr.matrixQR();
  for (int j = 0; j < r; ++j) {
    const std::complex<double> rjj = qrm(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

Eigen::MatrixXcd haar_random_unitary(int n, SeededRng& rng) {
  return haar_random_isometry(n, n, rng);
}

}  // namespace qmono
