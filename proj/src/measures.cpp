#include "qmono/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

// e_0..e_d of the given values, by the stable expansion of prod(x + v_i).
// All terms are nonnegative for probability inputs, so no cancellation.
std::vector<double> elementary_symmetric(const Eigen::VectorXd& values) {
  const int d = static_cast<int>(values.size());
  std::vector<double> e(d + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < d; ++i)
    for (int k = std::min(i + 1, d); k >= 1; --k) e[k] += values[i] * e[k - 1];
  return e;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

Eigen::VectorXd schmidt_coefficients(const BipartitePureState& state) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(state.amplitudes());
  return svd.singularValues().array().square();
}

GValue g_from_product(double lambda_product, int d) {
  GValue out;
  out.g = d * std::pow(lambda_product, 1.0 / d);
  out.g_pow_d = std::pow(static_cast<double>(d), d) * lambda_product;
  return out;
}

void require_square(const BipartitePureState& state, const char* what) {
  if (state.dims().first != state.dims().second)
    throw std::invalid_argument(std::string(what) + ": state must be square (d x d)");
}

}  // namespace

MonotoneVector::MonotoneVector(int d, Eigen::VectorXd raw_values,
                               Eigen::VectorXd normalized_values)
    : dim(d), raw(std::move(raw_values)), normalized(std::move(normalized_values)) {
  if (dim < 1 || raw.size() != dim || normalized.size() != dim)
    throw std::invalid_argument("MonotoneVector: size mismatch");
  if (std::abs(raw[0] - 1.0) > tol::kUnitNorm)
    throw std::domain_error("MonotoneVector: C_1 must equal 1 for normalized input");
  // Maclaurin chain: the means (e_k/binom)^(1/k) = normalized_k / d must be
  // non-increasing in k.
  for (int k = 1; k < dim; ++k) {
    if (normalized[k] > normalized[k - 1] + dim * tol::kUnitNorm)
      throw std::domain_error("MonotoneVector: Maclaurin chain violated");
  }
}

MonotoneVector concurrence_monotones(const BipartitePureState& state) {
  require_square(state, "concurrence_monotones");
  const int d = state.dims().first;
  const Eigen::VectorXd lambda = schmidt_coefficients(state);
  const std::vector<double> e = elementary_symmetric(lambda);

  Eigen::VectorXd raw(d), normalized(d);
  for (int k = 1; k <= d; ++k) {
    raw[k - 1] = std::pow(e[k], 1.0 / k);
    normalized[k - 1] = d * std::pow(e[k] / binomial(d, k), 1.0 / k);
  }
  return MonotoneVector(d, std::move(raw), std::move(normalized));
}

GValue g_concurrence_pure(const BipartitePureState& state) {
  require_square(state, "g_concurrence_pure");
  const int d = state.dims().first;
  const Eigen::VectorXd lambda = schmidt_coefficients(state);
  double prod = 1.0;
  for (int i = 0; i < d; ++i) prod *= lambda[i];
  return g_from_product(prod, d);
}

GValue g_concurrence_marginal(const DensityMatrix& rho, int dim) {
  if (rho.dim() != dim)
    throw std::invalid_argument("g_concurrence_marginal: dimension mismatch");
  return g_from_product(psd_determinant(rho), dim);
}

SuperadditivityResult det_superadditivity_check(const Eigen::MatrixXcd& x,
                                                const Eigen::MatrixXcd& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("det_superadditivity_check: dimension mismatch");
  const double det_x = psd_determinant(x);  // rejects non-PSD input
  const double det_y = psd_determinant(y);

  // X + Y inherits eigenvalue >= 2 * kPsdFloor from the two operands, so the
  // sum gets a doubled clamp window rather than a spurious rejection.
  const Eigen::VectorXd sum_eigs = hermitian_eigenvalues(Eigen::MatrixXcd(x + y));
  double det_sum = 1.0;
  for (Eigen::Index i = 0; i < sum_eigs.size(); ++i) {
    if (sum_eigs[i] < 2.0 * tol::kPsdFloor)
      throw std::domain_error("det_superadditivity_check: X+Y eigenvalue below PSD floor");
    det_sum *= std::max(sum_eigs[i], 0.0);
  }

  SuperadditivityResult out;
  out.slack = det_sum - det_x - det_y;
  out.holds = out.slack >= tol::kPsdFloor;
  return out;
}

}  // namespace qmono
