#pragma once

#include <Eigen/Dense>

#include "qmono/tensor_core.hpp"

namespace qmono {

// Concurrence monotones of a square pure state. With e_k the k-th elementary
// symmetric polynomial of the Schmidt coefficients:
//   raw        C_k = e_k^(1/k)
//   normalized C_k = d * (e_k / binom(d,k))^(1/k)
// so the maximally entangled state scores 1 in every normalized slot and the
// normalized last slot equals the G-concurrence below.
struct MonotoneVector {
  int dim = 0;
  Eigen::VectorXd raw;
  Eigen::VectorXd normalized;

  MonotoneVector(int d, Eigen::VectorXd raw_values, Eigen::VectorXd normalized_values);
};

// G-concurrence g = d * (prod lambda_i)^(1/d) together with g^d, the form the
// monogamy inequality is stated in.
struct GValue {
  double g = 0.0;
  double g_pow_d = 0.0;
};

struct SuperadditivityResult {
  double slack = 0.0;  // det(X+Y) - det(X) - det(Y)
  bool holds = false;  // slack >= -1e-10
};

MonotoneVector concurrence_monotones(const BipartitePureState& state);

GValue g_concurrence_pure(const BipartitePureState& state);

// G^d of the single-party marginal of a globally pure state:
//   g_pow_d = d^d * det(rho).
// The caller is responsible for rho actually being such a marginal.
GValue g_concurrence_marginal(const DensityMatrix& rho, int dim);

// det(X+Y) >= det(X) + det(Y) for PSD X, Y of equal dimension.
SuperadditivityResult det_superadditivity_check(const Eigen::MatrixXcd& x,
                                                const Eigen::MatrixXcd& y);

}  // namespace qmono
