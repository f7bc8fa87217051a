#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmono/measures.hpp"
#include "qmono/tensor_core.hpp"

namespace qmono {

struct RoofConfig {
  int ensemble_size = 0;  // members m, 0 means rank(rho); must stay in [r, r^2]
  int restarts = 32;
  int max_iters = 2000;
  double tol = 1e-9;  // convergence: objective gain per sweep below this
  std::uint64_t seed = 0;
};

// rho = sum_h p_h |phi_h><phi_h| with the members generated from the
// eigen-ensemble of rho by an m x r column-orthonormal mixing matrix.
struct EnsembleDecomposition {
  Eigen::VectorXd probabilities;           // p_h > 0, sums to 1
  std::vector<BipartitePureState> members;  // normalized |phi_h>
  Eigen::MatrixXcd mixing;                  // m x r, orthonormal columns

  EnsembleDecomposition(Eigen::VectorXd probabilities,
                        std::vector<BipartitePureState> members,
                        Eigen::MatrixXcd mixing);
};

struct RoofResult {
  GValue upper_bound;  // average G of best_decomposition — an upper bound on G(rho)
  EnsembleDecomposition best_decomposition;
  int restarts_used = 0;
  bool converged = false;
  int zero_g_member_count = 0;  // members with g <= 1e-9
};

// Convex-roof upper bound on the G-concurrence of rho, a mixed state on
// dims.first x dims.second (square). Any decomposition average bounds the
// infimum from above, so the result is valid regardless of convergence.
// Deterministic given config.seed.
RoofResult roof_upper_bound(const DensityMatrix& rho, std::pair<int, int> dims,
                            const RoofConfig& config = {});

// Same minimization with the C_2 monotone as the member measure; returns the
// best decomposition average. Used by the CKW contrast check.
double c2_roof_upper_bound(const DensityMatrix& rho, std::pair<int, int> dims,
                           const RoofConfig& config = {});

// Number of members of the best decomposition with g > eps. A diagnostic,
// not a guarantee.
int decomposition_profile(const RoofResult& result, double eps);

// Probability-weighted member G of a decomposition.
double average_g(const EnsembleDecomposition& decomposition);

// Operator-norm distance between sum_h p_h |phi_h><phi_h| and rho.
double reconstruction_error(const EnsembleDecomposition& decomposition,
                            const DensityMatrix& rho);

}  // namespace qmono
