#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qmono {

using Complex = std::complex<double>;

// Pure state of three d-level subsystems, |psi> = sum_{ijk} a_{ijk} |ijk>.
// Amplitudes are stored flat with the third index fastest:
//   a(i,j,k) = amplitudes[i*d*d + j*d + k].
// The same convention is used by the JSON state file format.
class PureTripartiteState {
 public:
  // Strict constructor: requires unit norm to 1e-10. For lenient ingestion
  // of user data use make_tripartite below.
  PureTripartiteState(int dim, Eigen::VectorXcd amplitudes);

  int dim() const { return dim_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amp(int i, int j, int k) const {
    return amplitudes_[(i * dim_ + j) * dim_ + k];
  }

 private:
  int dim_;
  Eigen::VectorXcd amplitudes_;
};

// Pure state of two subsystems with dimensions (d_A, d_B), stored as the
// amplitude matrix A with A(i,j) the coefficient of |i>|j>.
class BipartitePureState {
 public:
  BipartitePureState(std::pair<int, int> dims, Eigen::MatrixXcd amplitudes);

  const std::pair<int, int>& dims() const { return dims_; }
  const Eigen::MatrixXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd flattened() const;  // row-major, second index fastest

 private:
  std::pair<int, int> dims_;
  Eigen::MatrixXcd amplitudes_;
};

// Hermitian, positive semidefinite, unit-trace operator. All three
// properties are checked at construction (eigenvalues may dip to -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

// |psi> = sum_i sqrt(lambda_i) |u_i>|v_i> with lambda descending.
struct SchmidtDecomposition {
  Eigen::VectorXd coefficients;               // probabilities, descending
  std::vector<Eigen::VectorXcd> left_basis;   // orthonormal |u_i>
  std::vector<Eigen::VectorXcd> right_basis;  // orthonormal |v_i>
};

// Lenient ingestion: accepts norm within 1e-6 of one and renormalizes
// exactly. Larger drift is an error unless renormalize is set.
PureTripartiteState make_tripartite(int dim, const Eigen::VectorXcd& amplitudes,
                                    bool renormalize = false);

// Reduced density matrix over the kept parties (1-based labels from {1,2,3},
// nonempty proper subset). Kept parties are ordered ascending with the first
// kept party slowest, so keep={1,2} indexes rows by i*d + j.
DensityMatrix partial_trace(const PureTripartiteState& state,
                            const std::vector<int>& keep);

SchmidtDecomposition schmidt_decompose(const BipartitePureState& state);

// Determinant as the product of eigenvalues, with eigenvalues in
// [-1e-10, 0) clamped to zero. An eigenvalue below the floor is an error.
double psd_determinant(const DensityMatrix& rho);
double psd_determinant(const Eigen::MatrixXcd& psd);  // PSD, any trace

// Eigenvalues of a Hermitian matrix, ascending. Checks Hermiticity.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);
Eigen::VectorXd hermitian_eigenvalues(const DensityMatrix& rho);

// Amplitudes drawn i.i.d. standard complex Gaussian, then normalized.
PureTripartiteState haar_random_tripartite(int dim, std::uint64_t seed);

}  // namespace qmono
