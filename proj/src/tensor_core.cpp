#include "qmono/tensor_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmono/rng.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

long long cube(int d) {
  return static_cast<long long>(d) * d * d;
}

}  // namespace

PureTripartiteState::PureTripartiteState(int dim, Eigen::VectorXcd amplitudes)
    : dim_(dim), amplitudes_(std::move(amplitudes)) {
  if (dim_ < 2)
    throw std::invalid_argument("PureTripartiteState: dimension must be >= 2");
  if (amplitudes_.size() != cube(dim_))
    throw std::invalid_argument("PureTripartiteState: expected dim^3 amplitudes, got " +
                                std::to_string(amplitudes_.size()));
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kUnitNorm)
    throw std::invalid_argument("PureTripartiteState: amplitudes not normalized");
}

PureTripartiteState make_tripartite(int dim, const Eigen::VectorXcd& amplitudes,
                                    bool renormalize) {
  if (dim < 2)
    throw std::invalid_argument("make_tripartite: dimension must be >= 2");
  if (amplitudes.size() != cube(dim))
    throw std::invalid_argument("make_tripartite: expected dim^3 amplitudes, got " +
                                std::to_string(amplitudes.size()));
  const double norm = amplitudes.norm();
  if (norm == 0.0)
    throw std::invalid_argument("make_tripartite: zero amplitude vector");
  if (!renormalize && std::abs(norm - 1.0) > tol::kIngestNorm)
    throw std::invalid_argument("make_tripartite: norm deviates from 1 by more than 1e-6; "
                                "pass renormalize to accept");
  return PureTripartiteState(dim, amplitudes / norm);
}

BipartitePureState::BipartitePureState(std::pair<int, int> dims,
                                       Eigen::MatrixXcd amplitudes)
    : dims_(dims), amplitudes_(std::move(amplitudes)) {
  if (dims_.first < 1 || dims_.second < 1)
    throw std::invalid_argument("BipartitePureState: dimensions must be positive");
  if (amplitudes_.rows() != dims_.first || amplitudes_.cols() != dims_.second)
    throw std::invalid_argument("BipartitePureState: amplitude matrix shape mismatch");
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kUnitNorm)
    throw std::invalid_argument("BipartitePureState: amplitudes not normalized");
}

Eigen::VectorXcd BipartitePureState::flattened() const {
  const int da = dims_.first, db = dims_.second;
  Eigen::VectorXcd v(static_cast<long>(da) * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) v[i * db + j] = amplitudes_(i, j);
  return v;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  const double herm_err = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > tol::kHermitian)
    throw std::domain_error("DensityMatrix: not Hermitian within 1e-10");
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > tol::kTraceOne)
    throw std::domain_error("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < tol::kPsdFloor)
    throw std::domain_error("DensityMatrix: eigenvalue below -1e-10, not PSD");
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian)
    throw std::domain_error("hermitian_eigenvalues: matrix not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::VectorXd hermitian_eigenvalues(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.entries());
}

DensityMatrix partial_trace(const PureTripartiteState& state,
                            const std::vector<int>& keep) {
  std::array<bool, 3> kept{false, false, false};
  for (int p : keep) {
    if (p < 1 || p > 3)
      throw std::invalid_argument("partial_trace: party labels must be in {1,2,3}");
    if (kept[p - 1])
      throw std::invalid_argument("partial_trace: duplicate party label");
    kept[p - 1] = true;
  }
  std::vector<int> kp, tp;  // kept / traced parties, 0-based ascending
  for (int p = 0; p < 3; ++p) (kept[p] ? kp : tp).push_back(p);
  if (kp.empty() || tp.empty())
    throw std::invalid_argument("partial_trace: keep-set must be a nonempty proper subset");

  const int d = state.dim();
  int kd = 1, td = 1;
  for (size_t a = 0; a < kp.size(); ++a) kd *= d;
  for (size_t a = 0; a < tp.size(); ++a) td *= d;

  // rho(r,c) = sum_t psi[r,t] conj(psi[c,t]), mixed-radix digits of r/c on
  // the kept parties (first kept slowest) and of t on the traced parties.
  const auto decode = [d](int code, const std::vector<int>& parties,
                          std::array<int, 3>& idx) {
    for (int a = static_cast<int>(parties.size()) - 1; a >= 0; --a) {
      idx[parties[a]] = code % d;
      code /= d;
    }
  };

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kd, kd);
  std::array<int, 3> row_idx{}, col_idx{};
  for (int r = 0; r < kd; ++r) {
    decode(r, kp, row_idx);
    for (int c = 0; c < kd; ++c) {
      decode(c, kp, col_idx);
      Complex acc = 0.0;
      for (int t = 0; t < td; ++t) {
        decode(t, tp, row_idx);
        decode(t, tp, col_idx);
        acc += state.amp(row_idx[0], row_idx[1], row_idx[2]) *
               std::conj(state.amp(col_idx[0], col_idx[1], col_idx[2]));
      }
      rho(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(rho));
}

SchmidtDecomposition schmidt_decompose(const BipartitePureState& state) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(state.amplitudes(),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();  // descending
  SchmidtDecomposition out;
  out.coefficients = sv.array().square();
  const int n = static_cast<int>(sv.size());
  out.left_basis.reserve(n);
  out.right_basis.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.left_basis.push_back(svd.matrixU().col(i));
    // A = U S V^dagger means |psi> = sum_i s_i |u_i> (conj V)_i.
    out.right_basis.push_back(svd.matrixV().col(i).conjugate());
  }
  return out;
}

namespace {

double clamped_eigen_product(const Eigen::VectorXd& eigenvalues, double floor_limit,
                             const char* what) {
  double det = 1.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double v = eigenvalues[i];
    if (v < floor_limit)
      throw std::domain_error(std::string(what) + ": eigenvalue below PSD floor");
    det *= std::max(v, 0.0);
  }
  return det;
}

}  // namespace

double psd_determinant(const Eigen::MatrixXcd& psd) {
  return clamped_eigen_product(hermitian_eigenvalues(psd), tol::kPsdFloor,
                               "psd_determinant");
}

double psd_determinant(const DensityMatrix& rho) {
  return psd_determinant(rho.entries());
}

PureTripartiteState haar_random_tripartite(int dim, std::uint64_t seed) {
  if (dim < 2)
    throw std::invalid_argument("haar_random_tripartite: dimension must be >= 2");
  SeededRng rng(seed);
  Eigen::VectorXcd a(cube(dim));
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < a.size(); ++i) a[i] = rng.complex_normal();
    norm = a.norm();
  } while (norm == 0.0);
  return PureTripartiteState(dim, a / norm);
}

}  // namespace qmono
