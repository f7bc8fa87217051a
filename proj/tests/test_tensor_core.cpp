#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qmono/state_zoo.hpp"
#include "qmono/tensor_core.hpp"
#include "test_support.hpp"

using namespace qmono;
using testsupport::sorted_descending;

namespace {

// Independent contraction oracle for keep = {1,2}:
// rho[(i,j),(i',j')] = sum_k a(i,j,k) conj(a(i',j',k)).
Eigen::MatrixXcd naive_rho12(const PureTripartiteState& s) {
  const int d = s.dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int ip = 0; ip < d; ++ip)
        for (int jp = 0; jp < d; ++jp)
          for (int k = 0; k < d; ++k)
            rho(i * d + j, ip * d + jp) +=
                s.amp(i, j, k) * std::conj(s.amp(ip, jp, k));
  return rho;
}

double direct_norm(const Eigen::VectorXcd& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum += std::norm(a[i]);
  return std::sqrt(sum);
}

}  // namespace

TEST_CASE("make_tripartite accepts GHZ-style amplitudes") {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(27);
  const double c = 1.0 / std::sqrt(3.0);
  a[0] = c;   // |000>
  a[13] = c;  // |111>
  a[26] = c;  // |222>
  const PureTripartiteState s = make_tripartite(3, a);
  CHECK(s.dim() == 3);
  CHECK(std::abs(direct_norm(s.amplitudes()) - 1.0) < 1e-13);
  CHECK(std::abs(s.amp(1, 1, 1) - Complex(c, 0)) < 1e-15);
}

TEST_CASE("make_tripartite handles basis states and renormalization") {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a[0] = 1.0;
  const PureTripartiteState product = make_tripartite(2, a);
  CHECK(std::abs(product.amp(0, 0, 0) - Complex(1, 0)) < 1e-15);

  SeededRng rng(11);
  Eigen::VectorXcd g(27);
  for (int i = 0; i < 27; ++i) g[i] = rng.complex_normal();
  const PureTripartiteState s = make_tripartite(3, g, true);
  CHECK(std::abs(direct_norm(s.amplitudes()) - 1.0) < 1e-13);

  // Small drift is renormalized without the flag.
  Eigen::VectorXcd drift = Eigen::VectorXcd::Zero(8);
  drift[0] = 1.0 + 5e-7;
  CHECK(std::abs(direct_norm(make_tripartite(2, drift).amplitudes()) - 1.0) < 1e-13);
}

TEST_CASE("make_tripartite rejects bad input") {
  CHECK_THROWS_AS(make_tripartite(3, Eigen::VectorXcd::Zero(8)), std::invalid_argument);
  CHECK_THROWS_AS(make_tripartite(2, Eigen::VectorXcd::Zero(8)), std::invalid_argument);
  Eigen::VectorXcd off = Eigen::VectorXcd::Zero(8);
  off[0] = 1.01;
  CHECK_THROWS_AS(make_tripartite(2, off), std::invalid_argument);
  CHECK_NOTHROW(make_tripartite(2, off, true));
  CHECK_THROWS_AS(make_tripartite(1, Eigen::VectorXcd::Ones(1)), std::invalid_argument);
}

TEST_CASE("partial_trace of GHZ gives the maximally mixed marginal") {
  const DensityMatrix rho1 = partial_trace(ghz(3), {1});
  const Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(3, 3) / 3.0;
  CHECK((rho1.entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial_trace of a product state is a projector") {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a[0] = 1.0;
  const DensityMatrix rho12 = partial_trace(make_tripartite(2, a), {1, 2});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(0, 0) = 1.0;
  CHECK((rho12.entries() - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial_trace matches the naive contraction oracle") {
  const PureTripartiteState s = haar_random_tripartite(3, 404);
  const DensityMatrix rho12 = partial_trace(s, {1, 2});
  CHECK((rho12.entries() - naive_rho12(s)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial_trace validates the keep-set") {
  const PureTripartiteState s = ghz(2);
  CHECK_THROWS_AS(partial_trace(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {4}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(s, {2, 2}), std::invalid_argument);
}

TEST_CASE("partial_trace preserves trace and positivity on random states") {
  for (int d = 2; d <= 4; ++d) {
    for (int rep = 0; rep < 8; ++rep) {
      const PureTripartiteState s =
          haar_random_tripartite(d, derive_seed(900, d * 100 + rep));
      for (const auto& keep : std::vector<std::vector<int>>{
               {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}}) {
        // Construction itself enforces Hermiticity and the PSD floor.
        const DensityMatrix rho = partial_trace(s, keep);
        CHECK(std::abs(rho.entries().trace().real() - 1.0) < 1e-12);
        CHECK(hermitian_eigenvalues(rho).minCoeff() > -1e-10);
      }
    }
  }
}

TEST_CASE("complementary marginals share their spectrum") {
  for (int d = 2; d <= 4; ++d) {
    const PureTripartiteState s = haar_random_tripartite(d, 7000 + d);
    const auto spec1 = sorted_descending(hermitian_eigenvalues(partial_trace(s, {1})));
    const auto spec23 =
        sorted_descending(hermitian_eigenvalues(partial_trace(s, {2, 3})));
    for (int i = 0; i < d; ++i) CHECK(std::abs(spec1[i] - spec23[i]) < 1e-10);
    for (size_t i = d; i < spec23.size(); ++i) CHECK(std::abs(spec23[i]) < 1e-10);
  }
}

TEST_CASE("schmidt_decompose on the Bell state") {
  Eigen::MatrixXcd bell(2, 2);
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  const SchmidtDecomposition sd = schmidt_decompose(BipartitePureState({2, 2}, bell));
  CHECK(std::abs(sd.coefficients[0] - 0.5) < 1e-12);
  CHECK(std::abs(sd.coefficients[1] - 0.5) < 1e-12);
}

TEST_CASE("schmidt_decompose on a product state") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
  a(0, 0) = 1.0;
  const SchmidtDecomposition sd = schmidt_decompose(BipartitePureState({2, 2}, a));
  CHECK(std::abs(sd.coefficients[0] - 1.0) < 1e-14);
  CHECK(std::abs(sd.coefficients[1]) < 1e-14);
}

TEST_CASE("schmidt coefficients match the marginal-spectrum oracle") {
  SeededRng rng(505);
  const BipartitePureState s = testsupport::random_bipartite(3, 3, rng);
  const SchmidtDecomposition sd = schmidt_decompose(s);
  // Independent route: eigenvalues of rho_A = A A^dagger.
  const Eigen::MatrixXcd rho_a = s.amplitudes() * s.amplitudes().adjoint();
  const auto spectrum = sorted_descending(hermitian_eigenvalues(rho_a));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(sd.coefficients[i] - spectrum[i]) < 1e-10);
}

TEST_CASE("schmidt reconstruction holds for random states") {
  SeededRng rng(606);
  for (const auto& [da, db] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 3}, {2, 4}, {4, 3}, {5, 5}}) {
    const BipartitePureState s = testsupport::random_bipartite(da, db, rng);
    const SchmidtDecomposition sd = schmidt_decompose(s);
    double sum = 0.0;
    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(da, db);
    for (size_t i = 0; i < sd.left_basis.size(); ++i) {
      sum += sd.coefficients[static_cast<Eigen::Index>(i)];
      rebuilt += std::sqrt(sd.coefficients[static_cast<Eigen::Index>(i)]) *
                 sd.left_basis[i] * sd.right_basis[i].transpose();
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
    CHECK((rebuilt - s.amplitudes()).norm() < 1e-10);
    for (Eigen::Index i = 0; i + 1 < sd.coefficients.size(); ++i)
      CHECK(sd.coefficients[i] >= sd.coefficients[i + 1]);
  }
}

TEST_CASE("psd_determinant of the maximally mixed qutrit") {
  const DensityMatrix rho(Eigen::MatrixXcd::Identity(3, 3) / 3.0);
  CHECK(std::abs(psd_determinant(rho) - 1.0 / 27.0) < 1e-15);
}

TEST_CASE("psd_determinant of a rank-deficient marginal is zero") {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a[0] = 1.0;
  const DensityMatrix rho = partial_trace(make_tripartite(2, a), {1, 2});
  CHECK(psd_determinant(rho) == 0.0);
}

TEST_CASE("psd_determinant matches the cofactor oracle") {
  SeededRng rng(707);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho = testsupport::random_density(n, rng);
      const double expected = testsupport::cofactor_det(rho.entries()).real();
      const double got = psd_determinant(rho);
      CHECK(std::abs(got - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("psd_determinant rejects eigenvalues below the floor") {
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(1, 1) = -1e-6;
  CHECK_THROWS_AS(psd_determinant(bad), std::domain_error);
}

TEST_CASE("psd_determinant respects the AM-GM ceiling (1/n)^n") {
  SeededRng rng(808);
  for (int n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const double det = psd_determinant(testsupport::random_density(n, rng));
      CHECK(det >= 0.0);
      CHECK(det <= std::pow(1.0 / n, n) + 1e-12);
    }
  }
}

TEST_CASE("DensityMatrix validates its contracts") {
  Eigen::MatrixXcd not_herm(2, 2);
  not_herm << 0.5, Complex(0.1, 0.1), Complex(0.1, 0.2), 0.5;
  CHECK_THROWS_AS(DensityMatrix{not_herm}, std::domain_error);

  Eigen::MatrixXcd bad_trace = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::domain_error);

  Eigen::MatrixXcd not_psd(2, 2);
  not_psd << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{not_psd}, std::domain_error);
}

TEST_CASE("haar_random_tripartite is seed-deterministic and seed-sensitive") {
  const PureTripartiteState a = haar_random_tripartite(3, 1);
  const PureTripartiteState b = haar_random_tripartite(3, 1);
  const PureTripartiteState c = haar_random_tripartite(3, 2);
  CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
  CHECK((a.amplitudes() - c.amplitudes()).norm() > 1e-3);
}

TEST_CASE("haar_random_tripartite mean marginal purity matches the Haar value") {
  // For a Haar state on C^2 (x) C^4, E[tr rho_1^2] = (2 + 4) / (2*4 + 1).
  const double expected = 6.0 / 9.0;
  double sum = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const PureTripartiteState s = haar_random_tripartite(2, derive_seed(31337, i));
    sum += partial_trace(s, {1}).entries().squaredNorm();
  }
  CHECK(std::abs(sum / samples - expected) < 0.01);
}

TEST_CASE("haar_random_unitary produces unitaries") {
  SeededRng rng(909);
  for (int n = 2; n <= 4; ++n) {
    const Eigen::MatrixXcd u = haar_random_unitary(n, rng);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
    CHECK((u.adjoint() * u - eye).cwiseAbs().maxCoeff() < 1e-12);
  }
}
