#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qmono/measures.hpp"
#include "qmono/state_zoo.hpp"
#include "qmono/tensor_core.hpp"
#include "test_support.hpp"

using namespace qmono;

namespace {

// Random normalized W-class coefficient table.
WClassCoefficients random_w_coefficients(SeededRng& rng) {
  WClassCoefficients::Table t;
  double sum = 0.0;
  for (auto& party : t)
    for (auto& c : party) {
      c = rng.complex_normal();
      sum += std::norm(c);
    }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& party : t)
    for (auto& c : party) c *= scale;
  return WClassCoefficients(t);
}

int numerical_rank(const DensityMatrix& rho, double eps) {
  const Eigen::VectorXd eigs = hermitian_eigenvalues(rho);
  int rank = 0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i)
    if (eigs[i] > eps) ++rank;
  return rank;
}

}  // namespace

TEST_CASE("ghz states have the expected amplitude pattern") {
  for (int d : {2, 3, 5}) {
    const PureTripartiteState s = ghz(d);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    int nonzero = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const Complex a = s.amp(i, j, k);
          if (std::abs(a) > 0) {
            ++nonzero;
            CHECK(i == j);
            CHECK(j == k);
            CHECK(std::abs(a - Complex(c, 0)) < 1e-15);
          }
        }
    CHECK(nonzero == d);
    CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(ghz(1), std::invalid_argument);
}

TEST_CASE("ghz marginals are maximally mixed with unit G") {
  for (int d = 2; d <= 6; ++d) {
    const DensityMatrix rho1 = partial_trace(ghz(d), {1});
    const Eigen::MatrixXcd expected =
        Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    CHECK((rho1.entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(g_concurrence_marginal(rho1, d).g - 1.0) < 1e-10);
  }
}

TEST_CASE("antisymmetric chi has the six signed amplitudes") {
  const PureTripartiteState s = antisymmetric_chi();
  const double c = 1.0 / std::sqrt(6.0);
  CHECK(std::abs(s.amp(0, 1, 2) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(0, 2, 1) + Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(1, 2, 0) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(1, 0, 2) + Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(2, 0, 1) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(2, 1, 0) + Complex(c, 0)) < 1e-15);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < 27; ++i)
    if (std::abs(s.amplitudes()[i]) > 0) ++nonzero;
  CHECK(nonzero == 6);
}

TEST_CASE("antisymmetric chi flips sign under a 1<->2 swap") {
  const PureTripartiteState s = antisymmetric_chi();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(s.amp(i, j, k) + s.amp(j, i, k)) < 1e-15);
}

TEST_CASE("antisymmetric chi marginals match the closed forms") {
  const PureTripartiteState s = antisymmetric_chi();
  const DensityMatrix rho1 = partial_trace(s, {1});
  CHECK((rho1.entries() - Eigen::MatrixXcd::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() <
        1e-12);

  // rho12 = (|x><x| + |y><y| + |z><z|) / 3 with the three singlet-like kets.
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(3, 3), y = x, z = x;
  x(0, 1) = r;
  x(1, 0) = -r;
  y(0, 2) = r;
  y(2, 0) = -r;
  z(1, 2) = r;
  z(2, 1) = -r;
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(9, 9);
  for (const auto& ket : {x, y, z}) {
    Eigen::VectorXcd v(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v[i * 3 + j] = ket(i, j);
    expected += v * v.adjoint() / 3.0;
  }
  const DensityMatrix rho12 = partial_trace(s, {1, 2});
  CHECK((rho12.entries() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("uniform w_class coefficients give the W state") {
  const PureTripartiteState s = w_class(WClassCoefficients::uniform());
  const double c = 1.0 / std::sqrt(6.0);
  CHECK(std::abs(s.amp(1, 0, 0) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(2, 0, 0) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(0, 1, 0) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(0, 2, 0) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(0, 0, 1) - Complex(c, 0)) < 1e-15);
  CHECK(std::abs(s.amp(0, 0, 2) - Complex(c, 0)) < 1e-15);
}

TEST_CASE("single-coefficient w_class states are products") {
  WClassCoefficients::Table t{};
  t[0][0] = 1.0;  // a_11 -> |100>
  const PureTripartiteState s = w_class(WClassCoefficients(t));
  CHECK(std::abs(s.amp(1, 0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-12);
}

TEST_CASE("w_class single-party marginals have rank at most two") {
  SeededRng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const PureTripartiteState s = w_class(random_w_coefficients(rng));
    for (int party : {1, 2, 3}) {
      const DensityMatrix rho = partial_trace(s, {party});
      CHECK(numerical_rank(rho, 1e-10) <= 2);
      // Rank-deficient marginal forces G = 0 on this cut.
      CHECK(g_concurrence_marginal(rho, 3).g_pow_d <= 1e-12);
    }
  }
}

TEST_CASE("w_class rejects unnormalized coefficients") {
  WClassCoefficients::Table t{};
  t[0][0] = 1.0;
  t[1][0] = 0.5;
  CHECK_THROWS_AS(WClassCoefficients{t}, std::invalid_argument);
}

TEST_CASE("all zoo constructors emit valid states") {
  CHECK_NOTHROW(ghz(4));
  CHECK_NOTHROW(antisymmetric_chi());
  CHECK_NOTHROW(w_class(WClassCoefficients::uniform()));
}
