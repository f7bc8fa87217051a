#include "qmono/state_zoo.hpp"

#include <cmath>
#include <stdexcept>

#include "qmono/tolerances.hpp"

namespace qmono {

WClassCoefficients::WClassCoefficients(Table values) : values_(values) {
  double sum = 0.0;
  for (const auto& party : values_)
    for (const Complex& c : party) sum += std::norm(c);
  if (std::abs(sum - 1.0) > tol::kUnitNorm)
    throw std::invalid_argument("WClassCoefficients: moduli squared must sum to 1");
}

WClassCoefficients WClassCoefficients::uniform() {
  const Complex c(1.0 / std::sqrt(6.0), 0.0);
  return WClassCoefficients(Table{{{{c, c}}, {{c, c}}, {{c, c}}}});
}

PureTripartiteState ghz(int dim) {
  if (dim < 2) throw std::invalid_argument("ghz: dimension must be >= 2");
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(static_cast<long>(dim) * dim * dim);
  const double c = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i) a[(i * dim + i) * dim + i] = c;
  return PureTripartiteState(dim, std::move(a));
}

PureTripartiteState antisymmetric_chi() {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(27);
  const double c = 1.0 / std::sqrt(6.0);
  const auto at = [](int i, int j, int k) { return (i * 3 + j) * 3 + k; };
  a[at(0, 1, 2)] = c;
  a[at(0, 2, 1)] = -c;
  a[at(1, 2, 0)] = c;
  a[at(1, 0, 2)] = -c;
  a[at(2, 0, 1)] = c;
  a[at(2, 1, 0)] = -c;
  return PureTripartiteState(3, std::move(a));
}

PureTripartiteState w_class(const WClassCoefficients& coeffs) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(27);
  const auto at = [](int i, int j, int k) { return (i * 3 + j) * 3 + k; };
  a[at(1, 0, 0)] = coeffs(1, 1);
  a[at(2, 0, 0)] = coeffs(1, 2);
  a[at(0, 1, 0)] = coeffs(2, 1);
  a[at(0, 2, 0)] = coeffs(2, 2);
  a[at(0, 0, 1)] = coeffs(3, 1);
  a[at(0, 0, 2)] = coeffs(3, 2);
  return PureTripartiteState(3, std::move(a));
}

}  // namespace qmono
