#pragma once

#include <array>

#include "qmono/tensor_core.hpp"

namespace qmono {

// Coefficients of the generalized W-class family on three qutrits:
// a(party, level) with party in {1,2,3} and level in {1,2}, normalized so the
// six moduli squared sum to one.
class WClassCoefficients {
 public:
  using Table = std::array<std::array<Complex, 2>, 3>;

  explicit WClassCoefficients(Table values);

  // All six coefficients equal to 1/sqrt(6): the familiar W state.
  static WClassCoefficients uniform();

  Complex operator()(int party, int level) const {
    return values_[party - 1][level - 1];
  }

 private:
  Table values_;
};

// |GHZ_d> = (1/sqrt d) sum_i |iii>.
PureTripartiteState ghz(int dim);

// (|012> - |021> + |120> - |102> + |201> - |210>) / sqrt(6), d = 3.
PureTripartiteState antisymmetric_chi();

// a11|100> + a12|200> + a21|010> + a22|020> + a31|001> + a32|002>, d = 3.
PureTripartiteState w_class(const WClassCoefficients& coeffs);

}  // namespace qmono
