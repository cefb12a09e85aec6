#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "subdirac/errors.hpp"

namespace subdirac {

// Fixed 2x2 complex Clifford representation for d in {2, 3} acting on the
// spinor module Delta = C^2. Satisfies s_i s_j + s_j s_i = -2 delta_ij and
// each s_i is skew-Hermitian; for d = 3 additionally s_1 s_2 = s_3.
struct CliffordRep2 {
  int d = 2;
  std::array<Eigen::Matrix2cd, 3> s;

  const Eigen::Matrix2cd& mat(int i) const { return s[static_cast<size_t>(i - 1)]; }
};

inline CliffordRep2 clifford_rep(int d) {
  using namespace std::complex_literals;
  CliffordRep2 rep;
  rep.d = d;
  if (d == 2) {
    rep.s[0] << 0, -1, 1, 0;
    rep.s[1] << 1i, 0, 0, -1i;
    rep.s[2].setZero();
  } else if (d == 3) {
    rep.s[0] << 0, 1i, 1i, 0;
    rep.s[1] << 0, -1, 1, 0;
    rep.s[2] << 1i, 0, 0, -1i;
  } else {
    fail(Errc::UnsupportedDimension, "Clifford representation available for d in {2,3}");
  }
  return rep;
}

}  // namespace subdirac
