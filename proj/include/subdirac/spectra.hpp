#pragma once

#include <complex>
#include <string>
#include <vector>

#include "subdirac/connection.hpp"
#include "subdirac/spin.hpp"

namespace subdirac {

// Data of the reduced operator D = alpha I + beta (i d_t, conj(omega); omega,
// -i d_t) with omega(t) = a omega1 t + omega0, a > 0, |omega1| = 1.
struct AffineDiracSymbol {
  double alpha = 0;
  double beta = 1;
  double a = 1;
  std::complex<double> omega0{0, 0};
  std::complex<double> omega1{0, 1};

  double im01() const { return std::imag(omega0 * std::conj(omega1)); }
};

enum class Branch { Lambda0, LambdaPlus, LambdaMinus, MuPlus, MuMinus };
const char* branch_name(Branch b);

struct BranchEigenvalue {
  double value = 0;
  Branch branch = Branch::Lambda0;
  int k = 0;
  Eigen::VectorXi xi;  // source lattice point (empty for bare symbols)
};

// Eigenvalues lambda_0 = alpha + beta Im(omega0 conj(omega1)) and
// lambda_k^± = alpha ± beta (2 a k + Im(omega0 conj(omega1))^2)^{1/2},
// 1 <= k <= k_max.
std::vector<BranchEigenvalue> affine_spectrum(const AffineDiracSymbol& sym, int k_max);

// Builds the affine symbol of a non-fixed representative xi whose reduced
// operator has affine omega_xi(t) = pi i |b| <A(t)^T xi, s_1> (d = 2) resp.
// pi i |b| (i <A(t)^T xi, s_1> + <A(t)^T xi, s_2>) (d = 3); normalised so
// that a > 0 and |omega1| = 1. Throws NotTwoStep when omega_xi is not affine
// for this xi, FixedPointInput when it is constant, UnsupportedDimension for
// d not in {2, 3}.
AffineDiracSymbol symbol_for_generic_rep(const ValidatedModel& model,
                                         const ChristoffelTable& table,
                                         const Eigen::VectorXi& xi);

// Fixed-point eigenvalues mu_k^± = alpha ± pi (|b|^{-2} (2k + eps_dot)^2 +
// <xi,s_1>^2 [+ <xi,s_2>^2])^{1/2} for k in [k_min, k_max].
std::vector<BranchEigenvalue> fixed_point_spectrum(const ValidatedModel& model,
                                                   const ChristoffelTable& table,
                                                   const SpinStructure& spin,
                                                   const Eigen::VectorXi& xi, int k_min,
                                                   int k_max);

// Polynomial coefficients of t -> <A(t)^T xi, s_j>, ascending in t. Shared by
// the symbol builders and the discretization oracle.
std::vector<Rational> coadjoint_pairing_poly(const ValidatedModel& model,
                                             const Eigen::VectorXi& xi, int j);

}  // namespace subdirac
