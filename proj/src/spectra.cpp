#include "subdirac/spectra.hpp"

#include <cmath>
#include <numbers>

#include "subdirac/errors.hpp"

namespace subdirac {

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Lambda0: return "lambda0";
    case Branch::LambdaPlus: return "lambda+";
    case Branch::LambdaMinus: return "lambda-";
    case Branch::MuPlus: return "mu+";
    case Branch::MuMinus: return "mu-";
  }
  return "?";
}

std::vector<BranchEigenvalue> affine_spectrum(const AffineDiracSymbol& sym, int k_max) {
  if (k_max < 1) fail(Errc::InvalidArgument, "affine_spectrum needs k_max >= 1");
  if (!(sym.a > 0)) fail(Errc::InvalidArgument, "affine symbol needs a > 0");
  if (std::abs(std::abs(sym.omega1) - 1.0) > 1e-12)
    fail(Errc::InvalidArgument, "affine symbol needs |omega1| = 1");
  const double im = sym.im01();
  std::vector<BranchEigenvalue> out;
  out.push_back({sym.alpha + sym.beta * im, Branch::Lambda0, 0, {}});
  for (int k = 1; k <= k_max; ++k) {
    double root = std::sqrt(2.0 * sym.a * k + im * im);
    out.push_back({sym.alpha + sym.beta * root, Branch::LambdaPlus, k, {}});
    out.push_back({sym.alpha - sym.beta * root, Branch::LambdaMinus, k, {}});
  }
  return out;
}

std::vector<Rational> coadjoint_pairing_poly(const ValidatedModel& model,
                                             const Eigen::VectorXi& xi, int j) {
  // <A(t)^T xi, s_j> = <xi, A(t) s_j> = sum_k t^k <xi, B^k s_j> / k!.
  const RationalVector xq = to_rational(xi);
  std::vector<Rational> coeffs;
  RationalVector v = model.frame(j);
  long long factorial = 1;
  coeffs.push_back(dot(xq, v));
  for (int k = 1; k < model.step; ++k) {
    v = model.spec.B * v;
    factorial *= k;
    coeffs.push_back(dot(xq, v) / Rational(factorial));
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

AffineDiracSymbol symbol_for_generic_rep(const ValidatedModel& model,
                                         const ChristoffelTable& table,
                                         const Eigen::VectorXi& xi) {
  const int d = model.d();
  if (d != 2 && d != 3) fail(Errc::UnsupportedDimension, "closed forms cover d in {2,3}");
  const double pi = std::numbers::pi;
  const double bnorm = model.spec.b_norm.to_double();

  // omega_xi(t) = pi i |b| (<A(t)^T xi, s_1>)                      for d = 2,
  //             = pi i |b| (i <A(t)^T xi, s_1> + <A(t)^T xi, s_2>) for d = 3.
  // Both are c1 t + c0 with complex c1, c0 once the pairings are affine.
  std::vector<Rational> p1 = coadjoint_pairing_poly(model, xi, 1);
  std::vector<Rational> p2;
  if (d == 3) p2 = coadjoint_pairing_poly(model, xi, 2);
  if (p1.size() > 2 || p2.size() > 2)
    fail(Errc::NotTwoStep, "omega_xi is not affine for this xi");

  auto coeff = [](const std::vector<Rational>& p, size_t k) {
    return k < p.size() ? p[k].to_double() : 0.0;
  };
  std::complex<double> c0, c1;
  if (d == 2) {
    c0 = std::complex<double>(0, pi * bnorm * coeff(p1, 0));
    c1 = std::complex<double>(0, pi * bnorm * coeff(p1, 1));
  } else {
    c0 = -pi * bnorm * std::complex<double>(coeff(p1, 0), -coeff(p2, 0));
    c1 = -pi * bnorm * std::complex<double>(coeff(p1, 1), -coeff(p2, 1));
  }
  const double mag = std::abs(c1);
  if (mag == 0.0) fail(Errc::FixedPointInput, "omega_xi is constant: xi is a fixed point");

  AffineDiracSymbol sym;
  sym.alpha = table.alpha();
  sym.beta = 1.0 / bnorm;
  sym.a = mag;
  sym.omega1 = c1 / mag;
  sym.omega0 = c0;
  return sym;
}

std::vector<BranchEigenvalue> fixed_point_spectrum(const ValidatedModel& model,
                                                   const ChristoffelTable& table,
                                                   const SpinStructure& spin,
                                                   const Eigen::VectorXi& xi, int k_min,
                                                   int k_max) {
  const int d = model.d();
  if (d != 2 && d != 3) fail(Errc::UnsupportedDimension, "closed forms cover d in {2,3}");
  if (!is_fixed_point(model, xi)) fail(Errc::NotFixedPoint, "xi is not a fixed point");
  const double pi = std::numbers::pi;
  const double binv = 1.0 / model.spec.b_norm.to_double();
  const double alpha = table.alpha();

  double pairing_sq = 0;
  for (int j = 1; j <= d - 1; ++j) {
    double v = dot(to_rational(xi), model.frame(j)).to_double();
    pairing_sq += v * v;
  }
  std::vector<BranchEigenvalue> out;
  for (int k = k_min; k <= k_max; ++k) {
    double m = 2.0 * k + spin.eps_dot;
    double root = pi * std::sqrt(binv * binv * m * m + pairing_sq);
    out.push_back({alpha + root, Branch::MuPlus, k, xi});
    out.push_back({alpha - root, Branch::MuMinus, k, xi});
  }
  return out;
}

}  // namespace subdirac
