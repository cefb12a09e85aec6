#pragma once

#include <string>
#include <vector>

#include "subdirac/model.hpp"

namespace subdirac {

// A homomorphism eps: Gamma -> Z_2 split as eps(k,l) = eps'(k) + eps_dot(l),
// stored additively in {0,1}. eps' is determined by its values on e_1..e_n
// and must kill A(1) - I mod 2 column-wise to define a spin structure.
struct SpinStructure {
  Eigen::VectorXi eps_prime;  // values eps'(e_nu) in {0,1}
  int eps_dot = 0;            // value eps_dot(1) in {0,1}

  std::string str() const;  // "b1b2...bn:bdot"
};

// Validity condition: sum_mu eps'(e_mu) (A(1)-I)_{mu nu} in 2Z for every nu.
bool is_valid_eps(const ValidatedModel& model, const Eigen::VectorXi& eps_prime);

// All valid (eps', eps_dot) pairs out of the 2^{n+1} candidates; eps_dot is
// unconstrained. Throws DimensionTooLarge for n > 24.
std::vector<SpinStructure> enumerate_spin_structures(const ValidatedModel& model);

// Membership in Sigma_{eps'}: xi_nu = eps'(e_nu) mod 2 for all nu.
bool sigma_contains(const SpinStructure& spin, const Eigen::VectorXi& xi);
// Same test for a rational point (false unless integral).
bool sigma_contains(const SpinStructure& spin, const RationalVector& xi);

// Parses "b1b2...bn:bdot", e.g. "10:1".
SpinStructure parse_eps(const std::string& s, Eigen::Index n);

}  // namespace subdirac
