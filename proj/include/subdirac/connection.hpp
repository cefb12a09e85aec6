#pragma once

#include <vector>

#include "subdirac/model.hpp"

namespace subdirac {

// Christoffel symbols Gamma_{ij}^k = g(nabla_{s_i} s_j, s_k) of the Koszul
// connection defined by the complement V, together with the scalar Clifford
// term alpha = -1/2 (Gamma_12^3 + Gamma_23^1 + Gamma_31^2) for d = 3 (the
// W-term of the sub-Dirac operator; identically 0 for d = 2).
struct ChristoffelTable {
  int d = 0;
  std::vector<Rational> gamma;  // d^3 entries, index (i*d + j)*d + k, 0-based

  const Rational& at(int i, int j, int k) const {
    return gamma[static_cast<size_t>((i * d + j) * d + k)];
  }
  Rational& at(int i, int j, int k) { return gamma[static_cast<size_t>((i * d + j) * d + k)]; }

  Rational alpha_rational() const;
  double alpha() const { return alpha_rational().to_double(); }
};

// Builds the table from the Koszul formula for left-invariant fields,
//   Gamma_{ij}^k = 1/2 ( <pr[s_i,s_j],s_k> - <pr[s_i,s_k],s_j> - <pr[s_j,s_k],s_i> ),
// with pr the projection onto H along V. A gamma override in the model file
// replaces the computation. Throws NoComplement when V is required but absent.
ChristoffelTable christoffel(const ValidatedModel& model);

// Symmetry criterion for the sub-Dirac operator: sum_i Gamma_{ij}^i = 0 for
// every j. For codim-1 Koszul connections the bracket criterion
// [Gamma(H), xi_1] subset Gamma(H) is cross-checked.
bool is_symmetric_connection(const ValidatedModel& model, const ChristoffelTable& table);

}  // namespace subdirac
