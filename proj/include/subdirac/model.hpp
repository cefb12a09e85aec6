#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdirac/rational.hpp"

namespace subdirac {

// The three example families of the library ship as presets; a ModelSpec may
// also be given raw. Preset parameters are kept so downstream modules can use
// the family-specific closed forms.
struct Preset {
  enum class Kind { None, Heisenberg, Block2Step, ThreeStep };
  Kind kind = Kind::None;
  // Heisenberg metric parameters (r, d, T). `d`/`T` are the metric constants
  // of the frame s1 = e1/T, s2 = -d e2, s3 = (d/r) b; the rank of the
  // distribution (2 or 3) lives in ModelSpec::d.
  long long r = 1;
  Rational d_param = Rational(1);
  Rational T_param = Rational(1);
  // Block 2-step (r_1..r_p with r_{nu+1} | r_nu) and 3-step (r1, r2).
  std::vector<long long> rs;
};

// Group/geometry input for G = R^n x_A R: nilpotent generator B, rank-d
// distribution H spanned by frame vectors s_1..s_{d-1} in the abelian ideal
// plus s_d = b/|b|, and an optional complement V used for the Koszul
// connection. The metric is defined by declaring the frame orthonormal.
struct ModelSpec {
  Eigen::Index n = 0;
  RationalMatrix B;                      // n x n, nilpotent
  int d = 2;                             // rank of H, 2 <= d <= n+1
  std::vector<RationalVector> frame;     // d-1 vectors in Q^n
  Rational b_norm = Rational(1);         // |b| > 0
  std::vector<RationalVector> complement;  // n+1-d vectors in Q^{n+1} (may be given in Q^n)
  std::optional<std::vector<Rational>> gamma_override;  // d^3 table, index (i*d+j)*d+k
  Preset preset;
};

struct ValidatedModel {
  ModelSpec spec;
  int step = 0;                          // least J with B^J = 0
  std::vector<std::string> checked;      // which invariants were verified
  RationalMatrix A1;                     // exp(B), integral with det 1

  Eigen::Index n() const { return spec.n; }
  int d() const { return spec.d; }
  // Frame vector s_j (1-based j <= d-1) as an element of Q^n.
  const RationalVector& frame(int j) const { return spec.frame[static_cast<size_t>(j - 1)]; }
};

// Checks all structural invariants: B nilpotent, A(1) in SL(n,Z), frame well
// formed, H bracket-generating (filtration over Q per the C^k(H_e) chain),
// frame + complement a basis of g. Throws NotNilpotent / NotIntegralSL /
// NotBracketGenerating / BadFrame.
ValidatedModel validate_model(const ModelSpec& spec);

// A(t) = exp(tB) as a finite sum; exact for rational t.
RationalMatrix exp_tB(const ValidatedModel& model, const Rational& t);

// Coadjoint action A(t)^T xi.
RationalVector coadjoint(const ValidatedModel& model, const Rational& t, const RationalVector& xi);

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Smith normal form with the divisibility chain ordered descending,
// R = Q1 * M * Q2^{-1}, R = diag(r_1..r_p) with r_nu > 0 and r_{nu+1} | r_nu.
struct SmithResult {
  IntMatrix Q1, R, Q2;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Preset constructors. `rank` of the Heisenberg distribution selects the
// Riemannian (3) or sub-Riemannian (2) structure.
ModelSpec make_heisenberg(long long r, const Rational& d, const Rational& T, int rank);
ModelSpec make_block2step(const std::vector<long long>& rs);
ModelSpec make_threestep(long long r1, long long r2);

// Lie algebra g = R^n x_B R; elements are (v, c) with v in Q^n. The bracket
// is [(v1,c1),(v2,c2)] = (c1 B v2 - c2 B v1, 0).
struct GVector {
  RationalVector v;
  Rational c;
};
GVector lie_bracket(const ValidatedModel& model, const GVector& x, const GVector& y);
// Frame vector s_j (1-based, j <= d) as an element of g; s_d = b/|b|.
GVector frame_in_g(const ValidatedModel& model, int j);

}  // namespace subdirac
