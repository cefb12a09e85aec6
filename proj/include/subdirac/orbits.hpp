#pragma once

#include <optional>
#include <vector>

#include "subdirac/spin.hpp"

namespace subdirac {

enum class OrbitKind { FixedPoint, Generic };

// Family-specific payload of an orbit representative: (J_eta, j_eta, d_eta,
// q_eta) for block models, (q(xi_1), m(xi_1, xi_2)) for the 3-step model.
struct FamilyData {
  std::vector<int> J_eta;
  int j_eta = 0;  // 1-based
  long long d_eta = 0;
  long long q_eta = 0;
  long long q_xi1 = 0;
  long long m_count = 0;
};

struct OrbitRep {
  Eigen::VectorXi xi;
  OrbitKind kind = OrbitKind::Generic;
  long long z_orbit_count = 1;  // number of Z-orbits in (R-orbit) ∩ Sigma_{eps'}
  std::optional<FamilyData> family;
};

// Fixed point of the coadjoint action: B^T xi = 0, exact.
bool is_fixed_point(const ValidatedModel& model, const Eigen::VectorXi& xi);

// Brute-force Z-orbit counter. Scans t in (1/L)Z ∩ [-T, T] with exact
// rationals, collects the hits {t : A(t)^T xi ∈ Sigma_{eps'}}, verifies the
// hit set repeats with period 1 across the scanned range (the structure that
// makes "residues mod 1" well defined; for 2-step models the hit set is the
// arithmetic progression (2/d)Z and this is checked too), and returns the
// number of residues in [0, 1). Throws ScanInconclusive if the structure
// cannot be certified, never guesses.
long long zorbit_count_bruteforce(const ValidatedModel& model, const SpinStructure& spin,
                                  const Eigen::VectorXi& xi, long long L, long long T);

// Family-aware scan bounds: L = 4 * (denominator of the predicted hit-set
// step), T = 3 periods. The convenience wrapper also cross-checks the count
// against a refined scan at 2L.
struct ScanBounds {
  long long L = 0;
  long long T = 3;
};
ScanBounds oracle_scan_bounds(const ValidatedModel& model, const Eigen::VectorXi& xi);
long long zorbit_count_oracle(const ValidatedModel& model, const SpinStructure& spin,
                              const Eigen::VectorXi& xi);

// Representative enumerators for the three families. Windows are sup-norm
// boxes |xi_i| <= W on the free representative coordinates:
//   heisenberg:  fixed (0, xi_2) with xi_2 free; generic (xi_1, eps_2) with
//                xi_1 free.
//   block 2-step: fixed (0, xi_{p+1..2p}) all free; generic eta free in the
//                first p coordinates, xi_{p+j_eta} in [0, 2 q_eta - 1] (not
//                windowed), remaining xi_{p+nu} free.
//   3-step:      fixed (0,0,xi_3) with xi_3 free; xi_1 = 0 family with xi_2
//                free; xi_1 != 0 family with xi_1, xi_3 free and xi_2 ranging
//                over the representative set in [0, |r_1 xi_1|).
// Output is sorted lexicographically.
std::vector<OrbitRep> representatives_heisenberg(const ValidatedModel& model,
                                                 const SpinStructure& spin, int W);
std::vector<OrbitRep> representatives_2step_block(const ValidatedModel& model,
                                                  const SpinStructure& spin, int W);
std::vector<OrbitRep> representatives_3step(const ValidatedModel& model,
                                            const SpinStructure& spin, int W);

// Dispatch on the preset; non-preset 2-step models fall back to a window scan
// that groups lattice points into R-orbits exactly and counts Z-orbits with
// the brute-force oracle (representative = lexicographically least member in
// the window).
std::vector<OrbitRep> enumerate_representatives(const ValidatedModel& model,
                                                const SpinStructure& spin, int W);

// The unique representative (per the family's tie-breaking) of the R-orbit
// through xi ∈ Sigma_{eps'}. Exact.
Eigen::VectorXi canonical_representative(const ValidatedModel& model, const SpinStructure& spin,
                                         const Eigen::VectorXi& xi);

// Exact R-orbit membership: solves A(t)^T rho = xi over Q.
bool in_same_r_orbit(const ValidatedModel& model, const Eigen::VectorXi& rho,
                     const Eigen::VectorXi& xi);

// 3-step helpers (exposed for the paper-formula evaluator and tests).
// q(k): reduced denominator of |r2| / |r1 k|.
long long threestep_q(long long r1, long long r2, long long k);
// M(l, q) = { (m1, m2) : m1, m2 >= 1, m1 + m2 = l, q | m1 m2 } is empty?
bool threestep_M_empty(long long l, long long q);
// m(xi1, xi2) = #{ k >= 0 : xi2 + 2k < |r1 xi1|, q(xi1) | k (k + xi2) }.
long long threestep_m(long long r1, long long r2, long long xi1, long long xi2);

}  // namespace subdirac
