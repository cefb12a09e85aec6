#include "subdirac/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "subdirac/errors.hpp"

namespace subdirac {

namespace {

bool lex_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void sort_reps(std::vector<OrbitRep>& reps) {
  std::sort(reps.begin(), reps.end(),
            [](const OrbitRep& a, const OrbitRep& b) { return lex_less(a.xi, b.xi); });
}

// Values v in [lo, hi] with v = parity (mod 2).
std::vector<int> parity_range(int lo, int hi, int parity) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v)
    if (((v - parity) % 2 + 2) % 2 == 0) out.push_back(v);
  return out;
}

long long ll_gcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

bool is_fixed_point(const ValidatedModel& model, const Eigen::VectorXi& xi) {
  RationalVector bt = model.spec.B.transpose() * to_rational(xi);
  for (Eigen::Index i = 0; i < bt.size(); ++i)
    if (!bt[i].is_zero()) return false;
  return true;
}

long long zorbit_count_bruteforce(const ValidatedModel& model, const SpinStructure& spin,
                                  const Eigen::VectorXi& xi, long long L, long long T) {
  if (L < 1 || T < 2) fail(Errc::InvalidArgument, "scan needs L >= 1 and T >= 2");
  if (!sigma_contains(spin, xi)) fail(Errc::InvalidArgument, "xi is not in Sigma_{eps'}");
  if (is_fixed_point(model, xi)) fail(Errc::InvalidArgument, "xi is a fixed point");

  const RationalVector xq = to_rational(xi);
  std::set<long long> hits;
  for (long long j = -T * L; j <= T * L; ++j) {
    if (sigma_contains(spin, coadjoint(model, Rational(j, L), xq))) hits.insert(j);
  }
  if (!hits.count(0)) fail(Errc::ScanInconclusive, "t = 0 is not a hit");

  // The hit set must repeat with period 1 across the whole scanned range.
  for (long long j : hits) {
    if (j + L <= T * L && !hits.count(j + L))
      fail(Errc::ScanInconclusive, "hit set is not 1-periodic in range");
    if (j - L >= -T * L && !hits.count(j - L))
      fail(Errc::ScanInconclusive, "hit set is not 1-periodic in range");
  }
  long long count = 0;
  for (long long j : hits)
    if (j >= 0 && j < L) ++count;
  if (count == 0) fail(Errc::ScanInconclusive, "no residues found in [0,1)");
  return count;
}

ScanBounds oracle_scan_bounds(const ValidatedModel& model, const Eigen::VectorXi& xi) {
  const Preset& p = model.spec.preset;
  ScanBounds b;
  switch (p.kind) {
    case Preset::Kind::Heisenberg: {
      long long step_den = std::abs(p.r * xi[0]);  // hits are (2/|r xi_1|) Z
      b.L = 2 * std::max<long long>(step_den, 1);
      return b;
    }
    case Preset::Kind::Block2Step: {
      long long g = 0;
      const Eigen::Index pp = static_cast<Eigen::Index>(p.rs.size());
      for (Eigen::Index nu = 0; nu < pp; ++nu)
        g = ll_gcd(g, p.rs[static_cast<size_t>(nu)] * xi[nu]);
      b.L = 2 * std::max<long long>(g, 1);  // hits are (2/d_eta) Z
      return b;
    }
    case Preset::Kind::ThreeStep: {
      long long r1 = p.rs[0], r2 = p.rs[1];
      long long den = xi[0] != 0 ? std::abs(r1 * xi[0]) : std::abs(r2 * xi[1]);
      b.L = 2 * std::max<long long>(den, 1);  // hit lattice (2/|r1 xi_1|) Z
      return b;
    }
    case Preset::Kind::None: {
      if (model.step > 2) fail(Errc::UnsupportedModel, "scan bounds known only for 2-step models");
      RationalVector bt = model.spec.B.transpose() * to_rational(xi);
      long long g = 0;
      for (Eigen::Index i = 0; i < bt.size(); ++i) {
        if (bt[i].is_zero()) continue;
        if (!bt[i].is_integer()) fail(Errc::UnsupportedModel, "B^T xi not integral");
        g = ll_gcd(g, bt[i].num());
      }
      b.L = 4 * std::max<long long>(g, 1);
      return b;
    }
  }
  fail(Errc::UnsupportedModel, "unknown preset");
}

long long zorbit_count_oracle(const ValidatedModel& model, const SpinStructure& spin,
                              const Eigen::VectorXi& xi) {
  ScanBounds b = oracle_scan_bounds(model, xi);
  long long c1 = zorbit_count_bruteforce(model, spin, xi, b.L, b.T);
  long long c2 = zorbit_count_bruteforce(model, spin, xi, 2 * b.L, b.T);
  if (c1 != c2) fail(Errc::ScanInconclusive, "count changed under grid refinement");
  return c1;
}

std::vector<OrbitRep> representatives_heisenberg(const ValidatedModel& model,
                                                 const SpinStructure& spin, int W) {
  if (model.spec.preset.kind != Preset::Kind::Heisenberg)
    fail(Errc::InvalidArgument, "model is not a heisenberg preset");
  const long long r = model.spec.preset.r;
  const int e1 = spin.eps_prime[0], e2 = spin.eps_prime[1];
  std::vector<OrbitRep> reps;
  if (e1 == 0) {
    for (int x2 : parity_range(-W, W, e2)) {
      OrbitRep rep;
      rep.xi = Eigen::Vector2i(0, x2);
      rep.kind = OrbitKind::FixedPoint;
      rep.z_orbit_count = 1;
      reps.push_back(rep);
    }
  }
  for (int x1 : parity_range(-W, W, e1)) {
    if (x1 == 0) continue;
    OrbitRep rep;
    rep.xi = Eigen::Vector2i(x1, e2);
    rep.kind = OrbitKind::Generic;
    long long rx = std::abs(r * x1);
    if (rx % 2 != 0) fail(Errc::InvalidArgument, "r xi_1 odd: spin structure invalid");
    rep.z_orbit_count = rx / 2;
    reps.push_back(rep);
  }
  sort_reps(reps);
  return reps;
}

std::vector<OrbitRep> representatives_2step_block(const ValidatedModel& model,
                                                  const SpinStructure& spin, int W) {
  if (model.spec.preset.kind != Preset::Kind::Block2Step)
    fail(Errc::InvalidArgument, "model is not a block2step preset");
  const auto& rs = model.spec.preset.rs;
  const Eigen::Index p = static_cast<Eigen::Index>(rs.size());
  std::vector<OrbitRep> reps;

  // Fixed points: eta = 0 (possible only if eps_nu = 0 for nu <= p).
  bool eta0_ok = true;
  for (Eigen::Index nu = 0; nu < p; ++nu)
    if (spin.eps_prime[nu] != 0) eta0_ok = false;
  if (eta0_ok) {
    std::vector<std::vector<int>> tail(static_cast<size_t>(p));
    for (Eigen::Index nu = 0; nu < p; ++nu)
      tail[static_cast<size_t>(nu)] = parity_range(-W, W, spin.eps_prime[p + nu]);
    std::vector<size_t> idx(static_cast<size_t>(p), 0);
    while (true) {
      OrbitRep rep;
      rep.xi = Eigen::VectorXi::Zero(2 * p);
      for (Eigen::Index nu = 0; nu < p; ++nu)
        rep.xi[p + nu] = tail[static_cast<size_t>(nu)][idx[static_cast<size_t>(nu)]];
      rep.kind = OrbitKind::FixedPoint;
      rep.z_orbit_count = 1;
      reps.push_back(rep);
      Eigen::Index carry = 0;
      while (carry < p) {
        if (++idx[static_cast<size_t>(carry)] < tail[static_cast<size_t>(carry)].size()) break;
        idx[static_cast<size_t>(carry)] = 0;
        ++carry;
      }
      if (carry == p) break;
    }
  }

  // Generic orbits, one block of representatives per eta != 0.
  std::vector<Eigen::VectorXi> etas;
  {
    std::vector<std::vector<int>> vals(static_cast<size_t>(p));
    for (Eigen::Index nu = 0; nu < p; ++nu)
      vals[static_cast<size_t>(nu)] = parity_range(-W, W, spin.eps_prime[nu]);
    std::vector<size_t> idx(static_cast<size_t>(p), 0);
    while (true) {
      Eigen::VectorXi eta(p);
      for (Eigen::Index nu = 0; nu < p; ++nu)
        eta[nu] = vals[static_cast<size_t>(nu)][idx[static_cast<size_t>(nu)]];
      if (eta.cwiseAbs().sum() != 0) etas.push_back(eta);
      Eigen::Index carry = 0;
      while (carry < p) {
        if (++idx[static_cast<size_t>(carry)] < vals[static_cast<size_t>(carry)].size()) break;
        idx[static_cast<size_t>(carry)] = 0;
        ++carry;
      }
      if (carry == p) break;
    }
  }
  for (const auto& eta : etas) {
    FamilyData fam;
    long long d = 0;
    for (Eigen::Index nu = 0; nu < p; ++nu) {
      if (eta[nu] == 0) continue;
      fam.J_eta.push_back(static_cast<int>(nu) + 1);
      d = ll_gcd(d, rs[static_cast<size_t>(nu)] * eta[nu]);
    }
    fam.d_eta = d;
    fam.j_eta = fam.J_eta.front();
    const Eigen::Index j = fam.j_eta - 1;
    fam.q_eta = std::abs(rs[static_cast<size_t>(j)] * eta[j]) / d;
    if (d % 2 != 0) fail(Errc::InvalidArgument, "d_eta odd: spin structure invalid");

    // Free coordinates: xi_{p+nu} for nu != j within the window; the pinned
    // coordinate xi_{p+j} ranges over [0, 2 q - 1] with its parity.
    std::vector<std::vector<int>> vals(static_cast<size_t>(p));
    for (Eigen::Index nu = 0; nu < p; ++nu) {
      vals[static_cast<size_t>(nu)] =
          nu == j ? parity_range(0, static_cast<int>(2 * fam.q_eta - 1), spin.eps_prime[p + nu])
                  : parity_range(-W, W, spin.eps_prime[p + nu]);
    }
    std::vector<size_t> idx(static_cast<size_t>(p), 0);
    while (true) {
      OrbitRep rep;
      rep.xi = Eigen::VectorXi::Zero(2 * p);
      for (Eigen::Index nu = 0; nu < p; ++nu) rep.xi[nu] = eta[nu];
      for (Eigen::Index nu = 0; nu < p; ++nu)
        rep.xi[p + nu] = vals[static_cast<size_t>(nu)][idx[static_cast<size_t>(nu)]];
      rep.kind = OrbitKind::Generic;
      rep.z_orbit_count = d / 2;
      rep.family = fam;
      reps.push_back(rep);
      Eigen::Index carry = 0;
      while (carry < p) {
        if (++idx[static_cast<size_t>(carry)] < vals[static_cast<size_t>(carry)].size()) break;
        idx[static_cast<size_t>(carry)] = 0;
        ++carry;
      }
      if (carry == p) break;
    }
  }
  sort_reps(reps);
  return reps;
}

long long threestep_q(long long r1, long long r2, long long k) {
  if (k == 0) fail(Errc::InvalidArgument, "q(k) needs k != 0");
  long long den = std::abs(r1 * k);
  return den / ll_gcd(std::abs(r2), den);
}

bool threestep_M_empty(long long l, long long q) {
  for (long long m1 = 1; m1 < l; ++m1) {
    long long m2 = l - m1;
    if ((m1 * m2) % q == 0) return false;
  }
  return true;
}

long long threestep_m(long long r1, long long r2, long long xi1, long long xi2) {
  const long long q = threestep_q(r1, r2, xi1);
  const long long bound = std::abs(r1 * xi1);
  long long count = 0;
  for (long long k = 0; xi2 + 2 * k < bound; ++k)
    if ((k * (k + xi2)) % q == 0) ++count;
  return count;
}

std::vector<OrbitRep> representatives_3step(const ValidatedModel& model,
                                            const SpinStructure& spin, int W) {
  if (model.spec.preset.kind != Preset::Kind::ThreeStep)
    fail(Errc::InvalidArgument, "model is not a threestep preset");
  const long long r1 = model.spec.preset.rs[0], r2 = model.spec.preset.rs[1];
  const int e1 = spin.eps_prime[0], e2 = spin.eps_prime[1], e3 = spin.eps_prime[2];
  std::vector<OrbitRep> reps;

  if (e1 == 0 && e2 == 0) {
    for (int x3 : parity_range(-W, W, e3)) {
      OrbitRep rep;
      rep.xi = Eigen::Vector3i(0, 0, x3);
      rep.kind = OrbitKind::FixedPoint;
      rep.z_orbit_count = 1;
      reps.push_back(rep);
    }
  }
  if (e1 == 0) {
    for (int x2 : parity_range(-W, W, e2)) {
      if (x2 == 0) continue;
      OrbitRep rep;
      rep.xi = Eigen::Vector3i(0, x2, e3);
      rep.kind = OrbitKind::Generic;
      long long rx = std::abs(r2 * x2);
      if (rx % 2 != 0) fail(Errc::InvalidArgument, "r2 xi_2 odd: spin structure invalid");
      rep.z_orbit_count = rx / 2;
      reps.push_back(rep);
    }
  }
  for (int x1 : parity_range(-W, W, e1)) {
    if (x1 == 0) continue;
    const long long q = threestep_q(r1, r2, x1);
    const long long bound = std::abs(r1 * static_cast<long long>(x1));
    for (long long x2 = e2; x2 < bound; x2 += 2) {
      if (!threestep_M_empty(x2, q)) continue;
      FamilyData fam;
      fam.q_xi1 = q;
      fam.m_count = threestep_m(r1, r2, x1, x2);
      for (int x3 : parity_range(-W, W, e3)) {
        OrbitRep rep;
        rep.xi = Eigen::Vector3i(x1, static_cast<int>(x2), x3);
        rep.kind = OrbitKind::Generic;
        rep.z_orbit_count = fam.m_count;
        rep.family = fam;
        reps.push_back(rep);
      }
    }
  }
  sort_reps(reps);
  return reps;
}

namespace {

// Candidate rational times t with A(t)^T rho = xi, from the first coordinate
// whose polynomial in t is non-constant of minimal degree (<= 2 for the
// models supported here).
std::vector<Rational> orbit_transfer_candidates(const ValidatedModel& model,
                                                const Eigen::VectorXi& rho,
                                                const Eigen::VectorXi& xi) {
  const Eigen::Index n = model.n();
  const RationalVector rq = to_rational(rho);
  // Polynomial coefficients: coadjoint(t, rho)_i = sum_k t^k c_k[i].
  std::vector<RationalVector> c;
  c.push_back(rq);
  RationalMatrix bt = model.spec.B.transpose();
  RationalVector power = rq;
  long long factorial = 1;
  for (int k = 1; k < model.step; ++k) {
    power = bt * power;
    factorial *= k;
    c.push_back(power / Rational(factorial));
  }
  int best_coord = -1, best_deg = model.step + 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    int deg = 0;
    for (int k = 1; k < static_cast<int>(c.size()); ++k)
      if (!c[static_cast<size_t>(k)][i].is_zero()) deg = k;
    if (deg >= 1 && deg < best_deg) {
      best_deg = deg;
      best_coord = static_cast<int>(i);
    }
  }
  if (best_coord < 0) return {};  // fixed point
  const Eigen::Index i = best_coord;
  Rational rhs = Rational(xi[i]) - c[0][i];
  if (best_deg == 1) return {rhs / c[1][i]};
  if (best_deg == 2) {
    // c2 t^2 + c1 t - rhs = 0 over Q.
    Rational a = c[2][i], b = c[1][i], cc = -rhs;
    Rational disc = b * b - Rational(4) * a * cc;
    if (disc.is_negative()) return {};
    auto isqrt = [](long long v) -> std::optional<long long> {
      if (v < 0) return std::nullopt;
      long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
      for (long long cand = std::max<long long>(0, r - 2); cand <= r + 2; ++cand)
        if (cand * cand == v) return cand;
      return std::nullopt;
    };
    auto sn = isqrt(disc.num()), sd = isqrt(disc.den());
    if (!sn || !sd) return {};
    Rational root(*sn, *sd);
    return {(-b + root) / (Rational(2) * a), (-b - root) / (Rational(2) * a)};
  }
  fail(Errc::UnsupportedModel, "orbit membership beyond quadratic coadjoint polynomials");
}

}  // namespace

bool in_same_r_orbit(const ValidatedModel& model, const Eigen::VectorXi& rho,
                     const Eigen::VectorXi& xi) {
  if (is_fixed_point(model, rho)) return rho == xi;
  if (is_fixed_point(model, xi)) return false;
  const RationalVector rq = to_rational(rho);
  for (const Rational& t : orbit_transfer_candidates(model, rho, xi)) {
    RationalVector image = coadjoint(model, t, rq);
    bool equal = true;
    for (Eigen::Index i = 0; i < image.size(); ++i)
      if (image[i] != Rational(xi[i])) equal = false;
    if (equal) return true;
  }
  return false;
}

Eigen::VectorXi canonical_representative(const ValidatedModel& model, const SpinStructure& spin,
                                         const Eigen::VectorXi& xi) {
  if (!sigma_contains(spin, xi)) fail(Errc::InvalidArgument, "xi is not in Sigma_{eps'}");
  if (is_fixed_point(model, xi)) return xi;
  const Preset& p = model.spec.preset;
  const RationalVector xq = to_rational(xi);
  auto apply = [&](const Rational& t) {
    RationalVector image = coadjoint(model, t, xq);
    Eigen::VectorXi out(image.size());
    for (Eigen::Index i = 0; i < image.size(); ++i) {
      if (!image[i].is_integer()) fail(Errc::InvalidArgument, "representative not integral");
      out[i] = static_cast<int>(image[i].num());
    }
    return out;
  };
  switch (p.kind) {
    case Preset::Kind::Heisenberg: {
      // Move xi_2 to eps_2.
      Rational t = Rational(spin.eps_prime[1] - xi[1]) / Rational(p.r * xi[0]);
      return apply(t);
    }
    case Preset::Kind::Block2Step: {
      const Eigen::Index pp = static_cast<Eigen::Index>(p.rs.size());
      long long d = 0;
      int j = -1;
      for (Eigen::Index nu = 0; nu < pp; ++nu) {
        if (xi[nu] == 0) continue;
        if (j < 0) j = static_cast<int>(nu);
        d = ll_gcd(d, p.rs[static_cast<size_t>(nu)] * xi[nu]);
      }
      long long rj = p.rs[static_cast<size_t>(j)] * xi[j];
      long long q = std::abs(rj) / d;
      // xi_{p+j} moves in steps of rj * (2/d) = ± 2q; land in [0, 2q).
      long long cur = xi[pp + j];
      long long target = ((cur % (2 * q)) + 2 * q) % (2 * q);
      Rational t = Rational(target - cur) / Rational(rj);
      return apply(t);
    }
    case Preset::Kind::ThreeStep: {
      const long long r1 = p.rs[0], r2 = p.rs[1];
      if (xi[0] == 0) {
        Rational t = Rational(spin.eps_prime[2] - xi[2]) / Rational(r2 * xi[1]);
        return apply(t);
      }
      const long long q = threestep_q(r1, r2, xi[0]);
      const long long rx = r1 * xi[0];
      const long long N = std::abs(rx) / 2;  // hit lattice has N residues per period
      // Smallest xi_2 + 2k >= 0 with q | k (k + xi_2); nonempty within one
      // period because multiples of N are always admissible.
      long long k0 = -static_cast<long long>(std::floor(static_cast<double>(xi[1]) / 2.0));
      while (xi[1] + 2 * k0 < 0) ++k0;
      while (xi[1] + 2 * (k0 - 1) >= 0) --k0;
      for (long long k = k0; k <= k0 + N; ++k) {
        long long prod = k * (k + xi[1]);
        if (((prod % q) + q) % q == 0) return apply(Rational(2 * k, rx));
      }
      fail(Errc::InvalidArgument, "no admissible shift found (invalid spin structure?)");
    }
    case Preset::Kind::None:
      fail(Errc::UnsupportedModel, "canonical representatives defined only for presets");
  }
  fail(Errc::UnsupportedModel, "unknown preset");
}

std::vector<OrbitRep> enumerate_representatives(const ValidatedModel& model,
                                                const SpinStructure& spin, int W) {
  switch (model.spec.preset.kind) {
    case Preset::Kind::Heisenberg:
      return representatives_heisenberg(model, spin, W);
    case Preset::Kind::Block2Step:
      return representatives_2step_block(model, spin, W);
    case Preset::Kind::ThreeStep:
      return representatives_3step(model, spin, W);
    case Preset::Kind::None:
      break;
  }
  if (model.step > 2)
    fail(Errc::UnsupportedModel, "generic enumeration supports 2-step models only");

  // Generic fallback: scan the window, group into R-orbits exactly, count
  // Z-orbits with the scan oracle. Representative = lex-least window member.
  const Eigen::Index n = model.n();
  std::vector<OrbitRep> reps;
  Eigen::VectorXi xi(n);
  std::vector<int> idx(static_cast<size_t>(n), -W);
  while (true) {
    for (Eigen::Index i = 0; i < n; ++i) xi[i] = idx[static_cast<size_t>(i)];
    if (sigma_contains(spin, xi)) {
      if (is_fixed_point(model, xi)) {
        reps.push_back(OrbitRep{xi, OrbitKind::FixedPoint, 1, std::nullopt});
      } else {
        bool seen = false;
        for (const auto& r : reps)
          if (r.kind == OrbitKind::Generic && in_same_r_orbit(model, r.xi, xi)) {
            seen = true;
            break;
          }
        if (!seen)
          reps.push_back(OrbitRep{xi, OrbitKind::Generic,
                                  zorbit_count_oracle(model, spin, xi), std::nullopt});
      }
    }
    Eigen::Index carry = n - 1;
    while (carry >= 0) {
      if (++idx[static_cast<size_t>(carry)] <= W) break;
      idx[static_cast<size_t>(carry)] = -W;
      --carry;
    }
    if (carry < 0) break;
  }
  sort_reps(reps);
  return reps;
}

}  // namespace subdirac
