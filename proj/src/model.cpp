#include "subdirac/model.hpp"

#include <numeric>

#include "subdirac/errors.hpp"
#include "subdirac/linalg_exact.hpp"

namespace subdirac {

namespace {

RationalMatrix rational_identity(Eigen::Index n) {
  RationalMatrix id(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) id(i, j) = Rational(i == j ? 1 : 0);
  return id;
}

RationalMatrix rational_zero(Eigen::Index r, Eigen::Index c) {
  RationalMatrix z(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) z(i, j) = Rational(0);
  return z;
}

bool is_zero_matrix(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

Rational det_exact(RationalMatrix m) {
  const Eigen::Index n = m.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

}  // namespace

GVector lie_bracket(const ValidatedModel& model, const GVector& x, const GVector& y) {
  GVector out;
  out.v = x.c * (model.spec.B * y.v) - y.c * (model.spec.B * x.v);
  out.c = Rational(0);
  return out;
}

GVector frame_in_g(const ValidatedModel& model, int j) {
  GVector g;
  if (j < model.d()) {
    g.v = model.frame(j);
    g.c = Rational(0);
  } else {
    g.v = RationalVector::Constant(model.n(), Rational(0));
    g.c = Rational(1) / model.spec.b_norm;  // s_d = b/|b|, b = (0,1)
  }
  return g;
}

ValidatedModel validate_model(const ModelSpec& spec) {
  ValidatedModel m;
  m.spec = spec;
  const Eigen::Index n = spec.n;

  if (n < 1 || spec.B.rows() != n || spec.B.cols() != n)
    fail(Errc::BadFrame, "B must be n x n with n >= 1");
  if (spec.d < 2 || spec.d > n + 1)
    fail(Errc::BadFrame, "rank d must satisfy 2 <= d <= n+1");
  if (static_cast<Eigen::Index>(spec.frame.size()) != spec.d - 1)
    fail(Errc::BadFrame, "frame must contain d-1 vectors");
  for (const auto& f : spec.frame)
    if (f.size() != n) fail(Errc::BadFrame, "frame vectors must lie in Q^n");
  if (!(Rational(0) < spec.b_norm)) fail(Errc::BadFrame, "|b| must be positive");
  {
    RationalMatrix fm(n, spec.d - 1);
    for (int j = 0; j < spec.d - 1; ++j) fm.col(j) = spec.frame[static_cast<size_t>(j)];
    if (rank_exact(fm) != spec.d - 1) fail(Errc::BadFrame, "frame vectors are linearly dependent");
  }
  m.checked.push_back("frame");

  // Nilpotency: least J with B^J = 0, exact.
  RationalMatrix power = rational_identity(n);
  int step = 0;
  for (int k = 1; k <= n; ++k) {
    power = power * spec.B;
    if (is_zero_matrix(power)) {
      step = k;
      break;
    }
  }
  if (step == 0) fail(Errc::NotNilpotent, "B^n != 0");
  m.step = step;
  m.checked.push_back("nilpotent");

  // A(1) = exp(B) integral with determinant 1.
  m.A1 = rational_identity(n);
  RationalMatrix term = rational_identity(n);
  long long factorial = 1;
  for (int k = 1; k < step; ++k) {
    term = term * spec.B;
    factorial *= k;
    m.A1 += term / Rational(factorial);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!m.A1(i, j).is_integer()) fail(Errc::NotIntegralSL, "A(1) has non-integer entries");
  if (det_exact(m.A1) != Rational(1)) fail(Errc::NotIntegralSL, "det A(1) != 1");
  m.checked.push_back("integral_sl");

  // Bracket-generating: iterate Gamma_{j+1} = Gamma_j + [Gamma_0, Gamma_j]
  // in g = Q^n + Q b until the span stabilises; it must reach dim n+1.
  {
    std::vector<GVector> h0;
    for (int j = 1; j <= spec.d; ++j) h0.push_back(frame_in_g(m, j));
    std::vector<GVector> span = h0;
    auto span_rank = [&](const std::vector<GVector>& vs) {
      RationalMatrix mm(n + 1, static_cast<Eigen::Index>(vs.size()));
      for (size_t j = 0; j < vs.size(); ++j) {
        for (Eigen::Index i = 0; i < n; ++i) mm(i, static_cast<Eigen::Index>(j)) = vs[j].v[i];
        mm(n, static_cast<Eigen::Index>(j)) = vs[j].c;
      }
      return rank_exact(mm);
    };
    Eigen::Index rank = span_rank(span);
    for (int iter = 0; iter <= n + 1; ++iter) {
      std::vector<GVector> next = span;
      for (const auto& x : h0)
        for (const auto& y : span) next.push_back(lie_bracket(m, x, y));
      Eigen::Index next_rank = span_rank(next);
      span = std::move(next);
      if (next_rank == rank) break;
      rank = next_rank;
    }
    if (rank != n + 1) fail(Errc::NotBracketGenerating, "H does not bracket-generate g");
  }
  m.checked.push_back("bracket_generating");

  // Complement: must together with the frame form a basis of g.
  if (!spec.complement.empty() || spec.d < n + 1) {
    if (static_cast<Eigen::Index>(spec.complement.size()) != n + 1 - spec.d)
      fail(Errc::BadFrame, "complement must contain n+1-d vectors");
    RationalMatrix basis(n + 1, n + 1);
    for (int j = 1; j <= spec.d; ++j) {
      GVector g = frame_in_g(m, j);
      for (Eigen::Index i = 0; i < n; ++i) basis(i, j - 1) = g.v[i];
      basis(n, j - 1) = g.c;
    }
    for (size_t j = 0; j < spec.complement.size(); ++j) {
      const auto& v = spec.complement[j];
      if (v.size() != n && v.size() != n + 1)
        fail(Errc::BadFrame, "complement vectors must lie in Q^n or Q^{n+1}");
      for (Eigen::Index i = 0; i < n; ++i) basis(i, spec.d + static_cast<Eigen::Index>(j)) = v[i];
      basis(n, spec.d + static_cast<Eigen::Index>(j)) =
          v.size() == n + 1 ? v[n] : Rational(0);
    }
    if (rank_exact(basis) != n + 1)
      fail(Errc::BadFrame, "frame and complement do not form a basis of g");
    m.checked.push_back("complement_basis");
  }

  if (spec.gamma_override) {
    const auto& g = *spec.gamma_override;
    const size_t d = static_cast<size_t>(spec.d);
    if (g.size() != d * d * d) fail(Errc::BadFrame, "gamma override must have d^3 entries");
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k)
          if (g[(i * d + j) * d + k] + g[(i * d + k) * d + j] != Rational(0))
            fail(Errc::BadFrame, "gamma override is not metric");
    m.checked.push_back("gamma_metric");
  }

  return m;
}

RationalMatrix exp_tB(const ValidatedModel& model, const Rational& t) {
  const Eigen::Index n = model.n();
  RationalMatrix a = rational_identity(n);
  RationalMatrix term = rational_identity(n);
  long long factorial = 1;
  for (int k = 1; k < model.step; ++k) {
    term = term * model.spec.B;
    factorial *= k;
    Rational tk(1);
    for (int i = 0; i < k; ++i) tk *= t;
    a += term * (tk / Rational(factorial));
  }
  return a;
}

RationalVector coadjoint(const ValidatedModel& model, const Rational& t,
                         const RationalVector& xi) {
  return exp_tB(model, t).transpose() * xi;
}

namespace {

IntMatrix int_identity(Eigen::Index n) {
  IntMatrix id = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m_in) {
  const Eigen::Index p = m_in.rows();
  if (m_in.cols() != p) fail(Errc::InvalidArgument, "Smith normal form expects a square matrix");

  // Track D = U * M * V with U, V unimodular.
  IntMatrix D = m_in, U = int_identity(p), V = int_identity(p);

  for (Eigen::Index k = 0; k < p; ++k) {
    // Move a nonzero pivot to (k,k).
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = k; i < p && pr < 0; ++i)
      for (Eigen::Index j = k; j < p; ++j)
        if (D(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) fail(Errc::SingularMatrix, "matrix is singular");
    D.row(k).swap(D.row(pr));
    U.row(k).swap(U.row(pr));
    D.col(k).swap(D.col(pc));
    V.col(k).swap(V.col(pc));

    // Euclidean reduction of row/column k until the pivot divides everything
    // in its row and column.
    bool again = true;
    while (again) {
      again = false;
      for (Eigen::Index i = k + 1; i < p; ++i) {
        if (D(i, k) == 0) continue;
        long long q = D(i, k) / D(k, k);
        D.row(i) -= q * D.row(k);
        U.row(i) -= q * U.row(k);
        if (D(i, k) != 0) {  // remainder smaller than pivot: swap and repeat
          D.row(k).swap(D.row(i));
          U.row(k).swap(U.row(i));
          again = true;
        }
      }
      for (Eigen::Index j = k + 1; j < p; ++j) {
        if (D(k, j) == 0) continue;
        long long q = D(k, j) / D(k, k);
        D.col(j) -= q * D.col(k);
        V.col(j) -= q * V.col(k);
        if (D(k, j) != 0) {
          D.col(k).swap(D.col(j));
          V.col(k).swap(V.col(j));
          again = true;
        }
      }
    }
    if (D(k, k) < 0) {
      D.row(k) = -D.row(k);
      U.row(k) = -U.row(k);
    }
    // Enforce divisibility d_k | D(i,j) for the trailing block.
    for (Eigen::Index i = k + 1; i < p; ++i)
      for (Eigen::Index j = k + 1; j < p; ++j)
        if (D(i, j) % D(k, k) != 0) {
          D.row(k) += D.row(i);
          U.row(k) += U.row(i);
          // Re-run elimination for this pivot.
          --k;
          i = p;
          break;
        }
  }

  // D now has the ascending chain d_1 | d_2 | ... ; the stated convention is
  // descending, so reverse the order with a permutation.
  IntMatrix P = IntMatrix::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) P(i, p - 1 - i) = 1;
  SmithResult out;
  out.R = P * D * P;
  out.Q1 = P * U;
  // R = Q1 * M * Q2^{-1} with Q2^{-1} = V * P.
  IntMatrix VP = V * P;
  RationalMatrix vr(p, p);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j) vr(i, j) = Rational(VP(i, j));
  auto inv = inverse_exact(vr);
  if (!inv) fail(Errc::SingularMatrix, "unimodular factor not invertible");
  out.Q2 = IntMatrix(p, p);
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < p; ++j) {
      if (!(*inv)(i, j).is_integer()) fail(Errc::SingularMatrix, "Q2 not integral");
      out.Q2(i, j) = (*inv)(i, j).num();
    }
  return out;
}

ModelSpec make_heisenberg(long long r, const Rational& d, const Rational& T, int rank) {
  if (r <= 0) fail(Errc::InvalidArgument, "heisenberg preset needs r > 0");
  if (rank != 2 && rank != 3) fail(Errc::InvalidArgument, "heisenberg rank must be 2 or 3");
  if (!(Rational(0) < d) || !(Rational(0) < T))
    fail(Errc::InvalidArgument, "heisenberg preset needs d, T > 0");
  ModelSpec spec;
  spec.n = 2;
  spec.B = RationalMatrix(2, 2);
  spec.B << Rational(0), Rational(r), Rational(0), Rational(0);
  spec.d = rank;
  spec.b_norm = Rational(r) / d;  // s3 = (d/r) b has unit length
  RationalVector s1(2), s2(2);
  s1 << Rational(1) / T, Rational(0);
  s2 << Rational(0), -d;
  if (rank == 3) {
    spec.frame = {s1, s2};  // Riemannian: H = TG, V = 0
  } else {
    spec.frame = {s2};  // sub-Riemannian: H = span{s2, s3}, V = R s1
    RationalVector e1(2);
    e1 << Rational(1), Rational(0);
    spec.complement = {e1};
  }
  spec.preset.kind = Preset::Kind::Heisenberg;
  spec.preset.r = r;
  spec.preset.d_param = d;
  spec.preset.T_param = T;
  return spec;
}

ModelSpec make_block2step(const std::vector<long long>& rs) {
  const Eigen::Index p = static_cast<Eigen::Index>(rs.size());
  if (p < 1) fail(Errc::InvalidArgument, "block2step preset needs p >= 1");
  for (size_t i = 0; i < rs.size(); ++i) {
    if (rs[i] <= 0) fail(Errc::InvalidArgument, "block2step r_nu must be positive");
    if (i + 1 < rs.size() && rs[i] % rs[i + 1] != 0)
      fail(Errc::InvalidArgument, "block2step requires r_{nu+1} | r_nu");
  }
  ModelSpec spec;
  spec.n = 2 * p;
  spec.B = RationalMatrix(2 * p, 2 * p);
  for (Eigen::Index i = 0; i < 2 * p; ++i)
    for (Eigen::Index j = 0; j < 2 * p; ++j) spec.B(i, j) = Rational(0);
  for (Eigen::Index nu = 0; nu < p; ++nu) spec.B(nu, p + nu) = Rational(rs[static_cast<size_t>(nu)]);
  spec.d = static_cast<int>(p) + 1;
  spec.b_norm = Rational(1);
  for (Eigen::Index nu = 0; nu < p; ++nu) {
    RationalVector s = RationalVector::Constant(2 * p, Rational(0));
    s[p + nu] = Rational(1);
    spec.frame.push_back(s);
  }
  for (Eigen::Index nu = 0; nu < p; ++nu) {
    RationalVector v = RationalVector::Constant(2 * p, Rational(0));
    v[nu] = Rational(1);
    spec.complement.push_back(v);
  }
  spec.preset.kind = Preset::Kind::Block2Step;
  spec.preset.rs = rs;
  return spec;
}

ModelSpec make_threestep(long long r1, long long r2) {
  if (r1 == 0 || r2 == 0) fail(Errc::InvalidArgument, "threestep preset needs r1, r2 != 0");
  ModelSpec spec;
  spec.n = 3;
  spec.B = RationalMatrix(3, 3);
  spec.B << Rational(0), Rational(r1), Rational(0),
      Rational(0), Rational(0), Rational(r2),
      Rational(0), Rational(0), Rational(0);
  spec.d = 2;
  spec.b_norm = Rational(1);
  RationalVector s1 = RationalVector::Constant(3, Rational(0));
  s1[2] = Rational(1);  // s1 = e3
  spec.frame = {s1};
  RationalVector e1 = RationalVector::Constant(3, Rational(0));
  RationalVector e2 = RationalVector::Constant(3, Rational(0));
  e1[0] = Rational(1);
  e2[1] = Rational(1);
  spec.complement = {e1, e2};
  spec.preset.kind = Preset::Kind::ThreeStep;
  spec.preset.rs = {r1, r2};
  return spec;
}

}  // namespace subdirac
