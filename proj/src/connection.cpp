#include "subdirac/connection.hpp"

#include "subdirac/errors.hpp"
#include "subdirac/linalg_exact.hpp"

namespace subdirac {

Rational ChristoffelTable::alpha_rational() const {
  if (d < 3) return Rational(0);
  return Rational(-1, 2) * (at(0, 1, 2) + at(1, 2, 0) + at(2, 0, 1));
}

namespace {

// Coordinates of x in the basis (s_1..s_d, v_1..v_l) of g; the first d are
// the projection onto H expressed in the orthonormal frame.
RationalVector basis_coordinates(const ValidatedModel& model, const GVector& x) {
  const Eigen::Index n = model.n();
  const int d = model.d();
  RationalMatrix basis(n + 1, n + 1);
  for (int j = 1; j <= d; ++j) {
    GVector g = frame_in_g(model, j);
    for (Eigen::Index i = 0; i < n; ++i) basis(i, j - 1) = g.v[i];
    basis(n, j - 1) = g.c;
  }
  for (size_t j = 0; j < model.spec.complement.size(); ++j) {
    const auto& v = model.spec.complement[j];
    for (Eigen::Index i = 0; i < n; ++i) basis(i, d + static_cast<Eigen::Index>(j)) = v[i];
    basis(n, d + static_cast<Eigen::Index>(j)) = v.size() == n + 1 ? v[n] : Rational(0);
  }
  RationalVector rhs(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) rhs[i] = x.v[i];
  rhs[n] = x.c;
  auto sol = solve_exact(basis, rhs);
  if (!sol) fail(Errc::BadFrame, "frame and complement do not span g");
  return *sol;
}

}  // namespace

ChristoffelTable christoffel(const ValidatedModel& model) {
  const int d = model.d();
  ChristoffelTable table;
  table.d = d;
  table.gamma.assign(static_cast<size_t>(d) * d * d, Rational(0));

  if (model.spec.gamma_override) {
    table.gamma = *model.spec.gamma_override;
    return table;
  }

  if (model.d() < model.n() + 1 && model.spec.complement.empty())
    fail(Errc::NoComplement, "Koszul connection needs a complement V");

  // <pr[s_i,s_j], s_k> for all pairs; pr is projection onto H along V and the
  // frame is orthonormal, so the pairing is the k-th frame coordinate.
  std::vector<GVector> s;
  for (int j = 1; j <= d; ++j) s.push_back(frame_in_g(model, j));
  std::vector<RationalVector> proj(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      proj[static_cast<size_t>(i * d + j)] =
          basis_coordinates(model, lie_bracket(model, s[static_cast<size_t>(i)],
                                               s[static_cast<size_t>(j)]));

  const Rational half(1, 2);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        table.at(i, j, k) = half * (proj[static_cast<size_t>(i * d + j)][k] -
                                    proj[static_cast<size_t>(i * d + k)][j] -
                                    proj[static_cast<size_t>(j * d + k)][i]);
  return table;
}

bool is_symmetric_connection(const ValidatedModel& model, const ChristoffelTable& table) {
  const int d = table.d;
  bool divergence_free = true;
  for (int j = 0; j < d && divergence_free; ++j) {
    Rational sum(0);
    for (int i = 0; i < d; ++i) sum += table.at(i, j, i);
    if (!sum.is_zero()) divergence_free = false;
  }

  // Codim-1 cross-check of Lemma (sym_of_D): [Gamma(H), xi_1] subset Gamma(H).
  if (!model.spec.gamma_override && model.spec.complement.size() == 1) {
    GVector v;
    const auto& cv = model.spec.complement[0];
    v.v = RationalVector(model.n());
    for (Eigen::Index i = 0; i < model.n(); ++i) v.v[i] = cv[i];
    v.c = cv.size() == model.n() + 1 ? cv[model.n()] : Rational(0);
    bool brackets_in_h = true;
    for (int j = 1; j <= d && brackets_in_h; ++j) {
      GVector br = lie_bracket(model, frame_in_g(model, j), v);
      RationalVector coords = [&] {
        // Reuse the full-basis decomposition from christoffel().
        const Eigen::Index n = model.n();
        RationalMatrix basis(n + 1, n + 1);
        for (int c = 1; c <= d; ++c) {
          GVector g = frame_in_g(model, c);
          for (Eigen::Index i = 0; i < n; ++i) basis(i, c - 1) = g.v[i];
          basis(n, c - 1) = g.c;
        }
        for (size_t c = 0; c < model.spec.complement.size(); ++c) {
          const auto& w = model.spec.complement[c];
          for (Eigen::Index i = 0; i < n; ++i) basis(i, d + static_cast<Eigen::Index>(c)) = w[i];
          basis(n, d + static_cast<Eigen::Index>(c)) = w.size() == n + 1 ? w[n] : Rational(0);
        }
        RationalVector rhs(n + 1);
        for (Eigen::Index i = 0; i < n; ++i) rhs[i] = br.v[i];
        rhs[n] = br.c;
        auto sol = solve_exact(basis, rhs);
        if (!sol) fail(Errc::BadFrame, "frame and complement do not span g");
        return *sol;
      }();
      if (!coords[d].is_zero()) brackets_in_h = false;
    }
    if (brackets_in_h != divergence_free)
      fail(Errc::InvalidArgument, "symmetry criteria disagree; model is inconsistent");
  }
  return divergence_free;
}

}  // namespace subdirac
