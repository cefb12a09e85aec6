#include "subdirac/spin.hpp"

#include "subdirac/errors.hpp"

namespace subdirac {

std::string SpinStructure::str() const {
  std::string s;
  for (Eigen::Index i = 0; i < eps_prime.size(); ++i) s += eps_prime[i] ? '1' : '0';
  s += ':';
  s += eps_dot ? '1' : '0';
  return s;
}

bool is_valid_eps(const ValidatedModel& model, const Eigen::VectorXi& eps_prime) {
  const Eigen::Index n = model.n();
  if (eps_prime.size() != n) fail(Errc::InvalidArgument, "eps' must have n components");
  for (Eigen::Index nu = 0; nu < n; ++nu) {
    // sum_mu eps'(e_mu) (A(1)-I)_{mu nu}; entries of A(1) are integers.
    long long sum = 0;
    for (Eigen::Index mu = 0; mu < n; ++mu) {
      Rational entry = model.A1(mu, nu) - Rational(mu == nu ? 1 : 0);
      sum += (eps_prime[mu] & 1) * entry.num();
    }
    if (sum % 2 != 0) return false;
  }
  return true;
}

std::vector<SpinStructure> enumerate_spin_structures(const ValidatedModel& model) {
  const Eigen::Index n = model.n();
  if (n > 24) fail(Errc::DimensionTooLarge, "spin enumeration limited to n <= 24");
  std::vector<SpinStructure> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Eigen::VectorXi eps(n);
    for (Eigen::Index i = 0; i < n; ++i) eps[i] = (mask >> i) & 1;
    if (!is_valid_eps(model, eps)) continue;
    for (int dot = 0; dot <= 1; ++dot) out.push_back(SpinStructure{eps, dot});
  }
  return out;
}

bool sigma_contains(const SpinStructure& spin, const Eigen::VectorXi& xi) {
  if (xi.size() != spin.eps_prime.size()) return false;
  for (Eigen::Index i = 0; i < xi.size(); ++i)
    if (((xi[i] - spin.eps_prime[i]) % 2 + 2) % 2 != 0) return false;
  return true;
}

bool sigma_contains(const SpinStructure& spin, const RationalVector& xi) {
  if (xi.size() != spin.eps_prime.size()) return false;
  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    if (!xi[i].is_integer()) return false;
    if (((xi[i].num() - spin.eps_prime[i]) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

SpinStructure parse_eps(const std::string& s, Eigen::Index n) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon != static_cast<size_t>(n) || s.size() != colon + 2)
    fail(Errc::InvalidArgument, "eps must be given as n bits, colon, one bit, e.g. \"00:0\"");
  SpinStructure spin;
  spin.eps_prime.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    char c = s[static_cast<size_t>(i)];
    if (c != '0' && c != '1') fail(Errc::InvalidArgument, "eps bits must be 0 or 1");
    spin.eps_prime[i] = c - '0';
  }
  char cdot = s[colon + 1];
  if (cdot != '0' && cdot != '1') fail(Errc::InvalidArgument, "eps bits must be 0 or 1");
  spin.eps_dot = cdot - '0';
  return spin;
}

}  // namespace subdirac
