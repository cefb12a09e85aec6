#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "subdirac/errors.hpp"

namespace subdirac {

// Exact rational scalar over 64-bit numerator/denominator. All lattice and
// group arithmetic in this library is done in this type; floating point only
// enters the spectral modules. Intermediates are carried in __int128 and
// narrowing overflow throws instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(int n) : num_(n), den_(1) {}        // NOLINT
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return make(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return make(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Errc::InvalidArgument, "rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& s);

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  static long long narrow(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
      fail(Errc::Overflow, "rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) fail(Errc::InvalidArgument, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  long long num_;
  long long den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(Errc::InvalidArgument, "cannot parse rational '" + s + "'");
  }
}

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline RationalVector to_rational(const Eigen::VectorXi& v) {
  RationalVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

inline Eigen::VectorXd to_double(const RationalVector& v) {
  Eigen::VectorXd r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
  return r;
}

// Standard pairing <xi, v> = sum_i xi_i v_i (dual pairing, not the metric).
inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace subdirac

namespace Eigen {

template <>
struct NumTraits<subdirac::Rational> {
  using Real = subdirac::Rational;
  using NonInteger = subdirac::Rational;
  using Nested = subdirac::Rational;
  using Literal = subdirac::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 6,
  };
  static inline Real epsilon() { return subdirac::Rational(0); }
  static inline Real dummy_precision() { return subdirac::Rational(0); }
  static inline int digits10() { return 18; }
};

}  // namespace Eigen
