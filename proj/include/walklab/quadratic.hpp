#pragma once

#include "walklab/types.hpp"

#include <compare>
#include <string>
#include <utility>

namespace walklab {

struct SquarefreeDecomposition {
  BigInt m;  ///< square-free part
  BigInt s;  ///< d == s*s*m
};

/// d = s^2 * m with m square-free, by trial division. Throws for d < 1.
SquarefreeDecomposition squarefree_part(const BigInt& d);

/// Exact real number p + q*sqrt(m) with rational p, q and square-free m > 1.
///
/// Rational values are stored with q == 0 and radicand 1. Arithmetic between
/// two irrational values is only defined when they live in the same field
/// Q(sqrt m); comparisons work across fields.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& r) : p_(r) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(long v) : p_(v) {}             // NOLINT(google-explicit-constructor)
  /// p + q*sqrt(d) for any integer d >= 0; d is reduced to its square-free part.
  QuadraticNumber(const Rational& p, const Rational& q, const BigInt& d);

  const Rational& rational_part() const { return p_; }
  const Rational& irrational_coeff() const { return q_; }
  /// Square-free radicand; 1 for rational values.
  const BigInt& radicand() const { return m_; }
  bool is_rational() const { return q_ == 0; }

  QuadraticNumber conjugate() const;
  /// x * conj(x), always rational.
  Rational norm() const;
  /// x + conj(x), always rational.
  Rational trace() const { return 2 * p_; }

  int sign() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator/(const QuadraticNumber& a, const Rational& r);
  QuadraticNumber pow(unsigned e) const;

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.m_ == b.m_;
  }
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

  /// "3", "-1/3", "3√2", "√3/2", "1/2+√5/2".
  std::string to_string() const;

 private:
  static BigInt common_field(const QuadraticNumber& a, const QuadraticNumber& b);

  Rational p_{0};
  Rational q_{0};
  BigInt m_{1};
};

/// Sign of a + b*sqrt(m) for square-free m >= 1.
int sign_of(const Rational& a, const Rational& b, const BigInt& m);

/// Membership of x in the ring of algebraic integers of Q(sqrt m):
/// p, q in Z when m = 2,3 (mod 4); 2p, 2q in Z with 2p = 2q (mod 2) when
/// m = 1 (mod 4). For rational x this is membership in Z.
bool is_quadratic_algebraic_integer(const QuadraticNumber& x);

}  // namespace walklab
