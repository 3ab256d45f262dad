#include "walklab/quadratic.hpp"

#include <sstream>
#include <stdexcept>

namespace walklab {

SquarefreeDecomposition squarefree_part(const BigInt& d) {
  if (d < 1) throw std::domain_error("squarefree_part: argument must be positive");
  BigInt rest = d;
  BigInt s = 1;
  BigInt m = 1;
  for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  m *= rest;
  return {m, s};
}

int sign_of(const Rational& a, const Rational& b, const BigInt& m) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (m == 1) return Rational(a + b).sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 m.
  const Rational lhs = a * a;
  const Rational rhs = b * b * Rational(m);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

QuadraticNumber::QuadraticNumber(const Rational& p, const Rational& q, const BigInt& d) : p_(p) {
  if (d < 0) throw std::domain_error("QuadraticNumber: negative radicand");
  if (q == 0 || d == 0) return;
  const auto [m, s] = squarefree_part(d);
  if (m == 1) {
    p_ += q * Rational(s);
    return;
  }
  q_ = q * Rational(s);
  m_ = m;
}

BigInt QuadraticNumber::common_field(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.is_rational()) return b.m_;
  if (b.is_rational() || a.m_ == b.m_) return a.m_;
  throw std::domain_error("QuadraticNumber: values live in different quadratic fields");
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber r = *this;
  r.q_ = -r.q_;
  return r;
}

Rational QuadraticNumber::norm() const { return p_ * p_ - q_ * q_ * Rational(m_); }

int QuadraticNumber::sign() const { return sign_of(p_, q_, m_); }

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  const BigInt m = QuadraticNumber::common_field(a, b);
  return QuadraticNumber(a.p_ + b.p_, a.q_ + b.q_, m);
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) { return a + (-b); }

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  const BigInt m = QuadraticNumber::common_field(a, b);
  const Rational rm(m);
  return QuadraticNumber(a.p_ * b.p_ + a.q_ * b.q_ * rm, a.p_ * b.q_ + a.q_ * b.p_, m);
}

QuadraticNumber operator/(const QuadraticNumber& a, const Rational& r) {
  if (r == 0) throw std::domain_error("QuadraticNumber: division by zero");
  return QuadraticNumber(a.p_ / r, a.q_ / r, a.m_);
}

QuadraticNumber QuadraticNumber::pow(unsigned e) const {
  QuadraticNumber result(1L);
  QuadraticNumber base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  int s = 0;
  if (a.is_rational() || b.is_rational() || a.m_ == b.m_) {
    const QuadraticNumber d = a - b;
    s = d.sign();
  } else {
    // a - b = X + Y with X = (pa - pb) + qa*sqrt(ma), Y = -qb*sqrt(mb).
    const Rational x0 = a.p_ - b.p_;
    const Rational x1 = a.q_;
    const Rational y = -b.q_;
    const int sx = sign_of(x0, x1, a.m_);
    const int sy = y.sign();
    if (sx == 0) {
      s = sy;
    } else if (sy == 0 || sx == sy) {
      s = sx;
    } else {
      // |X| vs |Y| via X^2 - Y^2 = (x0^2 + x1^2 ma - y^2 mb) + 2 x0 x1 sqrt(ma)
      const int cmp = sign_of(x0 * x0 + x1 * x1 * Rational(a.m_) - y * y * Rational(b.m_),
                              2 * x0 * x1, a.m_);
      s = cmp == 0 ? 0 : (cmp > 0 ? sx : sy);
    }
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return p_.str();
  std::ostringstream os;
  if (p_ != 0) os << p_.str() << (q_ > 0 ? "+" : "-");
  else if (q_ < 0) os << "-";
  const Rational mag = q_ < 0 ? Rational(-q_) : q_;
  const BigInt num = numerator_of(mag);
  const BigInt den = denominator_of(mag);
  if (num != 1) os << num.str();
  os << "√" << m_.str();
  if (den != 1) os << "/" << den.str();
  return os.str();
}

bool is_quadratic_algebraic_integer(const QuadraticNumber& x) {
  const Rational& p = x.rational_part();
  const Rational& q = x.irrational_coeff();
  if (x.is_rational()) return is_integer(p);
  const BigInt m = x.radicand();
  const BigInt r = m % 4;
  if (r == 2 || r == 3) return is_integer(p) && is_integer(q);
  // m = 1 (mod 4): x = u + v (1 + sqrt m)/2 with u, v integers.
  const Rational two_p = 2 * p;
  const Rational two_q = 2 * q;
  if (!is_integer(two_p) || !is_integer(two_q)) return false;
  return (numerator_of(two_p) - numerator_of(two_q)) % 2 == 0;
}

}  // namespace walklab
