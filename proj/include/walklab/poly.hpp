#pragma once

#include "walklab/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace walklab {

/// Dense univariate polynomial with exact coefficients, constant term first.
///
/// The coefficient vector never carries trailing zeros, so `degree()` is the
/// index of the last stored coefficient and the zero polynomial is empty.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Scalar& v) { return Poly(std::vector<Scalar>{v}); }
  static Poly monomial(const Scalar& v, std::size_t power) {
    std::vector<Scalar> c(power + 1, Scalar(0));
    c[power] = v;
    return Poly(std::move(c));
  }
  /// x - root
  static Poly linear_root(const Scalar& root) { return Poly({Scalar(-root), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

  template <typename T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const {
    Poly result = constant(Scalar(1));
    Poly base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// p(s * x)
  Poly scale_argument(const Scalar& s) const {
    Poly r = *this;
    Scalar f(1);
    for (auto& v : r.c_) {
      v *= f;
      f *= s;
    }
    r.trim();
    return r;
  }

  /// p(x^e)
  Poly substitute_power(std::size_t e) const {
    if (is_zero()) return Poly();
    std::vector<Scalar> r(c_.size() == 0 ? 0 : (c_.size() - 1) * e + 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
    return Poly(std::move(r));
  }

  /// Number of leading (lowest-order) zero coefficients, i.e. the multiplicity of 0 as a root.
  std::size_t low_order_zeros() const {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    return i;
  }

  Poly shift_down(std::size_t s) const {
    if (s >= c_.size()) return Poly();
    return Poly(std::vector<Scalar>(c_.begin() + static_cast<std::ptrdiff_t>(s), c_.end()));
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

/// Quotient and remainder. The divisor's leading coefficient must be
/// invertible in Scalar (any nonzero value for Rational, +-1 for BigInt).
template <typename Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> divmod(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  std::vector<Scalar> rem = a.coeffs();
  if (a.degree() < db) return {Poly<Scalar>(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Scalar f = top / lead;
    if constexpr (std::is_same_v<Scalar, BigInt>) {
      if (f * lead != top) throw std::domain_error("divisor leading coefficient is not a unit");
    }
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<Scalar>(std::move(quot)), Poly<Scalar>(std::move(rem))};
}

/// a / b when b divides a exactly.
template <typename Scalar>
std::optional<Poly<Scalar>> exact_divide(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

RatPoly monic(const RatPoly& p);
RatPoly gcd(const RatPoly& a, const RatPoly& b);

RatPoly to_rational(const IntPoly& p);
/// Integer view of a rational polynomial; empty when some coefficient is not integral.
std::optional<IntPoly> to_integer(const RatPoly& p);

/// Primitive integer polynomial with positive leading coefficient, proportional to p.
IntPoly primitive_part(const RatPoly& p);

}  // namespace walklab
