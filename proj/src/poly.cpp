#include "walklab/poly.hpp"

#include <sstream>

namespace walklab {

std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v) { return v.str(); }

namespace {

template <typename Scalar>
std::string render(const std::vector<Scalar>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = c.size(); idx-- > 0;) {
    const Scalar& v = c[idx];
    if (v == 0) continue;
    const bool negative = v < 0;
    const Scalar mag = negative ? Scalar(-v) : v;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (idx == 0 || !unit) {
      std::string s = to_string(mag);
      if (idx != 0 && s.find('/') != std::string::npos) s = "(" + s + ")";
      os << s;
    }
    if (idx >= 1) os << var;
    if (idx >= 2) os << "^" << idx;
  }
  return os.str();
}

}  // namespace

template <>
std::string Poly<BigInt>::to_string(const std::string& var) const {
  return render(c_, var);
}

template <>
std::string Poly<Rational>::to_string(const std::string& var) const {
  return render(c_, var);
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::optional<IntPoly> to_integer(const RatPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if (!is_integer(v)) return std::nullopt;
    c.push_back(numerator_of(v));
  }
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  BigInt den = 1;
  for (const auto& v : p.coeffs()) den = boost::multiprecision::lcm(den, denominator_of(v));
  std::vector<BigInt> c;
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    c.push_back(numerator_of(v) * (den / denominator_of(v)));
    g = boost::multiprecision::gcd(g, c.back());
  }
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

}  // namespace walklab
