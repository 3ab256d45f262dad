#include "walklab/feasibility.hpp"

#include "walklab/structure.hpp"

#include <cstdint>
#include <unordered_set>
#include <stdexcept>

namespace walklab {

std::string_view class_name(ThetaClass c) {
  switch (c) {
    case ThetaClass::Half: return "half";
    case ThetaClass::Sqrt2: return "sqrt2";
    case ThetaClass::Sqrt3: return "sqrt3";
  }
  return "";
}

std::optional<ThetaClass> parse_class(std::string_view name) {
  for (ThetaClass c : kAllThetaClasses)
    if (class_name(c) == name) return c;
  return std::nullopt;
}

Rational theta_squared(ThetaClass c, long k) {
  const Rational kk = Rational(k) * k;
  switch (c) {
    case ThetaClass::Half: return kk / 4;
    case ThetaClass::Sqrt2: return kk / 2;
    case ThetaClass::Sqrt3: return 3 * kk / 4;
  }
  return 0;
}

QuadraticNumber theta_value(ThetaClass c, long k) {
  const Rational half_k(k, 2);
  switch (c) {
    case ThetaClass::Half: return QuadraticNumber(half_k);
    case ThetaClass::Sqrt2: return QuadraticNumber(Rational(0), half_k, BigInt(2));
    case ThetaClass::Sqrt3: return QuadraticNumber(Rational(0), half_k, BigInt(3));
  }
  return {};
}

Spectrum FeasibleRow::spectrum() const {
  const QuadraticNumber theta = theta_value(theta_class, k);
  std::vector<SpectrumEntry> e{{QuadraticNumber(k), 1}, {QuadraticNumber(-k), 1}};
  if (a > 0) {
    e.push_back({theta, a});
    e.push_back({-theta, a});
  }
  if (b > 0) e.push_back({QuadraticNumber(0), b});
  return Spectrum(std::move(e));
}

std::string FeasibleRow::elimination_reason() const {
  if (!is_integer(q)) return "q ∉ ℤ";
  if (q < 0) return "q<0";
  if (!is_integer(q_x)) return "q_x ∉ ℤ";
  if (q_x < 0) return "q_x<0";
  return "";
}

std::optional<std::pair<long, long>> multiplicities(long k, const Rational& theta_sq, long n) {
  const Rational a = (Rational(n) * k - 2 * Rational(k) * k) / (2 * theta_sq);
  const Rational b = Rational(n - 2) - 2 * a;
  if (!is_integer(a) || !is_integer(b) || a <= 0 || b <= 0) return std::nullopt;
  return std::make_pair(numerator_of(a).convert_to<long>(), numerator_of(b).convert_to<long>());
}

std::pair<Rational, BigInt> n_bounds(long k, const Rational& theta_sq) {
  const Rational kk = Rational(k) * k;
  if (theta_sq >= kk) throw std::invalid_argument("n_bounds: theta^2 must be below k^2");
  const Rational lo = 2 * (kk + theta_sq) / k;
  const Rational hi = 2 * Rational(k) * (kk - theta_sq);
  if (!is_integer(hi)) throw std::invalid_argument("n_bounds: upper bound not integral");
  return {lo, numerator_of(hi)};
}

bool closed_walks_integral(long k, const BigInt& theta_sq, long n) {
  if (n <= 0) return false;
  // Modulo n the term nk theta^(2r-2) vanishes, leaving 2(k^(2r) - k^2 theta^(2r-2)).
  using u128 = unsigned __int128;
  const auto mod = static_cast<std::uint64_t>(n);
  const BigInt k2 = BigInt(k) * k;
  const auto k2_mod = (k2 % n).convert_to<std::uint64_t>();
  const auto t2_mod = (theta_sq % n).convert_to<std::uint64_t>();
  std::uint64_t x = k2_mod;
  std::uint64_t y = 1 % mod;
  std::unordered_set<u128> seen;
  while (seen.insert((static_cast<u128>(x) << 64U) | y).second) {
    const u128 lhs = 2 * static_cast<u128>(x);
    const u128 rhs = (2 * static_cast<u128>(k2_mod) * y) % mod;
    if ((lhs + mod - rhs) % mod != 0) return false;
    x = static_cast<std::uint64_t>(static_cast<u128>(x) * k2_mod % mod);
    y = static_cast<std::uint64_t>(static_cast<u128>(y) * t2_mod % mod);
  }
  return true;
}

FeasibleRow evaluate_row(ThetaClass c, long k, long n) {
  FeasibleRow row;
  row.k = k;
  row.n = n;
  row.theta_class = c;
  const Rational t2 = theta_squared(c, k);
  const auto [lo, hi] = n_bounds(k, t2);
  row.checks.n_in_bounds = Rational(n) >= lo && BigInt(n) <= hi;
  row.checks.n_even = n % 2 == 0;
  const auto ab = multiplicities(k, t2, n);
  row.checks.mult_integral = ab.has_value();
  if (is_integer(t2)) row.checks.closed_walks_integral = closed_walks_integral(k, numerator_of(t2), n);
  if (!ab) return row;
  row.a = ab->first;
  row.b = ab->second;
  const QuadrangleReport quad = quadrangle_report(row.spectrum(), n, k);
  row.q = quad.q_spectral;
  row.q_x = quad.qx_spectral;
  row.checks.q_integral_nonneg = is_integer(row.q) && row.q >= 0;
  row.checks.qx_integral_nonneg = is_integer(row.q_x) && row.q_x >= 0;
  return row;
}

std::vector<FeasibleRow> enumerate(ThetaClass c, long k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("enumerate: k must be even and at least 2");
  const auto [lo, hi] = n_bounds(k, theta_squared(c, k));
  BigInt first = numerator_of(lo) / denominator_of(lo);
  if (Rational(first) < lo) ++first;
  std::vector<FeasibleRow> rows;
  for (long n = first.convert_to<long>(); BigInt(n) <= hi; ++n) {
    if (n % 2 != 0 || !multiplicities(k, theta_squared(c, k), n)) continue;
    FeasibleRow row = evaluate_row(c, k, n);
    if (row.checks.passes_spectral()) rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FourEigenvalueRow> classify_four_eigenvalue(long k_max) {
  std::vector<FourEigenvalueRow> out;
  for (ThetaClass c : kAllThetaClasses) {
    for (long k = 2; k <= k_max; k += 2) {
      const Rational t2 = theta_squared(c, k);
      if (!(Rational(k) > t2)) continue;
      const Rational kk = Rational(k) * k;
      const Rational n = 2 * (kk - t2) / (Rational(k) - t2);
      if (!is_integer(n) || numerator_of(n) % 2 != 0) continue;
      const long nl = numerator_of(n).convert_to<long>();
      const long a = nl / 2 - 1;
      if (a < 1) continue;
      const QuadraticNumber theta = theta_value(c, k);
      out.push_back({k, nl,
                     Spectrum({{QuadraticNumber(k), 1}, {QuadraticNumber(-k), 1}, {theta, a}, {-theta, a}})});
    }
  }
  return out;
}

}  // namespace walklab
