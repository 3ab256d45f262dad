#pragma once

#include "walklab/quadratic.hpp"
#include "walklab/spectrum.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walklab {

/// Admissible second eigenvalue theta of a periodic bipartite regular graph
/// with five distinct eigenvalues {+-k, +-theta, 0}.
enum class ThetaClass { Half, Sqrt2, Sqrt3 };

inline constexpr ThetaClass kAllThetaClasses[] = {ThetaClass::Half, ThetaClass::Sqrt2, ThetaClass::Sqrt3};

/// "half", "sqrt2", "sqrt3".
std::string_view class_name(ThetaClass c);
std::optional<ThetaClass> parse_class(std::string_view name);

/// k^2/4, k^2/2, 3k^2/4.
Rational theta_squared(ThetaClass c, long k);
/// k/2, (k/2)sqrt2, (k/2)sqrt3.
QuadraticNumber theta_value(ThetaClass c, long k);

struct RowChecks {
  bool mult_integral = false;
  bool n_in_bounds = false;
  bool n_even = false;
  bool closed_walks_integral = false;
  bool q_integral_nonneg = false;
  bool qx_integral_nonneg = false;

  bool passes_spectral() const { return mult_integral && n_in_bounds && n_even && closed_walks_integral; }
  bool passes_all() const { return passes_spectral() && q_integral_nonneg && qx_integral_nonneg; }
};

struct FeasibleRow {
  long k = 0;
  long n = 0;
  long a = 0;
  long b = 0;
  ThetaClass theta_class = ThetaClass::Half;
  RowChecks checks;
  Rational q;
  Rational q_x;
  std::optional<std::string> known_realization;

  /// {[+-k]^1, [+-theta]^a, [0]^b}.
  Spectrum spectrum() const;
  /// First failed quadrangle condition: "q ∉ ℤ", "q<0", "q_x ∉ ℤ"; empty if none.
  std::string elimination_reason() const;
};

/// a = (nk - 2k^2) / (2 theta^2), b = n - 2 - 2a; empty unless both are positive integers.
std::optional<std::pair<long, long>> multiplicities(long k, const Rational& theta_sq, long n);

/// lo = 2(k^2 + theta^2)/k, hi = 2k(k^2 - theta^2). Throws when theta^2 >= k^2.
std::pair<Rational, BigInt> n_bounds(long k, const Rational& theta_sq);

/// (1/n)(2k^(2r) + (nk - 2k^2) theta^(2r-2)) is an integer for every r >= 1.
/// The residues (k^(2r) mod n, theta^(2r-2) mod n) are eventually periodic,
/// so walking them until a state repeats covers all r.
bool closed_walks_integral(long k, const BigInt& theta_sq, long n);

/// Evaluates every condition for one (class, k, n).
FeasibleRow evaluate_row(ThetaClass c, long k, long n);

/// All even n in the bounds passing multiplicity and closed-walk integrality,
/// annotated with the quadrangle conditions. Throws std::invalid_argument for
/// odd k or k < 2.
std::vector<FeasibleRow> enumerate(ThetaClass c, long k);

struct FourEigenvalueRow {
  long k = 0;
  long n = 0;
  Spectrum spectrum;
};

/// Bipartite regular periodic graphs with spectrum {+-k, +-theta}: requires
/// k > theta^2, then n = 2(k^2 - theta^2)/(k - theta^2) from a = n/2 - 1.
std::vector<FourEigenvalueRow> classify_four_eigenvalue(long k_max);

}  // namespace walklab
