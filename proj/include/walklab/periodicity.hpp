#pragma once

#include "walklab/cyclotomic.hpp"
#include "walklab/graph.hpp"
#include "walklab/quadratic.hpp"

#include <optional>
#include <string>
#include <variant>

namespace walklab {

struct Periodic {
  long period = 0;
  OrderMultiset cyclotomic_orders;
};

/// Either a discriminant eigenvalue lambda with 2*lambda not an algebraic
/// integer, or the non-cyclotomic residual of the U polynomial.
struct NotPeriodic {
  std::variant<QuadraticNumber, RatPoly> witness;
};

using PeriodicityVerdict = std::variant<Periodic, NotPeriodic>;

struct PeriodicityOptions {
  /// Compare the mapped U polynomial with the direct one when 2|E| <= 200.
  bool cross_check = true;
  /// Try the algebraic-integer witness before sieving.
  bool witness_path = true;
  /// Cyclotomic table override; empty means the built-in one.
  CyclotomicSource source;
};

inline constexpr Index kOracleMaxArcs = 200;

PeriodicityVerdict decide_periodic(const Graph& g, const PeriodicityOptions& options = {});

inline bool is_periodic(const PeriodicityVerdict& v) { return std::holds_alternative<Periodic>(v); }

/// "PERIODIC period=12 orders={1,2,3,4,6}" or "NOT PERIODIC witness=1/3".
std::string to_string(const PeriodicityVerdict& v);
/// {"periodic":true,"period":12,"orders":{"1":..}} or {"periodic":false,"witness":"1/3"};
/// exact values are strings.
std::string to_json(const PeriodicityVerdict& v);

/// 2 * lcm(1..24).
inline constexpr long kDefaultTauMax = 2L * 5354228880L;

/// Smallest tau <= tau_max with U^tau = I, by exact repeated multiplication
/// with the integer matrix kU. Test oracle; throws above 200 arcs.
std::optional<long> period_oracle(const Graph& g, long tau_max = kDefaultTauMax);

/// True iff k is even and theta is k/2, (sqrt2/2)k or (sqrt3/2)k, decided
/// through the algebraic-integer argument on x = 2 theta / k: x must lie in
/// the ring of integers, in the window 0 < x < 2, and theta^2 must be rational.
bool eigenvalue_gate(long k, const QuadraticNumber& theta);

}  // namespace walklab
