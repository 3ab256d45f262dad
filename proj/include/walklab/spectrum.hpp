#pragma once

#include "walklab/poly.hpp"
#include "walklab/quadratic.hpp"

#include <string>
#include <variant>
#include <vector>

namespace walklab {

struct SpectrumEntry {
  QuadraticNumber value;
  long multiplicity = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of exact eigenvalues, stored as distinct values in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  /// Merges repeated values and sorts descending. Multiplicities must be positive.
  explicit Spectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  long dimension() const;
  std::size_t distinct_count() const { return entries_.size(); }
  long multiplicity_of(const QuadraticNumber& v) const;
  bool contains(const QuadraticNumber& v) const { return multiplicity_of(v) > 0; }

  /// True when the multiset equals its negation.
  bool is_symmetric() const;
  Spectrum negated() const;
  Spectrum scaled(const Rational& factor) const;
  /// Multiset union.
  Spectrum merged(const Spectrum& other) const;

  /// Sum of lambda^r over the multiset. Throws std::domain_error when the
  /// irrational parts do not cancel (spectrum not closed under conjugation).
  Rational power_sum(unsigned r) const;

  /// Monic polynomial prod (x - lambda)^mult; requires conjugate-closed input.
  RatPoly polynomial() const;
  /// Monic product over distinct values, conjugates paired.
  RatPoly minimal_polynomial() const;

  /// Canonical "{[±2]^1, [±1]^2}" rendering; +-pairs with equal multiplicity are merged.
  std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Roots that could not be expressed as rational or real quadratic numbers.
struct Unresolved {
  IntPoly residual;
  Spectrum partial;
};

using SpectrumExtraction = std::variant<Spectrum, Unresolved>;

/// Splits a monic integer polynomial into rational roots and monic integer
/// quadratic factors with positive non-square discriminant. Anything left is
/// returned as an Unresolved residual.
SpectrumExtraction extract_spectrum(const IntPoly& p);

/// Upper bound on the modulus of every complex root of a monic polynomial.
BigInt root_modulus_bound(const IntPoly& p);

}  // namespace walklab
