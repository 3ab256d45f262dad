#pragma once

#include "walklab/spectrum.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace walklab::test {

inline QuadraticNumber root(long q, long d) { return QuadraticNumber(Rational(0), Rational(q), BigInt(d)); }

/// Spectrum from (value, multiplicity) pairs.
inline Spectrum spec(std::initializer_list<std::pair<QuadraticNumber, long>> items) {
  std::vector<SpectrumEntry> e;
  for (const auto& [v, m] : items) e.push_back({v, m});
  return Spectrum(std::move(e));
}

/// Adds +-v with the same multiplicity.
inline Spectrum spec_pm(std::initializer_list<std::pair<QuadraticNumber, long>> pairs,
                        std::initializer_list<std::pair<QuadraticNumber, long>> singles = {}) {
  std::vector<SpectrumEntry> e;
  for (const auto& [v, m] : pairs) {
    e.push_back({v, m});
    e.push_back({-v, m});
  }
  for (const auto& [v, m] : singles) e.push_back({v, m});
  return Spectrum(std::move(e));
}

inline RatPoly rat(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

inline IntPoly ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

}  // namespace walklab::test
