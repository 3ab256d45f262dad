#pragma once

#include "walklab/poly.hpp"

#include <functional>
#include <map>

namespace walklab {

long euler_phi(long d);

/// d-th cyclotomic polynomial.
IntPoly cyclotomic(long d);

/// Minimal polynomial of 2cos(2*pi/d): the monic integer polynomial whose
/// roots are 2cos(2*pi*j/d) for gcd(j, d) = 1.
IntPoly min_poly_2cos(long d);

/// Every d with phi(d) <= degree, ascending.
std::vector<long> orders_with_phi_at_most(long degree);

/// Multiset of cyclotomic orders, order -> multiplicity.
using OrderMultiset = std::map<long, long>;

struct SieveResult {
  OrderMultiset orders;
  RatPoly residual;
  bool full() const { return residual.is_one(); }
};

using CyclotomicSource = std::function<IntPoly(long)>;

/// Strips every cyclotomic factor from a monic rational polynomial. The
/// result is full when nothing but the constant 1 remains.
SieveResult cyclotomic_sieve(const RatPoly& p);
/// Same with an injectable cyclotomic table (used for fault-injection checks).
SieveResult cyclotomic_sieve(const RatPoly& p, const CyclotomicSource& source);

long lcm_of_orders(const OrderMultiset& orders);

}  // namespace walklab
