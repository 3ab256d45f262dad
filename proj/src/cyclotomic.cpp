#include "walklab/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace walklab {

long euler_phi(long d) {
  if (d < 1) throw std::domain_error("euler_phi: argument must be positive");
  long result = d;
  long rest = d;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

namespace {

long radical(long d) {
  long r = 1;
  long rest = d;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    r *= p;
    while (rest % p == 0) rest /= p;
  }
  return rest > 1 ? r * rest : r;
}

// Phi_d for square-free d by exact division of x^d - 1 by Phi_e over proper divisors e.
IntPoly cyclotomic_squarefree(long d, std::map<long, IntPoly>& cache) {
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  IntPoly acc = IntPoly::monomial(1, static_cast<std::size_t>(d)) - IntPoly::constant(1);
  for (long e = 1; e < d; ++e) {
    if (d % e) continue;
    auto q = exact_divide(acc, cyclotomic_squarefree(e, cache));
    if (!q) throw std::logic_error("cyclotomic: inexact division");
    acc = std::move(*q);
  }
  cache.emplace(d, acc);
  return acc;
}

}  // namespace

IntPoly cyclotomic(long d) {
  if (d < 1) throw std::domain_error("cyclotomic: order must be positive");
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  const long r = radical(d);
  IntPoly base;
  {
    std::lock_guard<std::mutex> lock(mu);
    base = cyclotomic_squarefree(r, cache);
  }
  // Phi_d(x) = Phi_rad(d)(x^(d / rad(d)))
  return base.substitute_power(static_cast<std::size_t>(d / r));
}

IntPoly min_poly_2cos(long d) {
  if (d < 1) throw std::domain_error("min_poly_2cos: order must be positive");
  if (d == 1) return IntPoly({BigInt(-2), BigInt(1)});
  if (d == 2) return IntPoly({BigInt(2), BigInt(1)});
  // Phi_d is palindromic of even degree 2m; Phi_d(z) / z^m = a_m + sum_i a_{m+i} V_i(z + 1/z)
  // with V_0 = 2, V_1 = y, V_{i+1} = y V_i - V_{i-1}.
  const IntPoly phi = cyclotomic(d);
  const auto m = static_cast<std::size_t>(phi.degree() / 2);
  const IntPoly y = IntPoly::monomial(1, 1);
  IntPoly v_prev = IntPoly::constant(2);
  IntPoly v_cur = y;
  IntPoly result = IntPoly::constant(phi[m]);
  for (std::size_t i = 1; i <= m; ++i) {
    result += v_cur * phi[m + i];
    IntPoly v_next = y * v_cur - v_prev;
    v_prev = std::move(v_cur);
    v_cur = std::move(v_next);
  }
  return result;
}

std::vector<long> orders_with_phi_at_most(long degree) {
  std::vector<long> out;
  if (degree < 1) return out;
  // Primes p with p - 1 <= degree.
  const long limit = degree + 1;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<long> primes;
  for (long i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  // Depth-first over prime-power factorizations with phi(d) <= degree.
  auto visit = [&](auto&& self, std::size_t from, long d, long phi) -> void {
    out.push_back(d);
    for (std::size_t i = from; i < primes.size(); ++i) {
      const long p = primes[i];
      long phi_p = phi * (p - 1);
      if (phi_p > degree) break;
      long dp = d * p;
      while (phi_p <= degree) {
        self(self, i + 1, dp, phi_p);
        phi_p *= p;
        dp *= p;
      }
    }
  };
  visit(visit, 0, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1, used as a fast necessary
// condition before exact division.
constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(prod & kMersenne61) + static_cast<std::uint64_t>(prod >> 61);
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mod_mul(r, b);
    b = mod_mul(b, b);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce(const BigInt& v) {
  BigInt r = v % BigInt(kMersenne61);
  if (r < 0) r += kMersenne61;
  return r.convert_to<std::uint64_t>();
}

// p mod (2^61 - 1); empty when some denominator vanishes there.
std::optional<std::vector<std::uint64_t>> reduce_poly(const RatPoly& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    const std::uint64_t den = reduce(denominator_of(c));
    if (den == 0) return std::nullopt;
    out.push_back(mod_mul(reduce(numerator_of(c)), mod_pow(den, kMersenne61 - 2)));
  }
  return out;
}

bool divides_mod(std::vector<std::uint64_t> p, const std::vector<std::uint64_t>& monic_divisor) {
  const std::size_t db = monic_divisor.size() - 1;
  if (p.size() <= db) return std::all_of(p.begin(), p.end(), [](std::uint64_t v) { return v == 0; });
  for (std::size_t i = p.size() - 1; i >= db; --i) {
    const std::uint64_t f = p[i];
    if (f != 0) {
      for (std::size_t j = 0; j < db; ++j)
        p[i - db + j] = (p[i - db + j] + kMersenne61 - mod_mul(f, monic_divisor[j])) % kMersenne61;
      p[i] = 0;
    }
    if (i == db) break;
  }
  for (std::size_t j = 0; j < db; ++j)
    if (p[j] != 0) return false;
  return true;
}

}  // namespace

SieveResult cyclotomic_sieve(const RatPoly& p) { return cyclotomic_sieve(p, cyclotomic); }

SieveResult cyclotomic_sieve(const RatPoly& p, const CyclotomicSource& source) {
  if (!p.is_monic()) throw std::invalid_argument("cyclotomic_sieve: polynomial must be monic");
  SieveResult result{{}, p};
  for (long d : orders_with_phi_at_most(p.degree())) {
    if (euler_phi(d) > result.residual.degree()) continue;
    const IntPoly phi_int = source(d);
    const RatPoly phi = to_rational(phi_int);
    if (phi.degree() < 1 || !phi.is_monic()) continue;
    std::vector<std::uint64_t> phi_mod;
    for (const auto& c : phi_int.coeffs()) phi_mod.push_back(reduce(c));
    while (result.residual.degree() >= phi.degree()) {
      if (auto reduced = reduce_poly(result.residual); reduced && !divides_mod(*reduced, phi_mod)) break;
      auto q = exact_divide(result.residual, phi);
      if (!q) break;
      result.residual = std::move(*q);
      ++result.orders[d];
    }
  }
  return result;
}

long lcm_of_orders(const OrderMultiset& orders) {
  long l = 1;
  for (const auto& [d, mult] : orders) l = std::lcm(l, d);
  return l;
}

}  // namespace walklab
