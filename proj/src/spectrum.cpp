#include "walklab/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace walklab {

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  for (auto& e : entries) {
    if (e.multiplicity <= 0) throw std::invalid_argument("Spectrum: multiplicities must be positive");
    if (!entries_.empty() && entries_.back().value == e.value) {
      entries_.back().multiplicity += e.multiplicity;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

long Spectrum::dimension() const {
  long total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

long Spectrum::multiplicity_of(const QuadraticNumber& v) const {
  for (const auto& e : entries_)
    if (e.value == v) return e.multiplicity;
  return 0;
}

bool Spectrum::is_symmetric() const { return negated() == *this; }

Spectrum Spectrum::negated() const {
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries_) out.push_back({-e.value, e.multiplicity});
  return Spectrum(std::move(out));
}

Spectrum Spectrum::scaled(const Rational& factor) const {
  if (factor == 0) return Spectrum({{QuadraticNumber(0L), dimension()}});
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries_) out.push_back({e.value * QuadraticNumber(factor), e.multiplicity});
  return Spectrum(std::move(out));
}

Spectrum Spectrum::merged(const Spectrum& other) const {
  std::vector<SpectrumEntry> out = entries_;
  out.insert(out.end(), other.entries_.begin(), other.entries_.end());
  return Spectrum(std::move(out));
}

Rational Spectrum::power_sum(unsigned r) const {
  Rational rational_total = 0;
  std::map<BigInt, Rational> irrational_total;
  for (const auto& e : entries_) {
    const QuadraticNumber v = e.value.pow(r);
    rational_total += v.rational_part() * e.multiplicity;
    if (!v.is_rational()) irrational_total[v.radicand()] += v.irrational_coeff() * e.multiplicity;
  }
  for (const auto& [m, c] : irrational_total)
    if (c != 0) throw std::domain_error("Spectrum::power_sum: spectrum is not closed under conjugation");
  return rational_total;
}

namespace {

template <typename Fn>
RatPoly build_polynomial(const std::vector<SpectrumEntry>& entries, Fn&& exponent) {
  RatPoly result = RatPoly::constant(1);
  for (const auto& e : entries) {
    const QuadraticNumber& v = e.value;
    if (v.is_rational()) {
      result *= RatPoly::linear_root(v.rational_part()).pow(static_cast<unsigned>(exponent(e.multiplicity)));
      continue;
    }
    if (v.irrational_coeff() < 0) continue;
    long conj_mult = 0;
    for (const auto& o : entries)
      if (o.value == v.conjugate()) conj_mult = o.multiplicity;
    if (conj_mult != e.multiplicity)
      throw std::domain_error("Spectrum: irrational eigenvalue without matching conjugate");
    const RatPoly quad({v.norm(), Rational(-v.trace()), Rational(1)});
    result *= quad.pow(static_cast<unsigned>(exponent(e.multiplicity)));
  }
  return result;
}

}  // namespace

RatPoly Spectrum::polynomial() const {
  return build_polynomial(entries_, [](long m) { return m; });
}

RatPoly Spectrum::minimal_polynomial() const {
  return build_polynomial(entries_, [](long) { return 1L; });
}

std::string Spectrum::to_string() const {
  std::ostringstream os;
  os << "{";
  std::vector<bool> consumed(entries_.size(), false);
  bool first = true;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (consumed[i]) continue;
    const auto& e = entries_[i];
    std::string label = e.value.to_string();
    if (e.value.sign() > 0) {
      for (std::size_t j = i + 1; j < entries_.size(); ++j) {
        if (!consumed[j] && entries_[j].value == -e.value && entries_[j].multiplicity == e.multiplicity) {
          consumed[j] = true;
          // compound values such as 1/2+√5/2 need grouping under the sign
          const bool compound = !e.value.is_rational() && e.value.rational_part() != 0;
          label = compound ? "±(" + label + ")" : "±" + label;
          break;
        }
      }
    }
    if (!first) os << ", ";
    first = false;
    os << "[" << label << "]^" << e.multiplicity;
  }
  os << "}";
  return os.str();
}

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

/// Smallest t >= 0 with t^e >= a.
BigInt iroot_ceil(const BigInt& a, unsigned e) {
  if (a <= 0) return 0;
  BigInt r;
  const int exact = mpz_root(r.backend().data(), a.backend().data(), e);
  return exact ? r : BigInt(r + 1);
}

std::vector<BigInt> divisors_up_to(const BigInt& value, const BigInt& limit) {
  std::vector<BigInt> out;
  const BigInt v = abs_big(value);
  for (BigInt c = 1; c <= limit && c <= v; ++c)
    if (v % c == 0) out.push_back(c);
  return out;
}

}  // namespace

BigInt root_modulus_bound(const IntPoly& p) {
  const int n = p.degree();
  if (n <= 0) return 0;
  // Fujiwara: 2 * max(|a_{n-1}|, |a_{n-2}|^{1/2}, ..., |a_0 / 2|^{1/n}).
  BigInt best = 0;
  for (int i = 1; i <= n; ++i) {
    BigInt a = abs_big(p[static_cast<std::size_t>(n - i)]);
    if (i == n) a = (a + 1) / 2;
    const BigInt t = iroot_ceil(a, static_cast<unsigned>(i));
    if (t > best) best = t;
  }
  return 2 * best;
}

SpectrumExtraction extract_spectrum(const IntPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("extract_spectrum: polynomial must be monic");
  std::vector<SpectrumEntry> found;

  const std::size_t zeros = p.low_order_zeros();
  if (zeros) found.push_back({QuadraticNumber(0L), static_cast<long>(zeros)});
  IntPoly g = p.shift_down(zeros);

  auto strip = [&g](const IntPoly& factor) {
    long mult = 0;
    while (g.degree() >= factor.degree()) {
      auto q = exact_divide(g, factor);
      if (!q) break;
      g = std::move(*q);
      ++mult;
    }
    return mult;
  };

  // Integer roots (the only rational roots of a monic integer polynomial).
  if (g.degree() >= 1) {
    const BigInt bound = root_modulus_bound(g);
    for (const BigInt& d : divisors_up_to(g[0], bound)) {
      for (const BigInt& r : {d, BigInt(-d)}) {
        if (g.degree() < 1) break;
        if (g.eval(r) != 0) continue;
        const long mult = strip(IntPoly::linear_root(r));
        found.push_back({QuadraticNumber(Rational(r)), mult});
      }
    }
  }

  // Monic quadratic factors x^2 - b x + c with real irrational roots.
  if (g.degree() >= 2) {
    const BigInt bound = root_modulus_bound(g);
    BigInt g_at_one = g.eval(BigInt(1));
    BigInt g_at_minus_one = g.eval(BigInt(-1));
    for (const BigInt& cabs : divisors_up_to(g[0], bound * bound)) {
      for (const BigInt& c : {cabs, BigInt(-cabs)}) {
        for (BigInt b = -2 * bound; b <= 2 * bound && g.degree() >= 2; ++b) {
          const BigInt disc = b * b - 4 * c;
          if (disc <= 0) continue;
          const BigInt at_one = 1 - b + c;
          const BigInt at_minus_one = 1 + b + c;
          if (at_one == 0 || at_minus_one == 0) continue;
          if (g_at_one % at_one != 0 || g_at_minus_one % at_minus_one != 0) continue;
          const BigInt root = boost::multiprecision::sqrt(disc);
          if (root * root == disc) continue;
          const long mult = strip(IntPoly({c, BigInt(-b), BigInt(1)}));
          if (mult == 0) continue;
          g_at_one = g.eval(BigInt(1));
          g_at_minus_one = g.eval(BigInt(-1));
          const Rational half_b(b, 2);
          found.push_back({QuadraticNumber(half_b, Rational(1, 2), disc), mult});
          found.push_back({QuadraticNumber(half_b, Rational(-1, 2), disc), mult});
        }
      }
    }
  }

  Spectrum spectrum(std::move(found));
  if (g.degree() >= 1) return Unresolved{g, spectrum};
  return spectrum;
}

}  // namespace walklab
