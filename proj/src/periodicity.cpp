#include "walklab/periodicity.hpp"

#include "walklab/linalg.hpp"
#include "walklab/spectrum.hpp"
#include "walklab/walk.hpp"

#include "json.hpp"

#include <sstream>

namespace walklab {

namespace {

std::optional<QuadraticNumber> algebraic_integer_witness(const IntPoly& adjacency_charpoly, Index k) {
  const auto extracted = extract_spectrum(adjacency_charpoly);
  const auto* spectrum = std::get_if<Spectrum>(&extracted);
  if (!spectrum) return std::nullopt;
  for (const auto& e : spectrum->entries()) {
    const QuadraticNumber lambda = e.value / Rational(k);
    if (!is_quadratic_algebraic_integer(lambda * QuadraticNumber(2))) return lambda;
  }
  return std::nullopt;
}

}  // namespace

PeriodicityVerdict decide_periodic(const Graph& g, const PeriodicityOptions& options) {
  const Index k = require_connected_regular(g);
  const IntPoly pa = charpoly(g.adjacency());

  if (options.witness_path) {
    if (auto w = algebraic_integer_witness(pa, k)) return NotPeriodic{*w};
  }

  const Index ker = discriminant_minus_one_multiplicity(g, k);
  const MappedUPolynomial pu = u_charpoly_mapping_parts(pa, k, g.edge_count(), g.order(), ker);
  if (options.cross_check && 2 * g.edge_count() <= kOracleMaxArcs) {
    if (u_charpoly_direct(build_walk_matrices(g)) != pu.expand())
      throw std::logic_error("decide_periodic: mapped U polynomial differs from the direct one");
  }

  // The (x - 1) and (x + 1) powers are Phi_1 and Phi_2; only the core needs sieving.
  SieveResult sieve = options.source ? cyclotomic_sieve(pu.core, options.source) : cyclotomic_sieve(pu.core);
  if (!sieve.full()) return NotPeriodic{sieve.residual};
  if (pu.plus_one > 0) sieve.orders[1] += pu.plus_one;
  if (pu.minus_one > 0) sieve.orders[2] += pu.minus_one;
  return Periodic{lcm_of_orders(sieve.orders), sieve.orders};
}

std::string to_string(const PeriodicityVerdict& v) {
  std::ostringstream os;
  if (const auto* p = std::get_if<Periodic>(&v)) {
    os << "PERIODIC period=" << p->period << " orders={";
    bool first = true;
    for (const auto& [d, mult] : p->cyclotomic_orders) {
      os << (first ? "" : ",") << d;
      first = false;
    }
    os << "}";
    return os.str();
  }
  const auto& np = std::get<NotPeriodic>(v);
  if (const auto* w = std::get_if<QuadraticNumber>(&np.witness))
    os << "NOT PERIODIC witness=" << w->to_string();
  else
    os << "NOT PERIODIC residual=" << std::get<RatPoly>(np.witness).to_string();
  return os.str();
}

std::string to_json(const PeriodicityVerdict& v) {
  nlohmann::ordered_json j;
  if (const auto* p = std::get_if<Periodic>(&v)) {
    j["periodic"] = true;
    j["period"] = p->period;
    nlohmann::ordered_json orders = nlohmann::ordered_json::object();
    for (const auto& [d, mult] : p->cyclotomic_orders) orders[std::to_string(d)] = mult;
    j["orders"] = orders;
  } else {
    const auto& np = std::get<NotPeriodic>(v);
    j["periodic"] = false;
    if (const auto* w = std::get_if<QuadraticNumber>(&np.witness))
      j["witness"] = w->to_string();
    else
      j["residual"] = std::get<RatPoly>(np.witness).to_string();
  }
  return j.dump();
}

std::optional<long> period_oracle(const Graph& g, long tau_max) {
  const Index k = require_connected_regular(g);
  if (2 * g.edge_count() > kOracleMaxArcs)
    throw SizeLimitExceeded("period oracle limited to " + std::to_string(kOracleMaxArcs) + " arcs");
  const ArcSpace arcs = arc_space(g);
  const Index n = arcs.size();

  // Row a of W = kU: 2 at arcs (y, o(a)), minus k at the reverse arc.
  std::vector<std::vector<std::pair<Index, long>>> rows(static_cast<std::size_t>(n));
  for (Index a = 0; a < n; ++a) {
    const Index origin = arcs.arcs[static_cast<std::size_t>(a)].origin;
    const Index back = arcs.inverse[static_cast<std::size_t>(a)];
    for (Index y : g.neighbors()[static_cast<std::size_t>(origin)]) {
      const Index b = arcs.find(y, origin);
      rows[static_cast<std::size_t>(a)].emplace_back(b, b == back ? 2 - k : 2);
    }
  }

  IntMatrix power = IntMatrix::Identity(n, n);
  IntMatrix next(n, n);
  BigInt scale = 1;
  for (long tau = 1; tau <= tau_max; ++tau) {
    for (Index a = 0; a < n; ++a) {
      for (Index c = 0; c < n; ++c) next(a, c) = 0;
      for (const auto& [b, w] : rows[static_cast<std::size_t>(a)])
        for (Index c = 0; c < n; ++c) next(a, c) += power(b, c) * w;
    }
    power.swap(next);
    scale *= k;
    bool identity = true;
    for (Index a = 0; a < n && identity; ++a)
      for (Index c = 0; c < n && identity; ++c) identity = power(a, c) == (a == c ? scale : BigInt(0));
    if (identity) return tau;
  }
  return std::nullopt;
}

bool eigenvalue_gate(long k, const QuadraticNumber& theta) {
  if (k < 1 || theta.sign() <= 0) return false;
  if (k % 2 != 0) return false;
  const QuadraticNumber x = theta * QuadraticNumber(Rational(2, k));
  if (!is_quadratic_algebraic_integer(x)) return false;
  if (!(x < QuadraticNumber(2))) return false;
  // theta = r sqrt(m): no rational part in the irrational branch
  if (!x.is_rational() && x.rational_part() != 0) return false;
  return true;
}

}  // namespace walklab
