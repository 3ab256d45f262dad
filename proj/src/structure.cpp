#include "walklab/structure.hpp"

#include "walklab/linalg.hpp"
#include "walklab/quadrangles.hpp"
#include "walklab/walk.hpp"

#include <algorithm>

namespace walklab {

Spectrum adjacency_spectrum(const Graph& g) {
  auto extracted = extract_spectrum(charpoly(g.adjacency()));
  if (auto* u = std::get_if<Unresolved>(&extracted))
    throw UnresolvedSpectrum("residual " + u->residual.to_string());
  return std::get<Spectrum>(std::move(extracted));
}

bool walk_regularity_check(const Graph& g, long r_max) {
  const Index n = g.order();
  if (r_max <= 0) r_max = 2 * n;
  if (n == 0) return true;
  // By Cayley-Hamilton every A^r with r >= n is a fixed combination of
  // I, A, ..., A^(n-1), so constant diagonals up to n - 1 settle all r.
  const long last = std::min<long>(r_max, std::max<long>(2, n - 1));
  IntMatrix power = cast_matrix<BigInt>(g.adjacency());
  IntMatrix next(n, n);
  const auto& nb = g.neighbors();
  for (long r = 2; r <= last; ++r) {
    for (Index x = 0; x < n; ++x) {
      for (Index c = 0; c < n; ++c) next(x, c) = 0;
      for (Index y : nb[static_cast<std::size_t>(x)])
        for (Index c = 0; c < n; ++c) next(x, c) += power(y, c);
    }
    power.swap(next);
    for (Index x = 1; x < n; ++x)
      if (power(x, x) != power(0, 0)) return false;
  }
  return true;
}

bool hoffman_check(const Graph& g) {
  const auto k = regularity(g);
  if (!k) throw NotRegular();
  const Index n = g.order();
  const Spectrum spec = adjacency_spectrum(g);
  std::vector<SpectrumEntry> others;
  for (const auto& e : spec.entries())
    if (e.value != QuadraticNumber(static_cast<long>(*k))) others.push_back(e);
  const RatPoly q = others.empty() ? RatPoly::constant(1) : Spectrum(others).minimal_polynomial();
  const RatMatrix lhs = eval_poly_at_matrix(q, cast_matrix<Rational>(g.adjacency()));
  const Rational c = q.eval(Rational(*k)) / Rational(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (lhs(i, j) != c) return false;
  return true;
}

QuadrangleReport quadrangle_report(const Spectrum& spectrum, Index n, Index k, const std::optional<Graph>& g) {
  if (spectrum.dimension() != n) throw std::invalid_argument("quadrangle_report: multiplicities do not sum to n");
  QuadrangleReport r;
  const Rational nk = Rational(n) * Rational(2 * k * k - k);
  r.q_spectral = (spectrum.power_sum(4) - nk) / 8;
  r.qx_spectral = 4 * r.q_spectral / Rational(n);
  if (g) {
    const QuadrangleCount count = count_quadrangles(*g);
    r.q_brute = count.total;
    r.per_vertex_constant = std::adjacent_find(count.per_vertex.begin(), count.per_vertex.end(),
                                               std::not_equal_to<>()) == count.per_vertex.end();
    const auto degree = regularity(*g);
    if (degree && *degree == k && Rational(count.total) != r.q_spectral)
      throw std::logic_error("quadrangle_report: spectral and counted quadrangles differ");
  }
  return r;
}

bool verify_biadjacency_identities(const Graph& g) {
  const auto k = regularity(g);
  if (!k) throw NotRegular();
  if (!is_connected(g)) throw NotConnected();
  const auto split = is_bipartite(g);
  if (!split) throw ShapeMismatch("graph is not bipartite");
  const Spectrum spec = adjacency_spectrum(g);
  const auto& entries = spec.entries();
  const std::size_t distinct = entries.size();
  if (distinct != 4 && distinct != 5) throw ShapeMismatch(std::to_string(distinct) + " distinct eigenvalues");
  if (distinct == 5 && !spec.contains(QuadraticNumber(0))) throw ShapeMismatch("five eigenvalues without 0");
  const QuadraticNumber theta = entries[1].value;
  const QuadraticNumber theta_sq_q = theta * theta;
  if (!theta_sq_q.is_rational()) throw ShapeMismatch("theta^2 irrational");
  const Rational theta_sq = theta_sq_q.rational_part();
  const Rational kk(*k);
  const Rational n(g.order());

  const RatMatrix nmat = cast_matrix<Rational>(biadjacency(g, *split));
  const Index half = nmat.rows();
  if (nmat.cols() != half) throw ShapeMismatch("unequal parts");
  const RatMatrix j = RatMatrix::Constant(half, half, Rational(1));
  const RatMatrix nnt = nmat * nmat.transpose();
  if (distinct == 4) {
    const RatMatrix rhs = RatMatrix::Identity(half, half) * theta_sq + j * (2 * (kk * kk - theta_sq) / n);
    return nnt == rhs;
  }
  const RatMatrix lhs = nnt * nmat;
  const RatMatrix rhs = nmat * theta_sq + j * (2 * kk / n * (kk * kk - theta_sq));
  return lhs == rhs;
}

}  // namespace walklab
