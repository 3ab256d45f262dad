#pragma once

#include "walklab/graph.hpp"
#include "walklab/spectrum.hpp"

#include <optional>

namespace walklab {

/// Exact adjacency spectrum; throws UnresolvedSpectrum when some roots are
/// neither rational nor real quadratic.
Spectrum adjacency_spectrum(const Graph& g);

/// diag(A^r) constant for every 2 <= r <= r_max. r_max <= 0 means 2n.
bool walk_regularity_check(const Graph& g, long r_max = 0);

/// q(A) == (q(k)/n) J with q the product of (x - lambda) over the distinct
/// eigenvalues other than k. False on disconnected input.
bool hoffman_check(const Graph& g);

struct QuadrangleReport {
  Rational q_spectral;
  Rational qx_spectral;
  std::optional<std::int64_t> q_brute;
  bool per_vertex_constant = false;
};

/// q = (sum lambda^4 - n(2k^2 - k)) / 8 and q_x = 4q/n. With a graph, also
/// counts 4-cycles directly; a regular graph whose count disagrees with the
/// spectral value raises std::logic_error.
QuadrangleReport quadrangle_report(const Spectrum& spectrum, Index n, Index k,
                                   const std::optional<Graph>& g = std::nullopt);

/// For a connected bipartite k-regular graph with spectrum {+-k, +-theta}
/// checks N N^T = theta^2 I + (2(k^2 - theta^2)/n) J; with {+-k, +-theta, 0}
/// checks N N^T N = theta^2 N + (2k/n)(k^2 - theta^2) J. Other shapes throw
/// ShapeMismatch.
bool verify_biadjacency_identities(const Graph& g);

}  // namespace walklab
