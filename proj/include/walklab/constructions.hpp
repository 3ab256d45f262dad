#pragma once

#include "walklab/graph.hpp"

#include <string>
#include <vector>

namespace walklab {

Graph cycle(Index n);
Graph complete(Index n);
Graph complete_bipartite(Index p, Index q);
/// Hamming graph H(d, q): words of length d over q symbols, adjacent when they
/// differ in one coordinate. Word (w_0, ..., w_{d-1}) has index sum w_i q^(d-1-i).
Graph hamming(Index d, Index q);
inline Graph hypercube(Index d) { return hamming(d, 2); }
Graph petersen();

/// Vertices are the edges of g in canonical order.
Graph line_graph(const Graph& g);
/// A(g) (x) J_m; vertex (v, copy) has index v*m + copy.
Graph tensor_allones(const Graph& g, Index m);
/// A(g) (x) I + I (x) A(h); vertex (v, w) has index v*|h| + w.
Graph cartesian_product(const Graph& g, const Graph& h);
/// A(g) (x) A(h).
Graph kronecker_product(const Graph& g, const Graph& h);
/// g (x) K_2.
Graph bipartite_double(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Connected regular graphs used across the test and self-check suites,
/// ordered by size.
std::vector<NamedGraph> builtin_catalog();

}  // namespace walklab
