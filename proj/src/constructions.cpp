#include "walklab/constructions.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <stdexcept>

namespace walklab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph cycle(Index n) {
  require(n >= 3, "cycle: n must be at least 3");
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) a(i, (i + 1) % n) = a((i + 1) % n, i) = 1;
  return Graph(std::move(a));
}

Graph complete(Index n) {
  require(n >= 1, "complete: n must be positive");
  AdjacencyMatrix a = AdjacencyMatrix::Ones(n, n);
  a.diagonal().setZero();
  return Graph(std::move(a));
}

Graph complete_bipartite(Index p, Index q) {
  require(p >= 1 && q >= 1, "complete_bipartite: part sizes must be positive");
  AdjacencyMatrix a = AdjacencyMatrix::Zero(p + q, p + q);
  a.topRightCorner(p, q).setOnes();
  a.bottomLeftCorner(q, p).setOnes();
  return Graph(std::move(a));
}

Graph hamming(Index d, Index q) {
  require(d >= 1, "hamming: d must be positive");
  require(q >= 2, "hamming: q must be at least 2");
  Index n = 1;
  for (Index i = 0; i < d; ++i) {
    n *= q;
    if (n > max_vertices()) throw SizeLimitExceeded("hamming graph too large");
  }
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    Index place = 1;
    for (Index i = 0; i < d; ++i, place *= q) {
      const Index digit = (u / place) % q;
      for (Index s = 0; s < q; ++s)
        if (s != digit) a(u, u + (s - digit) * place) = 1;
    }
  }
  return Graph(std::move(a));
}

Graph petersen() {
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer pentagon
    edges.emplace_back(i, i + 5);            // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  const auto m = static_cast<Index>(edges.size());
  AdjacencyMatrix a = AdjacencyMatrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      const auto& [a0, a1] = edges[static_cast<std::size_t>(i)];
      const auto& [b0, b1] = edges[static_cast<std::size_t>(j)];
      if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) a(i, j) = a(j, i) = 1;
    }
  }
  return Graph(std::move(a));
}

Graph tensor_allones(const Graph& g, Index m) {
  require(m >= 1, "tensor_allones: m must be positive");
  if (g.order() * m > max_vertices()) throw SizeLimitExceeded("blow-up graph too large");
  AdjacencyMatrix a = Eigen::kroneckerProduct(g.adjacency(), AdjacencyMatrix::Ones(m, m));
  return Graph(std::move(a));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const Index n = g.order();
  const Index m = h.order();
  if (n * m > max_vertices()) throw SizeLimitExceeded("Cartesian product too large");
  AdjacencyMatrix a = Eigen::kroneckerProduct(g.adjacency(), AdjacencyMatrix::Identity(m, m));
  a += Eigen::kroneckerProduct(AdjacencyMatrix::Identity(n, n), h.adjacency());
  return Graph(std::move(a));
}

Graph kronecker_product(const Graph& g, const Graph& h) {
  if (g.order() * h.order() > max_vertices()) throw SizeLimitExceeded("Kronecker product too large");
  AdjacencyMatrix a = Eigen::kroneckerProduct(g.adjacency(), h.adjacency());
  return Graph(std::move(a));
}

Graph bipartite_double(const Graph& g) { return kronecker_product(g, complete(2)); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  const Index n = g.order();
  const Index m = h.order();
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n + m, n + m);
  a.topLeftCorner(n, n) = g.adjacency();
  a.bottomRightCorner(m, m) = h.adjacency();
  return Graph(std::move(a));
}

std::vector<NamedGraph> builtin_catalog() {
  const Graph k44 = complete_bipartite(4, 4);
  const Graph lq3 = line_graph(hypercube(3));
  return {
      {"K2", complete(2)},
      {"C3", cycle(3)},
      {"C4", cycle(4)},
      {"C5", cycle(5)},
      {"C6", cycle(6)},
      {"C7", cycle(7)},
      {"C8", cycle(8)},
      {"C10", cycle(10)},
      {"C12", cycle(12)},
      {"K4", complete(4)},
      {"K5", complete(5)},
      {"K2,2", complete_bipartite(2, 2)},
      {"K3,3", complete_bipartite(3, 3)},
      {"K4,4", k44},
      {"Q3", hypercube(3)},
      {"H(4,2)", hamming(4, 2)},
      {"H(2,3)", hamming(2, 3)},
      {"Petersen", petersen()},
      {"bdouble(Petersen)", bipartite_double(petersen())},
      {"L(Q3)", lq3},
      {"L(Q3)⊗K2", bipartite_double(lq3)},
      {"C6⊗J2", tensor_allones(cycle(6), 2)},
      {"C6⊗J3", tensor_allones(cycle(6), 3)},
      {"C6⊗J4", tensor_allones(cycle(6), 4)},
      {"C8⊗J2", tensor_allones(cycle(8), 2)},
      {"C8⊗J3", tensor_allones(cycle(8), 3)},
      {"Q3⊗J2", tensor_allones(hypercube(3), 2)},
      {"C4□C6", cartesian_product(cycle(4), cycle(6))},
      {"H(3,3)", hamming(3, 3)},
  };
}

}  // namespace walklab
