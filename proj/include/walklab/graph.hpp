#pragma once

#include "walklab/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace walklab {

/// Default cap on vertex count; WALKLAB_MAX_VERTICES overrides it.
inline constexpr Index kDefaultMaxVertices = 4096;
Index max_vertices();

/// Simple undirected graph on vertices 0..n-1, stored as a dense symmetric
/// 0/1 adjacency matrix with zero diagonal. Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  /// Validates symmetry, zero diagonal, 0/1 entries and the vertex cap.
  explicit Graph(AdjacencyMatrix adjacency);

  /// Rejects loops, repeated edges and out-of-range endpoints.
  static Graph from_edges(Index n, const std::vector<std::pair<Index, Index>>& edges);

  Index order() const { return adjacency_.rows(); }
  Index edge_count() const { return edge_count_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  /// Sorted neighbour lists.
  const std::vector<std::vector<Index>>& neighbors() const { return neighbors_; }
  Index degree(Index v) const { return static_cast<Index>(neighbors_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Index u, Index v) const { return adjacency_(u, v) != 0; }

  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<std::pair<Index, Index>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  AdjacencyMatrix adjacency_;
  std::vector<std::vector<Index>> neighbors_;
  Index edge_count_ = 0;
};

struct Arc {
  Index origin;
  Index terminus;
};

/// Both orientations of every edge, sorted by (origin, terminus).
struct ArcSpace {
  std::vector<Arc> arcs;
  std::vector<Index> inverse;  ///< inverse[a] is the index of the reversed arc
  Index size() const { return static_cast<Index>(arcs.size()); }
  /// Index of arc (origin, terminus); -1 when absent.
  Index find(Index origin, Index terminus) const;
};

ArcSpace arc_space(const Graph& g);

struct PartiteSplit {
  std::vector<Index> part1;
  std::vector<Index> part2;
};

/// BFS 2-colouring; every component starts in part1 at its smallest vertex.
std::optional<PartiteSplit> is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
/// Common degree, or empty for irregular graphs.
std::optional<Index> regularity(const Graph& g);

/// Block N of A = [[O, N], [N^T, O]]; rows follow part1, columns part2, both ascending.
Eigen::MatrixXi biadjacency(const Graph& g, const PartiteSplit& split);

}  // namespace walklab
