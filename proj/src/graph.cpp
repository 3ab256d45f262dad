#include "walklab/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace walklab {

Index max_vertices() {
  if (const char* env = std::getenv("WALKLAB_MAX_VERTICES")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultMaxVertices;
}

Graph::Graph(AdjacencyMatrix adjacency) : adjacency_(std::move(adjacency)) {
  if (adjacency_.rows() != adjacency_.cols()) throw ParseError("adjacency matrix must be square");
  const Index n = adjacency_.rows();
  if (n > max_vertices())
    throw SizeLimitExceeded(std::to_string(n) + " vertices (cap " + std::to_string(max_vertices()) + ")");
  neighbors_.resize(static_cast<std::size_t>(n));
  Index twice_edges = 0;
  for (Index i = 0; i < n; ++i) {
    if (adjacency_(i, i) != 0) throw ParseError("loop at vertex " + std::to_string(i));
    for (Index j = 0; j < n; ++j) {
      const int v = adjacency_(i, j);
      if (v != 0 && v != 1) throw ParseError("adjacency entries must be 0 or 1");
      if (v != adjacency_(j, i)) throw ParseError("adjacency matrix must be symmetric");
      if (v) {
        neighbors_[static_cast<std::size_t>(i)].push_back(j);
        ++twice_edges;
      }
    }
  }
  edge_count_ = twice_edges / 2;
}

Graph Graph::from_edges(Index n, const std::vector<std::pair<Index, Index>>& edges) {
  if (n < 0) throw ParseError("negative vertex count");
  if (n > max_vertices())
    throw SizeLimitExceeded(std::to_string(n) + " vertices (cap " + std::to_string(max_vertices()) + ")");
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    if (a(u, v)) throw ParseError("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    a(u, v) = a(v, u) = 1;
  }
  return Graph(std::move(a));
}

std::vector<std::pair<Index, Index>> Graph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Index u = 0; u < order(); ++u)
    for (Index v : neighbors_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Index ArcSpace::find(Index origin, Index terminus) const {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{origin, terminus}, [](const Arc& a, const Arc& b) {
    return std::pair(a.origin, a.terminus) < std::pair(b.origin, b.terminus);
  });
  if (it == arcs.end() || it->origin != origin || it->terminus != terminus) return -1;
  return static_cast<Index>(it - arcs.begin());
}

ArcSpace arc_space(const Graph& g) {
  ArcSpace s;
  for (Index u = 0; u < g.order(); ++u)
    for (Index v : g.neighbors()[static_cast<std::size_t>(u)]) s.arcs.push_back({u, v});
  s.inverse.resize(s.arcs.size());
  for (std::size_t a = 0; a < s.arcs.size(); ++a) s.inverse[a] = s.find(s.arcs[a].terminus, s.arcs[a].origin);
  return s;
}

std::optional<PartiteSplit> is_bipartite(const Graph& g) {
  const Index n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (Index start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != -1) continue;
    colour[static_cast<std::size_t>(start)] = 0;
    std::deque<Index> queue{start};
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      for (Index v : g.neighbors()[static_cast<std::size_t>(u)]) {
        int& cv = colour[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  PartiteSplit split;
  for (Index v = 0; v < n; ++v) (colour[static_cast<std::size_t>(v)] == 0 ? split.part1 : split.part2).push_back(v);
  return split;
}

bool is_connected(const Graph& g) {
  const Index n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Index> queue{0};
  seen[0] = true;
  Index count = 1;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index v : g.neighbors()[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      ++count;
      queue.push_back(v);
    }
  }
  return count == n;
}

std::optional<Index> regularity(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const Index k = g.degree(0);
  for (Index v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

Eigen::MatrixXi biadjacency(const Graph& g, const PartiteSplit& split) {
  const Index n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Index v : split.part1) {
    if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) throw ShapeMismatch("invalid partite split");
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (Index v : split.part2) {
    if (v < 0 || v >= n || side[static_cast<std::size_t>(v)] != -1) throw ShapeMismatch("invalid partite split");
    side[static_cast<std::size_t>(v)] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) throw ShapeMismatch("partite split does not cover all vertices");
  for (const auto& [u, v] : g.edges())
    if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)])
      throw ShapeMismatch("edge inside a partite set");

  std::vector<Index> rows = split.part1;
  std::vector<Index> cols = split.part2;
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  Eigen::MatrixXi block(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      block(static_cast<Index>(i), static_cast<Index>(j)) = g.adjacency()(rows[i], cols[j]);
  return block;
}

}  // namespace walklab
