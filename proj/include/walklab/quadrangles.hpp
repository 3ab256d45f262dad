#pragma once

#include "walklab/graph.hpp"

#include <cstdint>
#include <vector>

namespace walklab {

struct QuadrangleCount {
  std::int64_t total = 0;                 ///< distinct 4-cycles
  std::vector<std::int64_t> per_vertex;   ///< 4-cycles through each vertex
};

/// Counts 4-cycles from closed 4-walks. A closed 4-walk at x either
/// (a) goes x-y-x-y-x, (b) x-y1-x-y2-x with y1 != y2, (c) x-y1-y2-y1-x with
/// y2 != x, or (d) traces a 4-cycle in one of two directions, so
/// (A^4)_xx = deg x + deg x (deg x - 1) + sum_{y~x} (deg y - 1) + 2 q_x.
QuadrangleCount count_quadrangles(const Graph& g);

/// Independent oracle: enumerates every 4-subset and its three cyclic orders.
QuadrangleCount count_quadrangles_by_subsets(const Graph& g);

}  // namespace walklab
