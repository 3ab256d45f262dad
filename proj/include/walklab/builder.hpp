#pragma once

#include "walklab/graph.hpp"

#include <string_view>

namespace walklab {

/// Builds a graph from an expression such as "tensorj(cycle(6), 2)".
///
///   cycle(n)  complete(n)  kbip(p,q)  hamming(d,q)  hypercube(d)  petersen
///   line(e)  tensorj(e,m)  cart(e,e)  kron(e,e)  bdouble(e)
///
/// Whitespace is ignored. Throws ParseError.
Graph build_graph(std::string_view expr);

}  // namespace walklab
