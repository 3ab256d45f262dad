#include "walklab/quadrangles.hpp"

#include <stdexcept>

namespace walklab {

QuadrangleCount count_quadrangles(const Graph& g) {
  const Index n = g.order();
  const auto& nb = g.neighbors();
  QuadrangleCount out;
  out.per_vertex.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> two_walks(static_cast<std::size_t>(n), 0);
  std::int64_t sum = 0;
  for (Index x = 0; x < n; ++x) {
    std::fill(two_walks.begin(), two_walks.end(), 0);
    std::int64_t case_c = 0;
    for (Index y : nb[static_cast<std::size_t>(x)]) {
      case_c += g.degree(y) - 1;
      for (Index z : nb[static_cast<std::size_t>(y)]) ++two_walks[static_cast<std::size_t>(z)];
    }
    // (A^4)_xx = sum_z (A^2)_xz^2
    std::int64_t closed4 = 0;
    for (std::int64_t w : two_walks) closed4 += w * w;
    const std::int64_t deg = g.degree(x);
    const std::int64_t cycles2 = closed4 - deg - deg * (deg - 1) - case_c;
    if (cycles2 < 0 || cycles2 % 2) throw std::logic_error("count_quadrangles: inconsistent walk count");
    out.per_vertex[static_cast<std::size_t>(x)] = cycles2 / 2;
    sum += cycles2 / 2;
  }
  if (sum % 4) throw std::logic_error("count_quadrangles: per-vertex counts do not sum to 4q");
  out.total = sum / 4;
  return out;
}

QuadrangleCount count_quadrangles_by_subsets(const Graph& g) {
  const Index n = g.order();
  QuadrangleCount out;
  out.per_vertex.assign(static_cast<std::size_t>(n), 0);
  auto adj = [&g](Index u, Index v) { return g.adjacent(u, v); };
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      for (Index c = b + 1; c < n; ++c)
        for (Index d = c + 1; d < n; ++d) {
          // The three distinct cyclic orders of {a, b, c, d}.
          const int found = (adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a)) +
                            (adj(a, b) && adj(b, d) && adj(d, c) && adj(c, a)) +
                            (adj(a, c) && adj(c, b) && adj(b, d) && adj(d, a));
          if (!found) continue;
          out.total += found;
          for (Index v : {a, b, c, d}) out.per_vertex[static_cast<std::size_t>(v)] += found;
        }
  return out;
}

}  // namespace walklab
