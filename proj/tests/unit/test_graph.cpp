#include "doctest.h"
#include "helpers.hpp"

#include "walklab/builder.hpp"
#include "walklab/constructions.hpp"
#include "walklab/graph.hpp"
#include "walklab/graph_io.hpp"
#include "walklab/linalg.hpp"
#include "walklab/quadrangles.hpp"
#include "walklab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace walklab;
using walklab::test::root;
using walklab::test::spec;
using walklab::test::spec_pm;

namespace {

Graph random_graph(std::mt19937_64& rng, Index n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// 4-cycles through each vertex by walking every path x-a-b-c-x with distinct vertices.
std::vector<std::int64_t> quadrangles_by_paths(const Graph& g) {
  const Index n = g.order();
  std::vector<std::int64_t> through(static_cast<std::size_t>(n), 0);
  for (Index x = 0; x < n; ++x)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) {
          if (a == b || a == c || b == c || x == a || x == b || x == c) continue;
          if (g.adjacent(x, a) && g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, x))
            ++through[static_cast<std::size_t>(x)];
        }
  for (auto& t : through) t /= 2;  // each cycle is traversed in two directions
  return through;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("construction validates the adjacency matrix") {
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(3, 3);
    a(0, 1) = 1;
    CHECK_THROWS(Graph(a));
    a(1, 0) = 1;
    CHECK(Graph(a).edge_count() == 1);
    a(2, 2) = 1;
    CHECK_THROWS(Graph(a));
    CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
    CHECK_THROWS(Graph::from_edges(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph::from_edges(3, {{0, 3}}));
  }

  TEST_CASE("arc space is canonical with a fixed-point-free inverse") {
    const Graph g = petersen();
    const ArcSpace s = arc_space(g);
    REQUIRE(s.size() == 30);
    for (Index a = 0; a < s.size(); ++a) {
      const auto& arc = s.arcs[static_cast<std::size_t>(a)];
      const Index inv = s.inverse[static_cast<std::size_t>(a)];
      CHECK(inv != a);
      CHECK(s.inverse[static_cast<std::size_t>(inv)] == a);
      CHECK(s.arcs[static_cast<std::size_t>(inv)].origin == arc.terminus);
      CHECK(s.find(arc.origin, arc.terminus) == a);
      if (a > 0) {
        const auto& prev = s.arcs[static_cast<std::size_t>(a - 1)];
        CHECK(std::pair(prev.origin, prev.terminus) < std::pair(arc.origin, arc.terminus));
      }
    }
    CHECK(s.find(0, 0) == -1);
  }

  TEST_CASE("predicates") {
    const auto split = is_bipartite(cycle(6));
    REQUIRE(split);
    CHECK(split->part1.size() == 3);
    CHECK(split->part2.size() == 3);
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK_FALSE(regularity(complete_bipartite(1, 3)));
    CHECK(*regularity(petersen()) == 3);
    CHECK_FALSE(is_connected(disjoint_union(cycle(3), cycle(3))));
    CHECK(is_connected(hypercube(4)));
  }

  TEST_CASE("biadjacency blocks reassemble the adjacency matrix") {
    const Graph g = cartesian_product(cycle(4), cycle(6));
    const auto split = is_bipartite(g);
    REQUIRE(split);
    const Eigen::MatrixXi n = biadjacency(g, *split);
    CHECK(n.sum() == g.edge_count());
    for (std::size_t i = 0; i < split->part1.size(); ++i)
      for (std::size_t j = 0; j < split->part2.size(); ++j)
        CHECK(n(static_cast<Index>(i), static_cast<Index>(j)) == g.adjacency()(split->part1[i], split->part2[j]));
  }
}

TEST_SUITE("constructions") {
  TEST_CASE("basic families") {
    const Graph c6 = cycle(6);
    CHECK(c6.order() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(*regularity(c6) == 2);
    CHECK(adjacency_spectrum(c6) == spec_pm({{2, 1}, {1, 2}}));
    CHECK_THROWS(cycle(2));

    const Graph k33 = complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    CHECK(*regularity(k33) == 3);
    CHECK(adjacency_spectrum(k33) == spec_pm({{3, 1}}, {{0, 4}}));
    CHECK(complete_bipartite(1, 1) == complete(2));

    const Graph q3 = hypercube(3);
    CHECK(q3.order() == 8);
    CHECK(*regularity(q3) == 3);
    CHECK(adjacency_spectrum(q3) == spec_pm({{3, 1}, {1, 3}}));
    CHECK(adjacency_spectrum(hamming(4, 2)) == spec_pm({{4, 1}, {2, 4}}, {{0, 6}}));
    CHECK(hamming(1, 5) == complete(5));
    CHECK(adjacency_spectrum(petersen()) == spec({{3, 1}, {1, 5}, {-2, 4}}));
  }

  TEST_CASE("line graphs") {
    CHECK(adjacency_spectrum(line_graph(hypercube(3))) == spec({{4, 1}, {2, 3}, {0, 3}, {-2, 5}}));
    for (Index n = 3; n <= 9; ++n) {
      const Graph l = line_graph(cycle(n));
      CHECK(l.order() == n);
      CHECK(*regularity(l) == 2);
      CHECK(is_connected(l));
    }
    CHECK(line_graph(complete_bipartite(1, 3)) == cycle(3));
  }

  TEST_CASE("blow-ups and products") {
    CHECK(adjacency_spectrum(tensor_allones(cycle(6), 2)) == spec_pm({{4, 1}, {2, 2}}, {{0, 6}}));
    CHECK(tensor_allones(petersen(), 1) == petersen());
    const Graph c8j3 = tensor_allones(cycle(8), 3);
    CHECK(c8j3.order() == 24);
    CHECK(*regularity(c8j3) == 6);
    CHECK(adjacency_spectrum(c8j3) == spec_pm({{6, 1}, {root(3, 2), 2}}, {{0, 18}}));

    CHECK(adjacency_spectrum(bipartite_double(line_graph(hypercube(3)))) == spec_pm({{4, 1}, {2, 8}}, {{0, 6}}));
    CHECK(adjacency_spectrum(cartesian_product(complete_bipartite(4, 4), complete_bipartite(4, 4))) ==
          spec_pm({{8, 1}, {4, 12}}, {{0, 38}}));
    // K2 (x) K2 is a perfect matching on four vertices
    const Graph d = bipartite_double(complete(2));
    CHECK(d.order() == 4);
    CHECK(*regularity(d) == 1);
    CHECK_FALSE(is_connected(d));
    CHECK(adjacency_spectrum(bipartite_double(cycle(3))) == adjacency_spectrum(cycle(6)));
  }

  TEST_CASE("bipartite double spectrum is the union with its negation") {
    for (const auto& ng : builtin_catalog()) {
      if (ng.graph.order() > 24) continue;
      auto s = extract_spectrum(charpoly(ng.graph.adjacency()));
      if (!std::holds_alternative<Spectrum>(s)) continue;
      const Spectrum base = std::get<Spectrum>(s);
      CHECK_MESSAGE(adjacency_spectrum(bipartite_double(ng.graph)) == base.merged(base.negated()), ng.name);
    }
  }

  TEST_CASE("catalog members are connected and regular") {
    for (const auto& ng : builtin_catalog()) {
      CHECK_MESSAGE(is_connected(ng.graph), ng.name);
      CHECK_MESSAGE(regularity(ng.graph).has_value(), ng.name);
    }
  }
}

TEST_SUITE("graph_io") {
  TEST_CASE("graph6 round trips") {
    CHECK(write_graph6(petersen()) == "IheA@GUAo");
    CHECK(read_graph6("IheA@GUAo") == petersen());
    CHECK(read_graph6(">>graph6<<IheA@GUAo") == petersen());
    std::mt19937_64 rng(17);
    for (Index n : {1, 2, 5, 62, 63, 64, 100}) {
      const Graph g = random_graph(rng, n, 0.3);
      CHECK(read_graph6(write_graph6(g)) == g);
      CHECK(read_graph6(write_graph6(g, true)) == g);
    }
    CHECK_THROWS_AS(read_graph6("I~~"), ParseError);
    CHECK_THROWS_AS(read_graph6(""), ParseError);
  }

  TEST_CASE("edge lists") {
    const Graph g = cycle(5);
    std::istringstream in(write_edge_list(g));
    CHECK(read_edge_list(in) == g);
    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    CHECK(read_graph_auto("3 3\n0 1\n1 2\n0 2\n") == cycle(3));
    CHECK(read_graph_auto("IheA@GUAo\n") == petersen());
    CHECK_THROWS(load_graph_file("/nonexistent/graph.g6"));
  }
}

TEST_SUITE("quadrangles") {
  TEST_CASE("small examples") {
    const auto c4 = count_quadrangles(cycle(4));
    CHECK(c4.total == 1);
    CHECK(std::all_of(c4.per_vertex.begin(), c4.per_vertex.end(), [](auto v) { return v == 1; }));
    const auto k33 = count_quadrangles(complete_bipartite(3, 3));
    CHECK(k33.total == 9);
    CHECK(std::all_of(k33.per_vertex.begin(), k33.per_vertex.end(), [](auto v) { return v == 6; }));
    CHECK(std::accumulate(k33.per_vertex.begin(), k33.per_vertex.end(), std::int64_t{0}) == 4 * 9);
    CHECK(count_quadrangles(cycle(6)).total == 0);
    CHECK(count_quadrangles(complete(4)).total == 3);
  }

  TEST_CASE("walk count, subset enumeration and path enumeration agree") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
      const Graph g = random_graph(rng, 4 + t % 9, 0.45);
      const auto walk = count_quadrangles(g);
      const auto subsets = count_quadrangles_by_subsets(g);
      CHECK(walk.total == subsets.total);
      CHECK(walk.per_vertex == subsets.per_vertex);
      CHECK(walk.per_vertex == quadrangles_by_paths(g));
    }
  }
}

TEST_SUITE("builder") {
  TEST_CASE("expressions") {
    CHECK(build_graph("tensorj(cycle(6),2)") == tensor_allones(cycle(6), 2));
    CHECK(build_graph(" tensorj ( cycle ( 6 ) , 2 ) ") == tensor_allones(cycle(6), 2));
    CHECK(build_graph("petersen") == petersen());
    CHECK(build_graph("petersen()") == petersen());
    CHECK(build_graph("bdouble(line(hypercube(3)))") == bipartite_double(line_graph(hypercube(3))));
    CHECK(build_graph("cart(kbip(4,4),kbip(4,4))") ==
          cartesian_product(complete_bipartite(4, 4), complete_bipartite(4, 4)));
    CHECK(build_graph("kron(complete(3),complete(2))") == kronecker_product(complete(3), complete(2)));
    CHECK(build_graph("hamming(2,3)") == hamming(2, 3));
    CHECK(build_graph("complete(4)") == complete(4));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(build_graph(""), ParseError);
    CHECK_THROWS_AS(build_graph("cycle(2)"), ParseError);
    CHECK_THROWS_AS(build_graph("cycle(6"), ParseError);
    CHECK_THROWS_AS(build_graph("frobnicate(3)"), ParseError);
    CHECK_THROWS_AS(build_graph("cycle(6) x"), ParseError);
    CHECK_THROWS_AS(build_graph("tensorj(cycle(6))"), ParseError);
    CHECK_THROWS_AS(build_graph("cycle(abc)"), ParseError);
  }
}
