#include "doctest.h"
#include "helpers.hpp"

#include "walklab/constructions.hpp"
#include "walklab/linalg.hpp"
#include "walklab/periodicity.hpp"
#include "walklab/structure.hpp"
#include "walklab/walk.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

using namespace walklab;
using walklab::test::rat;
using walklab::test::root;
using walklab::test::spec;
using walklab::test::spec_pm;

namespace {

// U straight from the definition, arcs enumerated independently of ArcSpace.
RatMatrix grover_by_definition(const Graph& g, Index k) {
  std::vector<std::pair<Index, Index>> arcs;
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y)
      if (g.adjacent(x, y)) arcs.emplace_back(x, y);
  const Index m = static_cast<Index>(arcs.size());
  RatMatrix u = RatMatrix::Zero(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      const auto [oa, ta] = arcs[static_cast<std::size_t>(a)];
      const auto [ob, tb] = arcs[static_cast<std::size_t>(b)];
      if (oa == tb) u(a, b) += Rational(2, k);
      if (ob == ta && tb == oa) u(a, b) -= 1;
    }
  return u;
}

// Smallest tau with lambda^tau ~ 1 for every eigenvalue of U, searched up to tau_max.
long numeric_period(const Graph& g, long tau_max) {
  const WalkMatrices w = build_walk_matrices(g);
  Eigen::MatrixXd u(w.time_evolution.rows(), w.time_evolution.cols());
  for (Index i = 0; i < u.rows(); ++i)
    for (Index j = 0; j < u.cols(); ++j) u(i, j) = w.time_evolution(i, j).convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> es(u, false);
  for (long tau = 1; tau <= tau_max; ++tau) {
    bool all = true;
    for (Index i = 0; i < es.eigenvalues().size() && all; ++i)
      all = std::abs(std::pow(es.eigenvalues()(i), static_cast<double>(tau)) - 1.0) < 1e-6;
    if (all) return tau;
  }
  return 0;
}

}  // namespace

TEST_SUITE("walk") {
  TEST_CASE("time evolution matches the defining formula") {
    for (const auto& ng : builtin_catalog()) {
      if (2 * ng.graph.edge_count() > 120) continue;
      const WalkMatrices w = build_walk_matrices(ng.graph);
      CHECK_MESSAGE(w.time_evolution == grover_by_definition(ng.graph, w.degree), ng.name);
      const RatMatrix s = cast_matrix<Rational>(w.shift);
      CHECK_MESSAGE(s * s == RatMatrix::Identity(s.rows(), s.cols()), ng.name);
      CHECK_MESSAGE(w.time_evolution.transpose() * w.time_evolution ==
                        RatMatrix::Identity(s.rows(), s.cols()), ng.name);
      CHECK(w.discriminant == cast_matrix<Rational>(ng.graph.adjacency()) / Rational(w.degree));
    }
  }

  TEST_CASE("K2 walk is the shift") {
    const WalkMatrices w = build_walk_matrices(complete(2));
    CHECK(w.time_evolution == cast_matrix<Rational>(w.shift));
    CHECK(u_charpoly_direct(w) == rat({-1, 0, 1}));
    const auto parts = u_charpoly_mapping_parts(charpoly(complete(2).adjacency()), 1, 1, 2, 1);
    CHECK(parts.expand() == rat({-1, 0, 1}));
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(build_walk_matrices(complete_bipartite(1, 3)), NotRegular);
    CHECK_THROWS_AS(build_walk_matrices(disjoint_union(cycle(3), cycle(3))), NotConnected);
    CHECK_THROWS_AS(u_charpoly_via_mapping(charpoly(cycle(6).adjacency()), 2, 6, 7, 1), std::invalid_argument);
  }

  TEST_CASE("mapping on C6 factors into cyclotomics") {
    const Graph c6 = cycle(6);
    const RatPoly expected = rat({-1, 1}).pow(2) * rat({1, 1}).pow(2) * rat({1, -1, 1}).pow(2) * rat({1, 1, 1}).pow(2);
    const RatPoly mapped = u_charpoly_via_mapping(charpoly(c6.adjacency()), 2, 6, 6, 1);
    CHECK(mapped == expected);
    CHECK(mapped.degree() == 12);
    CHECK(u_charpoly_direct(build_walk_matrices(c6)) == expected);
  }

  TEST_CASE("mapping equals direct characteristic polynomial") {
    for (const auto& ng : builtin_catalog()) {
      if (2 * ng.graph.edge_count() > kOracleMaxArcs) continue;
      const WalkMatrices w = build_walk_matrices(ng.graph);
      const Index ker = discriminant_minus_one_multiplicity(ng.graph, w.degree);
      const RatPoly mapped =
          u_charpoly_via_mapping(charpoly(ng.graph.adjacency()), w.degree, ng.graph.edge_count(), ng.graph.order(), ker);
      CHECK_MESSAGE(mapped == u_charpoly_direct(w), ng.name);
      CHECK(mapped.degree() == 2 * ng.graph.edge_count());
    }
  }

  TEST_CASE("zero discriminant eigenvalues give +-i") {
    const auto model = u_spectrum_model(tensor_allones(cycle(6), 2));
    const RatPoly phi4 = rat({1, 0, 1});
    CHECK(exact_divide(model.u_charpoly, phi4.pow(6)));
    CHECK_FALSE(exact_divide(model.u_charpoly, phi4.pow(7)));
    REQUIRE(std::holds_alternative<Spectrum>(model.t_entries));
    CHECK(std::get<Spectrum>(model.t_entries).multiplicity_of(0) == 6);
  }
}

TEST_SUITE("periodicity") {
  TEST_CASE("cycles and blow-ups") {
    const auto c6 = decide_periodic(cycle(6));
    REQUIRE(is_periodic(c6));
    CHECK(std::get<Periodic>(c6).period == 6);
    CHECK(std::get<Periodic>(c6).cyclotomic_orders == OrderMultiset{{1, 2}, {2, 2}, {3, 2}, {6, 2}});
    CHECK(to_string(c6) == "PERIODIC period=6 orders={1,2,3,6}");

    for (Index m = 2; m <= 3; ++m) {
      const auto v = decide_periodic(tensor_allones(cycle(6), m));
      REQUIRE(is_periodic(v));
      CHECK(std::get<Periodic>(v).period == 12);
    }
    for (Index m = 1; m <= 3; ++m) {
      const auto v = decide_periodic(tensor_allones(cycle(8), m));
      REQUIRE(is_periodic(v));
      CHECK(std::get<Periodic>(v).period == 8);
    }
  }

  TEST_CASE("Petersen is not periodic") {
    const auto v = decide_periodic(petersen());
    REQUIRE_FALSE(is_periodic(v));
    const auto& w = std::get<NotPeriodic>(v).witness;
    REQUIRE(std::holds_alternative<QuadraticNumber>(w));
    CHECK(std::get<QuadraticNumber>(w) == QuadraticNumber(Rational(1, 3)));
    CHECK(to_string(v) == "NOT PERIODIC witness=1/3");
    CHECK(to_json(v) == R"({"periodic":false,"witness":"1/3"})");

    PeriodicityOptions sieve_only;
    sieve_only.witness_path = false;
    const auto s = decide_periodic(petersen(), sieve_only);
    REQUIRE_FALSE(is_periodic(s));
    CHECK(std::holds_alternative<RatPoly>(std::get<NotPeriodic>(s).witness));
  }

  TEST_CASE("verdicts agree with the exact matrix-power oracle") {
    for (const auto& ng : builtin_catalog()) {
      if (2 * ng.graph.edge_count() > 100) continue;
      const auto v = decide_periodic(ng.graph);
      const auto oracle = period_oracle(ng.graph, 120);
      CHECK_MESSAGE(is_periodic(v) == oracle.has_value(), ng.name);
      if (oracle && is_periodic(v)) CHECK_MESSAGE(std::get<Periodic>(v).period == *oracle, ng.name);
    }
  }

  TEST_CASE("periods agree with floating point eigenvalues") {
    for (const auto& ng : builtin_catalog()) {
      if (2 * ng.graph.edge_count() > 100) continue;
      const auto v = decide_periodic(ng.graph);
      const long expected = is_periodic(v) ? std::get<Periodic>(v).period : 0;
      CHECK_MESSAGE(numeric_period(ng.graph, 60) == expected, ng.name);
    }
  }

  TEST_CASE("witness and sieve paths agree") {
    PeriodicityOptions sieve_only;
    sieve_only.witness_path = false;
    for (const auto& ng : builtin_catalog())
      CHECK_MESSAGE(is_periodic(decide_periodic(ng.graph)) == is_periodic(decide_periodic(ng.graph, sieve_only)),
                    ng.name);
  }

  TEST_CASE("oracle examples") {
    CHECK(period_oracle(cycle(6), 24) == 6);
    CHECK(period_oracle(complete_bipartite(2, 2), 8) == 4);
    CHECK_FALSE(period_oracle(petersen(), 1000));
    CHECK_THROWS_AS(period_oracle(hypercube(6), 10), SizeLimitExceeded);
  }

  TEST_CASE("JSON rendering") {
    CHECK(to_json(decide_periodic(cycle(8))).find(R"("period":8)") != std::string::npos);
    CHECK(to_json(decide_periodic(cycle(4))).rfind(R"({"periodic":true)", 0) == 0);
  }

  TEST_CASE("eigenvalue gate") {
    CHECK(eigenvalue_gate(6, 3));
    CHECK(eigenvalue_gate(6, root(3, 2)));
    CHECK(eigenvalue_gate(6, root(3, 3)));
    CHECK_FALSE(eigenvalue_gate(5, QuadraticNumber(Rational(5, 2))));
    CHECK_FALSE(eigenvalue_gate(4, 1));
    CHECK_FALSE(eigenvalue_gate(4, 0));
    CHECK_FALSE(eigenvalue_gate(4, 4));
    CHECK_FALSE(eigenvalue_gate(4, QuadraticNumber(Rational(1), Rational(1), BigInt(2))));
    // 2cos(2pi/5) = (sqrt5 - 1)/2 is integral but theta^2 is irrational
    CHECK_FALSE(eigenvalue_gate(4, QuadraticNumber(Rational(-1), Rational(1), BigInt(5))));
  }
}

TEST_SUITE("structure") {
  TEST_CASE("walk regularity") {
    CHECK(walk_regularity_check(tensor_allones(cycle(6), 2)));
    CHECK_FALSE(walk_regularity_check(complete_bipartite(1, 3)));
    for (Index n = 3; n <= 10; ++n) CHECK(walk_regularity_check(cycle(n)));
    CHECK(walk_regularity_check(petersen()));
    // regular but not walk-regular: the disjoint union of K4 and Q3 (both 3-regular)
    CHECK_FALSE(walk_regularity_check(disjoint_union(complete(4), hypercube(3))));
  }

  TEST_CASE("Hoffman identity") {
    for (const auto& ng : builtin_catalog()) {
      if (ng.name == "C7") continue;  // spectrum not quadratic
      CHECK_MESSAGE(hoffman_check(ng.graph), ng.name);
    }
    CHECK_FALSE(hoffman_check(disjoint_union(cycle(3), cycle(3))));
    CHECK_THROWS_AS(hoffman_check(complete_bipartite(1, 3)), NotRegular);
  }

  TEST_CASE("quadrangle reports") {
    const auto a = quadrangle_report(spec_pm({{6, 1}, {3, 4}}, {{0, 14}}), 24, 6);
    CHECK(a.q_spectral == 207);
    CHECK(a.qx_spectral == Rational(69, 2));
    CHECK_FALSE(a.q_brute);

    const auto b = quadrangle_report(spec_pm({{6, 1}, {3, 68}}, {{0, 78}}), 216, 6);
    CHECK(b.q_spectral == -81);

    const auto c = quadrangle_report(spec_pm({{2, 1}, {1, 2}}), 6, 2, cycle(6));
    CHECK(c.q_spectral == 0);
    CHECK(c.q_brute == 0);
    CHECK(c.per_vertex_constant);

    const auto d = quadrangle_report(adjacency_spectrum(hamming(4, 2)), 16, 4, hamming(4, 2));
    CHECK(d.q_brute == 24);
    CHECK(d.q_spectral == 24);
    CHECK(d.qx_spectral == 6);
  }

  TEST_CASE("biadjacency identities") {
    CHECK(verify_biadjacency_identities(cycle(6)));
    CHECK(verify_biadjacency_identities(tensor_allones(cycle(6), 2)));
    CHECK(verify_biadjacency_identities(hamming(4, 2)));
    CHECK(verify_biadjacency_identities(bipartite_double(line_graph(hypercube(3)))));
    CHECK(verify_biadjacency_identities(cycle(8)));
    CHECK_THROWS_AS(verify_biadjacency_identities(cycle(10)), ShapeMismatch);
    CHECK_THROWS_AS(verify_biadjacency_identities(complete_bipartite(3, 3)), ShapeMismatch);

    // C6 by hand: N N^T = I + J
    const Graph c6 = cycle(6);
    const auto split = is_bipartite(c6);
    const Eigen::MatrixXi n = biadjacency(c6, *split);
    const Eigen::MatrixXi expected = Eigen::MatrixXi::Identity(3, 3) + Eigen::MatrixXi::Ones(3, 3);
    CHECK(n * n.transpose() == expected);
  }

  TEST_CASE("unresolved spectra") {
    CHECK_THROWS_AS(adjacency_spectrum(cycle(7)), UnresolvedSpectrum);
  }
}
