#include "walklab/selfcheck.hpp"

#include "walklab/constructions.hpp"
#include "walklab/cyclotomic.hpp"
#include "walklab/feasibility.hpp"
#include "walklab/linalg.hpp"
#include "walklab/periodicity.hpp"
#include "walklab/quadrangles.hpp"
#include "walklab/structure.hpp"
#include "walklab/tables.hpp"
#include "walklab/walk.hpp"

#include <functional>
#include <optional>
#include <random>
#include <set>

namespace walklab {

namespace {

using Check = std::function<std::string()>;  // empty string on success

InvariantResult run(const std::string& name, const Check& check) {
  InvariantResult r{name, false, ""};
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

bool small(const NamedGraph& g) { return 2 * g.graph.edge_count() <= kOracleMaxArcs; }

// Catalog members whose adjacency spectrum is rational or real quadratic.
std::optional<Spectrum> resolved_spectrum(const Graph& g) {
  auto extracted = extract_spectrum(charpoly(g.adjacency()));
  if (auto* s = std::get_if<Spectrum>(&extracted)) return std::move(*s);
  return std::nullopt;
}

}  // namespace

std::vector<InvariantResult> run_selfcheck(const SelfcheckOptions& options) {
  const std::vector<NamedGraph> catalog = builtin_catalog();
  CyclotomicSource source = [](long d) { return cyclotomic(d); };
  if (options.corrupt_cyclotomic) source = [](long d) { return cyclotomic(d == 6 ? 3 : d); };

  std::vector<InvariantResult> out;

  out.push_back(run("walk matrices orthogonal (U^T U = I, S^2 = I)", [&]() -> std::string {
    for (const auto& ng : catalog) {
      if (!small(ng)) continue;
      const WalkMatrices w = build_walk_matrices(ng.graph);
      const Index n = w.arcs.size();
      if ((w.time_evolution.transpose() * w.time_evolution).eval() != RatMatrix::Identity(n, n)) return ng.name;
      if ((w.shift * w.shift).eval() != Eigen::MatrixXi::Identity(n, n)) return ng.name;
    }
    return "";
  }));

  out.push_back(run("spectral mapping equals direct charpoly(U)", [&]() -> std::string {
    for (const auto& ng : catalog) {
      if (!small(ng)) continue;
      if (u_spectrum_model(ng.graph).u_charpoly != u_charpoly_direct(build_walk_matrices(ng.graph))) return ng.name;
    }
    return "";
  }));

  out.push_back(run("cyclotomic table: prod_{e|n} Phi_e = x^n - 1, n <= 100", [&]() -> std::string {
    for (long n = 1; n <= 100; ++n) {
      IntPoly prod = IntPoly::constant(1);
      for (long e = 1; e <= n; ++e)
        if (n % e == 0) prod *= source(e);
      if (prod != IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly::constant(1))
        return "n=" + std::to_string(n);
    }
    return "";
  }));

  out.push_back(run("sieve period agrees with exact U^tau oracle", [&]() -> std::string {
    PeriodicityOptions opts;
    opts.source = source;
    opts.witness_path = false;
    for (const auto& ng : catalog) {
      if (!small(ng)) continue;
      const PeriodicityVerdict v = decide_periodic(ng.graph, opts);
      const auto tau = period_oracle(ng.graph, 60);
      const auto* p = std::get_if<Periodic>(&v);
      if (p ? (!tau || *tau != p->period) : tau.has_value()) return ng.name;
    }
    return "";
  }));

  out.push_back(run("sum of squared eigenvalues equals nk", [&]() -> std::string {
    for (const auto& ng : catalog) {
      const auto s = resolved_spectrum(ng.graph);
      if (!s) continue;
      const Index k = *regularity(ng.graph);
      if (s->power_sum(2) != Rational(ng.graph.order() * k)) return ng.name;
    }
    return "";
  }));

  out.push_back(run("bipartite spectra symmetric", [&]() -> std::string {
    for (const auto& ng : catalog) {
      if (!is_bipartite(ng.graph)) continue;
      const auto s = resolved_spectrum(ng.graph);
      if (s && !s->is_symmetric()) return ng.name;
    }
    return "";
  }));

  out.push_back(run("Hoffman identity q(A) = (q(k)/n) J", [&]() -> std::string {
    for (const auto& ng : catalog)
      if (resolved_spectrum(ng.graph) && !hoffman_check(ng.graph)) return ng.name;
    if (hoffman_check(disjoint_union(cycle(3), cycle(3)))) return "disconnected 2C3 passed";
    return "";
  }));

  out.push_back(run("quadrangles: spectral q equals counted q", [&]() -> std::string {
    for (const auto& ng : catalog) {
      if (ng.graph.order() > 64) continue;
      const auto s = resolved_spectrum(ng.graph);
      if (!s) continue;
      const QuadrangleReport r = quadrangle_report(*s, ng.graph.order(), *regularity(ng.graph), ng.graph);
      const QuadrangleCount oracle = count_quadrangles_by_subsets(ng.graph);
      if (!r.q_brute || *r.q_brute != oracle.total || Rational(oracle.total) != r.q_spectral) return ng.name;
      if (walk_regularity_check(ng.graph) && (!r.per_vertex_constant || !is_integer(r.qx_spectral)))
        return ng.name + " (per-vertex)";
    }
    return "";
  }));

  out.push_back(run("biadjacency identities on C6, C6⊗J2, H(4,2), L(Q3)⊗K2", [&]() -> std::string {
    const std::pair<const char*, Graph> graphs[] = {
        {"C6", cycle(6)},
        {"C6⊗J2", tensor_allones(cycle(6), 2)},
        {"H(4,2)", hamming(4, 2)},
        {"L(Q3)⊗K2", bipartite_double(line_graph(hypercube(3)))},
    };
    for (const auto& [name, g] : graphs)
      if (!verify_biadjacency_identities(g)) return name;
    return "";
  }));

  out.push_back(run("eigenvalue gate holds on periodic five/four-eigenvalue graphs", [&]() -> std::string {
    for (const auto& ng : catalog) {
      if (!is_bipartite(ng.graph)) continue;
      const auto s = resolved_spectrum(ng.graph);
      if (!s || (s->distinct_count() != 4 && s->distinct_count() != 5)) continue;
      if (!is_periodic(decide_periodic(ng.graph))) continue;
      if (!eigenvalue_gate(static_cast<long>(*regularity(ng.graph)), s->entries()[1].value)) return ng.name;
    }
    return "";
  }));

  out.push_back(run("four-eigenvalue classification yields only C6", [&]() -> std::string {
    const auto rows = classify_four_eigenvalue(100);
    if (rows.size() != 1 || rows[0].k != 2 || rows[0].n != 6) return std::to_string(rows.size()) + " rows";
    if (rows[0].spectrum != adjacency_spectrum(cycle(6))) return "spectrum";
    return "";
  }));

  out.push_back(run("table regeneration matches reference n-columns (k <= 10)", [&]() -> std::string {
    const auto rows = build_tables(10);
    std::set<std::tuple<int, long, long>> ours;
    for (const auto& r : rows) ours.emplace(static_cast<int>(r.row.theta_class), r.row.k, r.row.n);
    std::set<std::tuple<int, long, long>> reference;
    for (const auto& r : reference_rows())
      if (r.k <= 10) reference.emplace(static_cast<int>(r.theta_class), r.k, r.n);
    if (ours != reference) return "row sets differ";
    const std::string csv = render_tables(rows, TableFormat::Csv);
    if (write_csv(read_csv(csv)) != csv) return "csv round trip";
    return "";
  }));

  out.push_back(run("algebraic-integer test agrees with minimal polynomial (1000 samples)", [&]() -> std::string {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<long> rad(2, 40);
    for (int i = 0; i < 1000; ++i) {
      const Rational p(num(rng), den(rng));
      const Rational q(num(rng), den(rng));
      const QuadraticNumber x(p, q, BigInt(rad(rng)));
      // x is a root of t^2 - trace t + norm (or t - p when rational)
      const bool expected = x.is_rational() ? is_integer(x.rational_part())
                                            : is_integer(x.trace()) && is_integer(x.norm());
      if (is_quadratic_algebraic_integer(x) != expected) return x.to_string();
    }
    return "";
  }));

  return out;
}

}  // namespace walklab
