#include "walklab/walk.hpp"

#include "walklab/linalg.hpp"

#include <string>

namespace walklab {

Index require_connected_regular(const Graph& g) {
  const auto k = regularity(g);
  if (!k || *k == 0) throw NotRegular();
  if (!is_connected(g)) throw NotConnected();
  return *k;
}

IntMatrix WalkMatrices::scaled_time_evolution() const {
  IntMatrix w(time_evolution.rows(), time_evolution.cols());
  for (Index i = 0; i < w.rows(); ++i)
    for (Index j = 0; j < w.cols(); ++j) w(i, j) = numerator_of(Rational(time_evolution(i, j) * degree));
  return w;
}

WalkMatrices build_walk_matrices(const Graph& g) {
  const Index k = require_connected_regular(g);
  WalkMatrices w;
  w.degree = k;
  w.arcs = arc_space(g);
  const Index arcs = w.arcs.size();
  if (arcs > kMaxDenseArcs)
    throw SizeLimitExceeded(std::to_string(arcs) + " arcs (dense walk matrices limited to " +
                            std::to_string(kMaxDenseArcs) + ")");

  w.shift = Eigen::MatrixXi::Zero(arcs, arcs);
  for (Index a = 0; a < arcs; ++a) w.shift(a, w.arcs.inverse[static_cast<std::size_t>(a)]) = 1;

  w.discriminant = cast_matrix<Rational>(g.adjacency()) / Rational(k);

  const Rational two_over_k(2, k);
  w.time_evolution = RatMatrix::Zero(arcs, arcs);
  for (Index a = 0; a < arcs; ++a) {
    const Index origin = w.arcs.arcs[static_cast<std::size_t>(a)].origin;
    // arcs b with t(b) = o(a) are (y, origin) for every neighbour y
    for (Index y : g.neighbors()[static_cast<std::size_t>(origin)]) w.time_evolution(a, w.arcs.find(y, origin)) = two_over_k;
    w.time_evolution(a, w.arcs.inverse[static_cast<std::size_t>(a)]) -= 1;
  }
  return w;
}

RatPoly MappedUPolynomial::expand() const {
  const RatPoly x_minus_one = RatPoly::linear_root(Rational(1));
  const RatPoly x_plus_one = RatPoly::linear_root(Rational(-1));
  return core * x_minus_one.pow(static_cast<unsigned>(plus_one)) * x_plus_one.pow(static_cast<unsigned>(minus_one));
}

RatPoly u_charpoly_via_mapping(const IntPoly& adjacency_charpoly, Index k, Index edges, Index vertices,
                               Index ker_dim) {
  return u_charpoly_mapping_parts(adjacency_charpoly, k, edges, vertices, ker_dim).expand();
}

MappedUPolynomial u_charpoly_mapping_parts(const IntPoly& adjacency_charpoly, Index k, Index edges, Index vertices,
                                           Index ker_dim) {
  if (k < 1) throw std::invalid_argument("u_charpoly_via_mapping: degree must be positive");
  if (adjacency_charpoly.degree() != vertices)
    throw std::invalid_argument("u_charpoly_via_mapping: characteristic polynomial degree differs from |V|");

  // p_T(t) = p_A(k t) / k^n
  RatPoly pt = to_rational(adjacency_charpoly).scale_argument(Rational(k));
  pt = monic(pt);

  auto strip = [&pt](const RatPoly& factor, Index times) {
    for (Index i = 0; i < times; ++i) {
      auto q = exact_divide(pt, factor);
      if (!q) throw std::invalid_argument("u_charpoly_via_mapping: factor missing from discriminant polynomial");
      pt = std::move(*q);
    }
  };
  const RatPoly t_minus_one = RatPoly::linear_root(Rational(1));
  const RatPoly t_plus_one = RatPoly::linear_root(Rational(-1));
  strip(t_minus_one, 1);
  strip(t_plus_one, ker_dim);

  // (2x)^d g((x^2 + 1) / (2x)) = sum_i g_i (x^2 + 1)^i (2x)^(d - i)
  const int d = pt.degree();
  const RatPoly x2_plus_1({Rational(1), Rational(0), Rational(1)});
  const RatPoly two_x({Rational(0), Rational(2)});
  std::vector<RatPoly> two_x_powers{RatPoly::constant(1)};
  for (int i = 1; i <= d; ++i) two_x_powers.push_back(two_x_powers.back() * two_x);
  RatPoly mapped;
  RatPoly x2_power = RatPoly::constant(1);
  for (int i = 0; i <= d; ++i) {
    mapped += x2_power * two_x_powers[static_cast<std::size_t>(d - i)] * pt[static_cast<std::size_t>(i)];
    x2_power *= x2_plus_1;
  }

  const Index m_plus = edges - vertices + 1;
  const Index m_minus = edges - vertices + ker_dim;
  if (m_plus < 0 || m_minus < 0) throw std::invalid_argument("u_charpoly_via_mapping: negative multiplicity");
  const Index total = 2 * d + 1 + ker_dim + m_plus + m_minus;
  if (total != 2 * edges)
    throw std::invalid_argument("u_charpoly_via_mapping: degree " + std::to_string(total) + " differs from 2|E| = " +
                                std::to_string(2 * edges));

  return MappedUPolynomial{std::move(mapped), 1 + m_plus, ker_dim + m_minus};
}

RatPoly u_charpoly_direct(const WalkMatrices& w) {
  // det(xI - U) = k^-N det(kx I - kU)
  const IntPoly scaled = charpoly(w.scaled_time_evolution());
  RatPoly p = to_rational(scaled).scale_argument(Rational(w.degree));
  return monic(p);
}

Index discriminant_minus_one_multiplicity(const Graph& g, Index k) {
  RatMatrix shifted = cast_matrix<Rational>(g.adjacency());
  shifted.diagonal().array() += Rational(k);
  return kernel_dim(shifted);
}

USpectrumModel u_spectrum_model(const Graph& g) {
  const Index k = require_connected_regular(g);
  const IntPoly pa = charpoly(g.adjacency());
  const Index ker = discriminant_minus_one_multiplicity(g, k);
  USpectrumModel model;
  model.m_plus = g.edge_count() - g.order() + 1;
  model.m_minus = g.edge_count() - g.order() + ker;
  model.u_charpoly = u_charpoly_via_mapping(pa, k, g.edge_count(), g.order(), ker);
  SpectrumExtraction a_spec = extract_spectrum(pa);
  if (auto* s = std::get_if<Spectrum>(&a_spec)) {
    model.t_entries = s->scaled(Rational(1, k));
  } else {
    auto u = std::get<Unresolved>(a_spec);
    model.t_entries = Unresolved{u.residual, u.partial.scaled(Rational(1, k))};
  }
  return model;
}

}  // namespace walklab
