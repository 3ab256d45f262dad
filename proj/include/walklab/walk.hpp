#pragma once

#include "walklab/graph.hpp"
#include "walklab/poly.hpp"
#include "walklab/spectrum.hpp"

namespace walklab {

/// Largest arc count for which the dense arc-space matrices are materialised.
inline constexpr Index kMaxDenseArcs = 2048;

/// Grover walk matrices of a connected k-regular graph, arcs in canonical order.
///
///   shift S         S_{a,b} = [b = a^-1]
///   discriminant T  T = A / k
///   time evolution  U = S (2 d^T d - I), so U_{a,b} = (2/k)[o(a) = t(b)] - [b = a^-1]
struct WalkMatrices {
  ArcSpace arcs;
  Eigen::MatrixXi shift;
  RatMatrix discriminant;
  RatMatrix time_evolution;
  Index degree = 0;

  /// k * U, an integer matrix.
  IntMatrix scaled_time_evolution() const;
};

/// Throws NotRegular / NotConnected; returns the common degree.
Index require_connected_regular(const Graph& g);

WalkMatrices build_walk_matrices(const Graph& g);

/// Characteristic polynomial of U assembled from the adjacency characteristic
/// polynomial through the spectral mapping: each discriminant eigenvalue
/// lambda with |lambda| < 1 contributes x^2 - 2 lambda x + 1, each of +1 and
/// -1 contributes a single linear factor, and the eigenvalues +1 and -1 gain
/// the extra multiplicities |E| - |V| + 1 and |E| - |V| + dim Ker(T + I).
/// Throws when the pieces do not add up to degree 2|E|.
RatPoly u_charpoly_via_mapping(const IntPoly& adjacency_charpoly, Index k, Index edges, Index vertices,
                               Index ker_dim);

/// The same polynomial kept in pieces: core * (x - 1)^plus_one * (x + 1)^minus_one,
/// where core is the transformed discriminant polynomial with +-1 removed.
struct MappedUPolynomial {
  RatPoly core;
  Index plus_one = 0;
  Index minus_one = 0;
  RatPoly expand() const;
};

MappedUPolynomial u_charpoly_mapping_parts(const IntPoly& adjacency_charpoly, Index k, Index edges, Index vertices,
                                           Index ker_dim);

/// Direct characteristic polynomial of U (dense; arcs limited by kMaxDenseArcs).
RatPoly u_charpoly_direct(const WalkMatrices& w);

struct USpectrumModel {
  SpectrumExtraction t_entries;
  Index m_plus = 0;
  Index m_minus = 0;
  RatPoly u_charpoly;
};

USpectrumModel u_spectrum_model(const Graph& g);

/// dim Ker(T + I) for a k-regular graph, i.e. the multiplicity of -k in A.
Index discriminant_minus_one_multiplicity(const Graph& g, Index k);

}  // namespace walklab
