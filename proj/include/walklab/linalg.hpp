#pragma once

#include "walklab/poly.hpp"
#include "walklab/types.hpp"

namespace walklab {

/// Characteristic polynomial det(xI - A) by exact reduction to upper
/// Hessenberg form over Q followed by the Hessenberg determinant recurrence.
RatPoly charpoly_hessenberg(RatMatrix a);

/// Characteristic polynomial of an integer matrix. Monic with integer coefficients.
template <typename Derived>
IntPoly charpoly(const Eigen::MatrixBase<Derived>& a) {
  auto p = to_integer(charpoly_hessenberg(cast_matrix<Rational>(a)));
  if (!p) throw std::logic_error("charpoly: integer matrix produced non-integral coefficients");
  return *p;
}

/// Fraction-free determinant (Bareiss) of an integer matrix.
BigInt determinant_bareiss(IntMatrix a);

/// Characteristic polynomial from n + 1 Bareiss determinants det(tI - A),
/// t = 0..n, interpolated exactly. Independent of the Hessenberg route and
/// O(n^4); intended as a cross-check on small matrices.
IntPoly charpoly_bareiss(const IntMatrix& a);

/// Exact rank by fraction-free elimination (rows are scaled to integers first).
Index rank(const RatMatrix& a);
inline Index kernel_dim(const RatMatrix& a) { return a.cols() - rank(a); }

/// Horner evaluation p(A).
RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& a);

/// A^e by repeated squaring.
template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, unsigned e) {
  Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
  Matrix<Scalar> base = a;
  while (e) {
    if (e & 1U) result = (result * base).eval();
    e >>= 1U;
    if (e) base = (base * base).eval();
  }
  return result;
}

}  // namespace walklab
