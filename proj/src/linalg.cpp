#include "walklab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace walklab {

RatPoly charpoly_hessenberg(RatMatrix h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("charpoly: matrix must be square");
  const Index n = h.rows();

  // Similarity transforms to upper Hessenberg form.
  for (Index j = 0; j + 2 < n; ++j) {
    Index pivot = -1;
    for (Index i = j + 1; i < n; ++i) {
      if (h(i, j) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      h.row(pivot).swap(h.row(j + 1));
      h.col(pivot).swap(h.col(j + 1));
    }
    const Rational p = h(j + 1, j);
    for (Index i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      const Rational u = h(i, j) / p;
      for (Index c = j; c < n; ++c)
        if (h(j + 1, c) != 0) h(i, c) -= u * h(j + 1, c);
      for (Index r = 0; r < n; ++r)
        if (h(r, i) != 0) h(r, j + 1) += u * h(r, i);
    }
  }

  // p_m(x) = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}
  std::vector<RatPoly> polys;
  polys.reserve(static_cast<std::size_t>(n) + 1);
  polys.push_back(RatPoly::constant(1));
  for (Index m = 0; m < n; ++m) {
    RatPoly next = RatPoly::linear_root(h(m, m)) * polys.back();
    Rational prod = 1;
    for (Index i = 1; i <= m; ++i) {
      prod *= h(m - i + 1, m - i);
      if (prod == 0) break;
      const Rational& top = h(m - i, m);
      if (top == 0) continue;
      next -= polys[static_cast<std::size_t>(m - i)] * Rational(top * prod);
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

BigInt determinant_bareiss(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const Index n = a.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPoly charpoly_bareiss(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: matrix must be square");
  const Index n = a.rows();
  std::vector<Rational> xs;
  std::vector<Rational> coef;
  for (Index t = 0; t <= n; ++t) {
    IntMatrix m = -a;
    m.diagonal().array() += BigInt(t);
    xs.emplace_back(t);
    coef.emplace_back(determinant_bareiss(std::move(m)));
  }
  // Newton divided differences, then expansion into the monomial basis.
  for (std::size_t level = 1; level < coef.size(); ++level)
    for (std::size_t i = coef.size() - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
  RatPoly result;
  for (std::size_t i = coef.size(); i-- > 0;) {
    result = result * RatPoly::linear_root(xs[i]) + RatPoly::constant(coef[i]);
  }
  auto p = to_integer(result);
  if (!p) throw std::logic_error("charpoly_bareiss: interpolation produced non-integral coefficients");
  return *p;
}

Index rank(const RatMatrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    BigInt den = 1;
    for (Index j = 0; j < cols; ++j) den = boost::multiprecision::lcm(den, denominator_of(a(i, j)));
    for (Index j = 0; j < cols; ++j) m(i, j) = numerator_of(a(i, j)) * (den / denominator_of(a(i, j)));
  }
  Index r = 0;
  BigInt prev = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eval_poly_at_matrix: matrix must be square");
  const Index n = a.rows();
  RatMatrix acc = RatMatrix::Zero(n, n);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = (acc * a).eval();
    acc.diagonal().array() += c[i];
  }
  return acc;
}

}  // namespace walklab
