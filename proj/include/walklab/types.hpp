#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace walklab {

// Arbitrary-precision scalars. Expression templates are disabled so that the
// types behave as plain values inside Eigen expressions.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using AdjacencyMatrix = Eigen::MatrixXi;
using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

using Index = Eigen::Index;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

// Error hierarchy. Every failure that callers can act on has its own type so
// the CLI can name the violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotRegular : public Error {
 public:
  NotRegular() : Error("NotRegular: graph is not regular") {}
};

class NotConnected : public Error {
 public:
  NotConnected() : Error("NotConnected: graph is not connected") {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(const std::string& what) : Error("size limit exceeded: " + what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

class UnresolvedSpectrum : public Error {
 public:
  explicit UnresolvedSpectrum(const std::string& what) : Error("unresolved spectrum: " + what) {}
};

template <typename To, typename From>
Matrix<To> cast_matrix(const Eigen::MatrixBase<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

}  // namespace walklab
