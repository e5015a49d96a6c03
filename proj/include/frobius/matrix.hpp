#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "frobius/error.hpp"

namespace frobius {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Upper bound on the number of entries of any matrix built by the library.
struct SizeGuard {
  std::uint64_t maxEntries = std::uint64_t{1} << 24;

  void check(std::uint64_t rows, std::uint64_t cols) const {
    if (rows != 0 && cols > maxEntries / rows) {
      throw Error(Errc::SizeGuard, std::to_string(rows) + "x" + std::to_string(cols) +
                                       " matrix exceeds the size guard of " + std::to_string(maxEntries) +
                                       " entries");
    }
  }
};

/// base^exp, refusing results above `limit`.
inline std::uint64_t checkedPow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (base != 0 && r > limit / base) {
      throw Error(Errc::SizeGuard, std::to_string(base) + "^" + std::to_string(exp) + " exceeds the limit of " +
                                       std::to_string(limit));
    }
    r *= base;
  }
  return r;
}

/// Dense row-major matrix with exact entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const SizeGuard& guard = {}) : rows_(rows), cols_(cols) {
    guard.check(rows, cols);
    data_.assign(rows * cols, T(0));
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
      throw Error(Errc::ShapeMismatch, "expected " + std::to_string(rows * cols) + " entries, got " +
                                           std::to_string(data_.size()));
    }
  }

  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
      : Matrix(rows, cols, std::vector<T>(entries)) {}

  static Matrix identity(std::size_t n, const SizeGuard& guard = {}) {
    Matrix m(n, n, guard);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

template <class T>
Matrix<T> matMul(const Matrix<T>& a, const Matrix<T>& b, const SizeGuard& guard = {}) {
  if (a.cols() != b.rows()) {
    throw Error(Errc::ShapeMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                         std::to_string(b.cols()));
  }
  Matrix<T> c(a.rows(), b.cols(), guard);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& y = b(k, j);
        if (y != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

template <class T>
Matrix<T> scalarMul(const T& s, Matrix<T> m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  }
  return m;
}

/// Kronecker product: x(i,j) * y(q,r) lands at (i*k + q, j*l + r) for Y of shape k x l.
template <class T>
Matrix<T> kron(const Matrix<T>& x, const Matrix<T>& y, const SizeGuard& guard = {}) {
  guard.check(static_cast<std::uint64_t>(x.rows()) * y.rows(), static_cast<std::uint64_t>(x.cols()) * y.cols());
  const std::size_t k = y.rows(), l = y.cols();
  Matrix<T> z(x.rows() * k, x.cols() * l, guard);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const T& xv = x(i, j);
      if (xv == 0) continue;
      for (std::size_t q = 0; q < k; ++q) {
        for (std::size_t r = 0; r < l; ++r) {
          if (y(q, r) != 0) z(i * k + q, j * l + r) = xv * y(q, r);
        }
      }
    }
  }
  return z;
}

/// S(n,m): the nm x mn matrix sending e_i (x) f_j to f_j (x) e_i.
template <class T>
Matrix<T> symMatrix(std::size_t n, std::size_t m, const SizeGuard& guard = {}) {
  guard.check(static_cast<std::uint64_t>(n) * m, static_cast<std::uint64_t>(n) * m);
  Matrix<T> s(n * m, n * m, guard);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) s(j * n + i, i * m + j) = T(1);
  }
  return s;
}

/// Reshapes a k^2 x 1 column into the k x k matrix whose (i,j) entry is v[i*k + j].
template <class T>
Matrix<T> squareOfVector(const Matrix<T>& v, std::size_t k) {
  if (v.cols() != 1 || v.rows() != k * k) {
    throw Error(Errc::ShapeMismatch, "expected a " + std::to_string(k * k) + "x1 column");
  }
  return Matrix<T>(k, k, v.entries());
}

/// Inverse of squareOfVector.
template <class T>
Matrix<T> vectorOfSquare(const Matrix<T>& x, std::size_t k) {
  if (x.rows() != k || x.cols() != k) {
    throw Error(Errc::ShapeMismatch, "expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
  }
  return Matrix<T>(k * k, 1, x.entries());
}

/// H: F^{p^2} -> M_{p x p}.
template <class T>
Matrix<T> hIso(const Matrix<T>& v, std::size_t p) { return squareOfVector(v, p); }
template <class T>
Matrix<T> hIsoInv(const Matrix<T>& x, std::size_t p) { return vectorOfSquare(x, p); }
/// H2: F^{p^4} -> M_{p^2 x p^2}.
template <class T>
Matrix<T> h2Iso(const Matrix<T>& v, std::size_t p) { return squareOfVector(v, p * p); }
template <class T>
Matrix<T> h2IsoInv(const Matrix<T>& x, std::size_t p) { return vectorOfSquare(x, p * p); }

/// Exact integer matrix viewed over the rationals.
inline RationalMatrix toRational(const ExactMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.entries().size());
  for (const BigInt& x : m.entries()) v.emplace_back(x);
  return RationalMatrix(m.rows(), m.cols(), std::move(v));
}

template <class T>
T trace(const Matrix<T>& x) {
  T t = 0;
  for (std::size_t i = 0; i < x.rows() && i < x.cols(); ++i) t += x(i, i);
  return t;
}

template <class T>
std::ostream& printMatrix(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

}  // namespace frobius
