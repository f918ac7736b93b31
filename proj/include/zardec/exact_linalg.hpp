#pragma once

/*
 * Exact linear algebra over Z and Q.
 *
 * Everything here is exact: GMP integers (mpz_class) and canonical GMP
 * rationals (mpq_class). Matrices are dense, row-major value types.
 *
 *   det_exact          Bareiss (fraction-free) elimination for integer
 *                      matrices, Gaussian elimination over Q otherwise.
 *   solve_exact        Gauss-Jordan over Q.
 *   signature          symmetric congruence reduction (LDL^T style) with a
 *                      2x2 pivot when the remaining diagonal is zero.
 *   smith_normal_form  unimodular row/column reduction with transforms.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "zardec/errors.hpp"

namespace zardec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q" or "p"; the result is canonical. Throws ParseError otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integral(const Rational& value);

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix from_rows(const std::vector<std::vector<T>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const T> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  bool is_symmetric() const;
  Matrix transpose() const;

  /// Rows and columns restricted to `indices` (in the given order).
  Matrix principal_submatrix(std::span<const std::size_t> indices) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x);

template <typename T>
T dot(std::span<const T> a, std::span<const T> b);

/// x^T M y.
template <typename T>
T bilinear(const Matrix<T>& m, std::span<const T> x, std::span<const T> y);

inline std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  return a * std::span<const Rational>(x);
}
inline std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x) {
  return a * std::span<const Integer>(x);
}
inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return dot<Rational>(std::span<const Rational>(a), std::span<const Rational>(b));
}
inline Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return dot<Integer>(std::span<const Integer>(a), std::span<const Integer>(b));
}

RationalMatrix to_rational(const IntegerMatrix& m);
bool is_integral(const RationalMatrix& m);
/// Throws DomainError naming the first non-integral entry.
IntegerMatrix to_integer(const RationalMatrix& m);

Integer det_exact(const IntegerMatrix& m);
Rational det_exact(const RationalMatrix& m);

std::vector<Rational> solve_exact(const RationalMatrix& m, std::span<const Rational> rhs);

struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dimension() const noexcept { return n_plus + n_minus + n_zero; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

SignatureTriple signature(const RationalMatrix& m);
SignatureTriple signature(const IntegerMatrix& m);

struct SnfResult {
  /// min(rows, cols) nonnegative entries; each divides the next nonzero one.
  std::vector<Integer> diagonal;
  IntegerMatrix left;   // unimodular, rows x rows
  IntegerMatrix right;  // unimodular, cols x cols

  /// left * m * right == diag(diagonal), and the divisibility chain holds.
  bool certifies(const IntegerMatrix& m) const;
};

SnfResult smith_normal_form(const IntegerMatrix& m);
/// Throws DomainError if an entry is not an integer.
SnfResult smith_normal_form(const RationalMatrix& m);

}  // namespace zardec
