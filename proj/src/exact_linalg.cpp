#include "zardec/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace zardec {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) {
    throw DimensionError(std::string(what) + ": expected a square matrix, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? std::string("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not an exact rational: \"" + text + "\" (expected p or p/q)");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (const auto& v : r) entries_.push_back(v);
  }
  if constexpr (std::is_same_v<T, Rational>) {
    for (auto& v : entries_) v.canonicalize();
  }
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) throw DimensionError("ragged matrix: row " + std::to_string(i));
    for (std::size_t j = 0; j < out.cols_; ++j) {
      out(i, j) = rows[i][j];
      if constexpr (std::is_same_v<T, Rational>) out(i, j).canonicalize();
    }
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::diagonal(std::span<const T> values) {
  Matrix out(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
  return out;
}

template <typename T>
bool Matrix<T>::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::principal_submatrix(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (indices[a] >= rows_ || indices[b] >= cols_) throw DimensionError("submatrix index out of range");
      out(a, b) = (*this)(indices[a], indices[b]);
    }
  }
  return out;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: length mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

template <typename T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) throw DimensionError("dot product: length mismatch");
  T sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

template <typename T>
T bilinear(const Matrix<T>& m, std::span<const T> x, std::span<const T> y) {
  const std::vector<T> my = m * y;
  return dot<T>(x, my);
}

template class Matrix<Integer>;
template class Matrix<Rational>;
template IntegerMatrix operator*(const IntegerMatrix&, const IntegerMatrix&);
template RationalMatrix operator*(const RationalMatrix&, const RationalMatrix&);
template std::vector<Integer> operator*(const IntegerMatrix&, std::span<const Integer>);
template std::vector<Rational> operator*(const RationalMatrix&, std::span<const Rational>);
template Integer dot(std::span<const Integer>, std::span<const Integer>);
template Rational dot(std::span<const Rational>, std::span<const Rational>);
template Integer bilinear(const IntegerMatrix&, std::span<const Integer>, std::span<const Integer>);
template Rational bilinear(const RationalMatrix&, std::span<const Rational>, std::span<const Rational>);

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

bool is_integral(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) {
        throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(m(i, j)) +
                          " is not an integer");
      }
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

Integer det_exact(const IntegerMatrix& m) {
  require_square(m.rows(), m.cols(), "det_exact");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det_exact(const RationalMatrix& m) {
  require_square(m.rows(), m.cols(), "det_exact");
  if (is_integral(m)) return Rational(det_exact(to_integer(m)));
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<Rational> solve_exact(const RationalMatrix& m, std::span<const Rational> rhs) {
  require_square(m.rows(), m.cols(), "solve_exact");
  const std::size_t n = m.rows();
  if (rhs.size() != n) {
    throw DimensionError("solve_exact: right-hand side has length " + std::to_string(rhs.size()) + ", expected " +
                         std::to_string(n));
  }
  RationalMatrix a = m;
  std::vector<Rational> b(rhs.begin(), rhs.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("solve_exact: matrix is singular");
    if (p != k) {
      a.swap_rows(k, p);
      std::swap(b[k], b[p]);
    }
    const Rational pivot = a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) /= pivot;
    b[k] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  return b;
}

SignatureTriple signature(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw ShapeError("signature: matrix is not symmetric");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  SignatureTriple sig;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p < n) {
      a.swap_rows(k, p);
      a.swap_cols(k, p);
      const Rational d = a(k, k);
      (d > 0 ? sig.n_plus : sig.n_minus) += 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        const Rational f = a(i, k) / d;
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
      for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
      k += 1;
      continue;
    }

    // Zero diagonal on the trailing block: pivot on a hyperbolic 2x2 block.
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      sig.n_zero += n - k;
      break;
    }
    a.swap_rows(k, pi);
    a.swap_cols(k, pi);
    a.swap_rows(k + 1, pj);
    a.swap_cols(k + 1, pj);
    const Rational b = a(k, k + 1);
    sig.n_plus += 1;
    sig.n_minus += 1;
    // Schur complement of [[0,b],[b,0]]: C - (e_r0 e_s1 + e_r1 e_s0) / b.
    for (std::size_t r = k + 2; r < n; ++r)
      for (std::size_t s = k + 2; s < n; ++s) a(r, s) -= (a(r, k) * a(s, k + 1) + a(r, k + 1) * a(s, k)) / b;
    for (std::size_t r = k + 2; r < n; ++r) a(r, k) = a(k, r) = a(r, k + 1) = a(k + 1, r) = 0;
    k += 2;
  }
  return sig;
}

SignatureTriple signature(const IntegerMatrix& m) { return signature(to_rational(m)); }

bool SnfResult::certifies(const IntegerMatrix& m) const {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (diagonal.size() != std::min(r, c)) return false;
  if (left.rows() != r || left.cols() != r || right.rows() != c || right.cols() != c) return false;
  IntegerMatrix expected(r, c);
  for (std::size_t i = 0; i < diagonal.size(); ++i) expected(i, i) = diagonal[i];
  if (left * m * right != expected) return false;
  if (abs(det_exact(left)) != 1 || abs(det_exact(right)) != 1) return false;
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (diagonal[i] < 0) return false;
    if (i + 1 < diagonal.size()) {
      if (diagonal[i] == 0 && diagonal[i + 1] != 0) return false;
      if (diagonal[i + 1] != 0 && !mpz_divisible_p(diagonal[i + 1].get_mpz_t(), diagonal[i].get_mpz_t()))
        return false;
    }
  }
  return true;
}

SnfResult smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(r);
  IntegerMatrix v = IntegerMatrix::identity(c);

  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < c; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t j = 0; j < r; ++j) u(dst, j) += f * u(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < r; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t i = 0; i < c; ++i) v(i, dst) += f * v(i, src);
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (bi == r || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == r) break;
      a.swap_rows(t, bi);
      u.swap_rows(t, bi);
      a.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == r) break;
      add_row(t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }

  SnfResult out;
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

SnfResult smith_normal_form(const RationalMatrix& m) { return smith_normal_form(to_integer(m)); }

}  // namespace zardec
