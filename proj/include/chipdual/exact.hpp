#pragma once

// Exact integer / rational scalars, vectors and dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chipdual/errors.hpp"

namespace chipdual {

using Integer = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor from a raw num/den pair is followed by
// canonicalize(); make_rational() does that.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows()) throw InvalidInput("ragged column set");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// -- conversions ------------------------------------------------------------

RatMatrix to_rational(const IntMatrix& a);
RatVector to_rational(const IntVector& v);
bool is_integral(const Rational& x);
bool is_integral(const RatVector& v);
bool is_integral(const RatMatrix& a);
// Throws InvalidInput if any entry has a denominator other than 1.
IntVector to_integer(const RatVector& v);
IntMatrix to_integer(const RatMatrix& a);

// -- arithmetic -------------------------------------------------------------

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
RatVector operator*(const RatMatrix& a, const RatVector& v);
RatVector operator*(const RatMatrix& a, const IntVector& v);
RatMatrix scaled(const RatMatrix& a, const Rational& k);
IntMatrix transpose(const IntMatrix& a);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator+(const IntVector& a, const RatVector& b);
IntVector scaled(const IntVector& v, const Integer& k);
RatVector scaled(const RatVector& v, const Rational& k);

IntVector unit_vector(std::size_t n, std::size_t i);
bool is_nonnegative(const IntVector& v);
bool is_nonnegative(const RatVector& v);
bool is_zero(const RatVector& v);

// -- determinants and inverses ---------------------------------------------

// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& a);
Rational determinant(const RatMatrix& a);

// Gauss-Jordan over the rationals; the product with the input is checked
// against the identity before returning. Throws SingularMatrix.
RatMatrix inverse(const IntMatrix& a);
RatMatrix inverse(const RatMatrix& a);

// Exact solve of A x = b for nonsingular A.
RatVector solve(const IntMatrix& a, const RatVector& b);

// -- floor / fractional part -----------------------------------------------

Integer floor(const Rational& x);
Rational frac(const Rational& x);  // in [0, 1)
IntVector floor(const RatVector& x);
RatVector frac(const RatVector& x);

struct FloorFracSplit {
  IntVector floor;
  RatVector frac;
};
// x = floor + frac exactly, every frac entry in [0, 1); floors round
// toward negative infinity.
FloorFracSplit floor_frac_split(const RatVector& x);

// -- small number theory helpers -------------------------------------------

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

// -- text ---------------------------------------------------------------

// "a/b" in lowest terms, or "a" when b == 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
std::string to_string(const IntVector& v);  // "(a, b, c)"
std::string to_string(const RatVector& v);
Rational parse_rational(const std::string& text);

}  // namespace chipdual
