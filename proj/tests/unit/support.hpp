#pragma once

#include <initializer_list>
#include <random>

#include <doctest.h>

#include "chipdual/exact.hpp"

namespace testing {

using namespace chipdual;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector rv(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline IntMatrix L_run3() { return IntMatrix{{3, 1, -1}, {1, 2, -1}, {-1, -1, 3}}; }
inline IntMatrix M_run3() { return IntMatrix{{3, -1, -1}, {-1, 2, -1}, {-1, -1, 3}}; }

// Reduced Laplacian of K_n with the last vertex as sink.
inline IntMatrix reduced_kn(std::size_t n) {
  IntMatrix m(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) m(i, j) = i == j ? long(n - 1) : -1L;
  return m;
}

// Cofactor expansion along the first row.
inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    const Integer term = a(0, j) * cofactor_det(minor);
    total += j % 2 ? Integer(-term) : term;
  }
  return total;
}

// adj(A) / det(A)
inline RatMatrix adjugate_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const Integer det = cofactor_det(a);
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = a(r, c);
        ++rr;
      }
      Integer cof = cofactor_det(minor);
      if ((i + j) % 2) cof = -cof;
      inv(j, i) = make_rational(cof, det);
    }
  return inv;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = d(rng);
  return a;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace testing
