#include "chipdual/exact.hpp"

#include <algorithm>
#include <sstream>

namespace chipdual {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols || rows == 0)
    throw InvalidInput(std::string(what) + ": matrix must be square and nonempty");
}

template <class V>
void require_same_size(const V& a, const V& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T, class U>
std::vector<T> apply(const Matrix<T>& a, const std::vector<U>& v) {
  if (a.cols() != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

RatMatrix gauss_jordan_inverse(RatMatrix work) {
  const std::size_t n = work.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(work(p, c)) == 0) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    work.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Rational pivot = work(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(work(r, c)) == 0) continue;
      const Rational f = work(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Rational(a(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) { return {v.begin(), v.end()}; }

bool is_integral(const Rational& x) { return x.get_den() == 1; }

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integral(x); });
}

bool is_integral(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_integral(a(i, j))) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw InvalidInput("non-integral entry " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_integral(a(i, j)))
        throw InvalidInput("non-integral entry " + to_string(a(i, j)));
      out(i, j) = a(i, j).get_num();
    }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntMatrix& a, const IntVector& v) { return apply(a, v); }
RatVector operator*(const RatMatrix& a, const RatVector& v) { return apply(a, v); }
RatVector operator*(const RatMatrix& a, const IntVector& v) { return apply(a, v); }

RatMatrix scaled(const RatMatrix& a, const Rational& k) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= k;
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_size(a, b);
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_size(a, b);
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_size(a, b);
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector operator+(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rational(a[i]) + b[i];
  return out;
}

IntVector scaled(const IntVector& v, const Integer& k) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

RatVector scaled(const RatVector& v, const Rational& k) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw InvalidInput("unit vector index out of range");
  IntVector e(n, Integer(0));
  e[i] = 1;
  return e;
}

bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) >= 0; });
}

bool is_nonnegative(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Integer determinant(const IntMatrix& a) {
  require_square(a.rows(), a.cols(), "determinant");
  const std::size_t n = a.rows();
  IntMatrix w = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(w(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(w(p, k)) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = w(k, k) * w(i, j) - w(i, k) * w(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w(i, j) = t;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

Rational determinant(const RatMatrix& a) {
  require_square(a.rows(), a.cols(), "determinant");
  const std::size_t n = a.rows();
  RatMatrix w = a;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(w(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      w.swap_rows(p, c);
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(w(r, c)) == 0) continue;
      const Rational f = w(r, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(r, j) -= f * w(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& a) {
  require_square(a.rows(), a.cols(), "inverse");
  RatMatrix inv = gauss_jordan_inverse(a);
  if (!(a * inv == RatMatrix::identity(a.rows())))
    throw VerificationFailure("inverse check A * A^-1 == I failed");
  return inv;
}

RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

RatVector solve(const IntMatrix& a, const RatVector& b) { return inverse(a) * b; }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

IntVector floor(const RatVector& x) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = floor(x[i]);
  return out;
}

RatVector frac(const RatVector& x) {
  RatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = frac(x[i]);
  return out;
}

FloorFracSplit floor_frac_split(const RatVector& x) { return {floor(x), frac(x)}; }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer abs(const Integer& a) { return sgn(a) < 0 ? Integer(-a) : a; }

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

namespace {
template <class V>
std::string tuple_string(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}
}  // namespace

std::string to_string(const IntVector& v) { return tuple_string(v); }
std::string to_string(const RatVector& v) { return tuple_string(v); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not a rational number: '" + text + "'");
  }
}

}  // namespace chipdual
