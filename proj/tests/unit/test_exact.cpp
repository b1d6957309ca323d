#include "support.hpp"

#include "chipdual/errors.hpp"

using namespace testing;

TEST_SUITE("exact") {

TEST_CASE("determinants of the worked matrices") {
  CHECK(determinant(M_run3()) == 8);
  CHECK(determinant(L_run3()) == 12);
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(cofactor_det(L_run3()) == 12);
  CHECK(cofactor_det(M_run3()) == 8);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("inverse of M matches the adjugate") {
  const RatMatrix inv = inverse(M_run3());
  const IntMatrix adj{{5, 4, 3}, {4, 8, 4}, {3, 4, 5}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(inv(i, j) == make_rational(adj(i, j), 8));
  CHECK(inv == adjugate_inverse(M_run3()));
  CHECK(to_rational(M_run3()) * inv == RatMatrix::identity(3));
  CHECK(inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));
}

TEST_CASE("inverse of the reduced K_n Laplacian") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const RatMatrix inv = inverse(reduced_kn(n));
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j)
        CHECK(inv(i, j) == make_rational(i == j ? 2 : 1, long(n)));
  }
}

TEST_CASE("singular matrices are rejected") {
  CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
  CHECK_THROWS_AS(solve(IntMatrix{{0, 0}, {0, 0}}, rv({"1", "1"})), SingularMatrix);
}

TEST_CASE("floor and fractional part") {
  auto s = floor_frac_split(rv({"4/3", "7/6", "0"}));
  CHECK(s.floor == iv({1, 1, 0}));
  CHECK(s.frac == rv({"1/3", "1/6", "0"}));
  s = floor_frac_split(rv({"0", "0", "0"}));
  CHECK(s.floor == iv({0, 0, 0}));
  CHECK(is_zero(s.frac));
  s = floor_frac_split(rv({"-1/2", "3", "-2"}));
  CHECK(s.floor == iv({-1, 3, -2}));
  CHECK(s.frac == rv({"1/2", "0", "0"}));
  CHECK(floor(parse_rational("-7/3")) == -3);
  CHECK(frac(parse_rational("-7/3")) == parse_rational("2/3"));
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/8") == make_rational(3, 4));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(iv({1, -2, 3})) == "(1, -2, 3)");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidInput);
}

TEST_CASE("property: det agrees with cofactor expansion and is multiplicative") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 5;
    const IntMatrix a = random_matrix(rng, n, n, -5, 5);
    const IntMatrix b = random_matrix(rng, n, n, -5, 5);
    const Integer da = determinant(a), db = determinant(b);
    CHECK(da == cofactor_det(a));
    CHECK(determinant(a * b) == da * db);
    if (da != 0) {
      const RatMatrix inv = inverse(a);
      CHECK(inv == adjugate_inverse(a));
      CHECK(to_rational(a) * inv == RatMatrix::identity(n));
      const IntVector x = random_vector(rng, n, -9, 9);
      const RatVector rhs = to_rational(a) * to_rational(x);
      CHECK(solve(a, rhs) == to_rational(x));
    }
  }
}

TEST_CASE("property: floor + frac reconstructs the vector") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  for (int t = 0; t < 500; ++t) {
    RatVector x;
    for (int i = 0; i < 4; ++i) x.push_back(make_rational(num(rng), den(rng)));
    const auto s = floor_frac_split(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(Rational(s.floor[i]) + s.frac[i] == x[i]);
      CHECK(s.frac[i] >= 0);
      CHECK(s.frac[i] < 1);
    }
  }
}

}  // TEST_SUITE
