#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zgh/linalg.hpp"

using namespace zgh;

namespace {
const Field Q = Field::rationals();

std::mt19937_64 rng(20240517);

Scalar random_scalar() {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return Scalar(mpq_class(num(rng), den(rng)), Q);
}

Mat random_mat(std::size_t r, std::size_t c) {
  Mat m(r, c, Q);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar();
  return m;
}

Mat random_invertible(std::size_t n) {
  for (;;) {
    Mat m = random_mat(n, n);
    if (solve_inverse(m)) return m;
  }
}
}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a = Scalar::parse("1/3", Q), b = Scalar::parse("1/6", Q);
  CHECK((a + b).str() == "1/2");
  // two routes, syntactic agreement
  Scalar lhs = (a + b) * Scalar::parse("4", Q);
  Scalar rhs = a * Scalar::parse("4", Q) + b * Scalar::parse("4", Q);
  CHECK(lhs == rhs);
  CHECK(lhs.str() == "2");
  CHECK(Scalar::parse("-2/-4", Q).str() == "1/2");
  CHECK(Scalar::parse("3/4", Q).inverse().str() == "4/3");
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("zebra", Q), Error);
}

TEST_CASE("GF(p) mode") {
  Field f7 = Field::gf(7);
  Scalar a = Scalar::parse("5", f7), b = Scalar::parse("4", f7);
  CHECK((a + b).str() == "2 mod 7");
  CHECK((a * b).str() == "6 mod 7");
  CHECK(a.inverse().str() == "3 mod 7");  // 5·3 = 15 = 1 mod 7
  CHECK(Scalar::parse("1/2", f7).str() == "4 mod 7");
  CHECK(Scalar::parse("5 mod 7", f7) == a);
  CHECK_THROWS_AS(Field::gf(6), Error);
  CHECK_THROWS_AS(Scalar::parse("5 mod 11", f7), Error);
  CHECK_THROWS_AS(a + Scalar::parse("5", Q), Error);
}

TEST_CASE("kron identity and 1x1 cases") {
  CHECK(kron(Mat::identity(2, Q), Mat::identity(3, Q)) == Mat::identity(6, Q));
  Mat a(1, 1, Q), b(1, 1, Q);
  a(0, 0) = Scalar(2, Q);
  b(0, 0) = Scalar(3, Q);
  CHECK(kron(a, b)(0, 0) == Scalar(6, Q));
}

TEST_CASE("kron mixed-product property against direct multiplication") {
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = random_mat(2, 2), b = random_mat(2, 2), c = random_mat(2, 2), d = random_mat(2, 2);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("kron associativity under the fixed flattening") {
  Mat a = random_mat(2, 3), b = random_mat(3, 2), c = random_mat(2, 2);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}

TEST_CASE("leg_permutation basics") {
  CHECK(leg_permutation({5}, {0}, Q) == Mat::identity(5, Q));
  Mat flip = leg_permutation({2, 2}, {1, 0}, Q);
  Mat expected(4, 4, Q);
  expected(0, 0) = Scalar(1, Q);
  expected(1, 2) = Scalar(1, Q);
  expected(2, 1) = Scalar(1, Q);
  expected(3, 3) = Scalar(1, Q);
  CHECK(flip == expected);
  // involution on mixed dims
  Mat t1 = leg_permutation({3, 5}, {1, 0}, Q);
  Mat t2 = leg_permutation({5, 3}, {1, 0}, Q);
  CHECK(t2 * t1 == Mat::identity(15, Q));
}

TEST_CASE("leg_permutation matches vec_kron reordering") {
  Vec u(3, Q), v(2, Q);
  for (std::size_t i = 0; i < 3; ++i) u[i] = random_scalar();
  for (std::size_t i = 0; i < 2; ++i) v[i] = random_scalar();
  Mat t = leg_permutation({3, 2}, {1, 0}, Q);
  CHECK(t * vec_kron(u, v) == vec_kron(v, u));
}

TEST_CASE("permute_legs_rows agrees with materialized permutation") {
  Mat m = random_mat(12, 5);
  std::vector<std::size_t> dims = {2, 3, 2}, perm = {2, 0, 1};
  CHECK(permute_legs_rows(dims, perm, m) == leg_permutation(dims, perm, Q) * m);
}

TEST_CASE("kron_apply_rows agrees with materialized kron") {
  Mat a = random_mat(2, 2), b = random_mat(4, 3);
  Mat m = random_mat(6, 4);
  Mat via_kron = kron(a, kron(Mat::identity(3, Q), Mat::identity(1, Q)));
  CHECK(kron_apply_rows({2, 3, 1}, {&a, nullptr, nullptr}, m) == via_kron * m);
  Mat m2 = random_mat(6, 2);
  CHECK(kron_apply_rows({2, 3}, {&a, &b}, m2) == kron(a, b) * m2);
}

TEST_CASE("solve_inverse on identity and swap") {
  CHECK(*solve_inverse(Mat::identity(4, Q)) == Mat::identity(4, Q));
  Mat swap(2, 2, Q);
  swap(0, 1) = Scalar(1, Q);
  swap(1, 0) = Scalar(1, Q);
  CHECK(*solve_inverse(swap) == swap);
}

TEST_CASE("solve_inverse multiply-back oracle on random 4x4") {
  for (int trial = 0; trial < 5; ++trial) {
    Mat a = random_invertible(4);
    Mat inv = *solve_inverse(a);
    CHECK(a * inv == Mat::identity(4, Q));
    CHECK(inv * a == Mat::identity(4, Q));
  }
}

TEST_CASE("solve_inverse reports NotInvertible as a value") {
  Mat a(2, 2, Q);
  a(0, 0) = Scalar(1, Q);
  a(0, 1) = Scalar(2, Q);
  a(1, 0) = Scalar(2, Q);
  a(1, 1) = Scalar(4, Q);
  CHECK(!solve_inverse(a).has_value());
}

TEST_CASE("solve_linear and nullspace") {
  Mat a = random_invertible(3);
  Vec b(3, Q);
  for (std::size_t i = 0; i < 3; ++i) b[i] = random_scalar();
  Vec x = *solve_linear(a, b);
  CHECK(a * x == b);

  Mat sing(3, 3, Q);
  sing(0, 0) = Scalar(1, Q);
  sing(0, 1) = Scalar(1, Q);  // rank 1: x + y = 0
  auto basis = nullspace(sing);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK((sing * v).is_zero());
}

TEST_CASE("contract_leg") {
  Vec v = vec_kron(Vec::basis(2, 1, Q), Vec::basis(3, 2, Q));
  Vec eps(2, Q);
  eps[0] = Scalar(3, Q);
  eps[1] = Scalar(5, Q);
  Vec out = contract_leg({2, 3}, 0, eps, v);
  CHECK(out[2] == Scalar(5, Q));
  CHECK(out[0].is_zero());
}

TEST_CASE("GF(p) linear algebra round trip") {
  Field f5 = Field::gf(5);
  Mat a(2, 2, f5);
  a(0, 0) = Scalar(2, f5);
  a(0, 1) = Scalar(1, f5);
  a(1, 0) = Scalar(3, f5);
  a(1, 1) = Scalar(3, f5);  // det = 3 mod 5
  auto inv = solve_inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Mat::identity(2, f5));
}
