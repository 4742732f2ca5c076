/**
 * Tests for the exact scalars and the elimination kernel.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewder/fields.hpp"
#include "skewder/linalg.hpp"

using namespace skewder;

TEST_CASE("rational arithmetic is exact and canonical", "[fields]") {
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(-1) / Rational(-2) == Rational(1, 2));
  REQUIRE(ScalarTraits<Rational>::str(Rational(-3, 6)) == "-1/2");
  REQUIRE(ScalarTraits<Rational>::str(Rational(4, 2)) == "2");
  REQUIRE_THROWS_AS(field_inv(Rational(0)), DivisionByZeroError);
}

TEST_CASE("rational parsing", "[fields]") {
  REQUIRE(ScalarTraits<Rational>::parse("5/10") == Rational(1, 2));
  REQUIRE(ScalarTraits<Rational>::parse("-7") == Rational(-7));
  REQUIRE_THROWS_AS(ScalarTraits<Rational>::parse("1/0"), DivisionByZeroError);
  REQUIRE_THROWS_AS(ScalarTraits<Rational>::parse("x"), ParseError);
  REQUIRE_THROWS_AS(ScalarTraits<Rational>::parse("1/"), ParseError);
}

TEST_CASE("prime field arithmetic", "[fields]") {
  FpContext ctx(5);
  REQUIRE(field_inv(Fp(2)) == Fp(3));  // 2 * 3 = 6 = 1 mod 5
  REQUIRE(Fp(4) + Fp(3) == Fp(2));
  REQUIRE(Fp(-1) == Fp(4));
  REQUIRE(-Fp(2) == Fp(3));
  REQUIRE_THROWS_AS(field_inv(Fp(0)), DivisionByZeroError);
  REQUIRE(ScalarTraits<Fp>::parse("12") == Fp(2));
  REQUIRE(ScalarTraits<Fp>::parse("-1") == Fp(4));
  REQUIRE_THROWS_AS(ScalarTraits<Fp>::parse(""), ParseError);
}

TEST_CASE("field axioms hold on random samples", "[fields][property]") {
  FpContext ctx(7);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(0, 6);
  for (int i = 0; i < 200; ++i) {
    const Fp a(dist(rng)), b(dist(rng)), c(dist(rng));
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!is_zero(b)) REQUIRE(field_div(a, b) * b == a);
  }
}

TEST_CASE("field specs parse and print", "[fields]") {
  REQUIRE(FieldSpec::parse("Q") == FieldSpec::rationals());
  REQUIRE(FieldSpec::parse("F5") == FieldSpec::prime_field(5));
  REQUIRE(FieldSpec::parse("F5").str() == "F5");
  REQUIRE(FieldSpec::rationals().str() == "Q");
  REQUIRE_THROWS_AS(FieldSpec::parse("F4"), ParseError);
  REQUIRE_THROWS_AS(FieldSpec::parse("F1"), ParseError);
  REQUIRE_THROWS_AS(FieldSpec::parse("R"), ParseError);
  REQUIRE_THROWS_AS(FieldSpec::parse("F"), ParseError);
}

TEST_CASE("mixed-field use is rejected", "[fields]") {
  FpContext ctx(5);
  REQUIRE_THROWS_AS(ScalarTraits<Fp>::check_context(FieldSpec::prime_field(7)),
                    MixedFieldsError);
  REQUIRE_THROWS_AS(ScalarTraits<Rational>::check_context(FieldSpec::prime_field(5)),
                    MixedFieldsError);
  REQUIRE_NOTHROW(ScalarTraits<Fp>::check_context(FieldSpec::prime_field(5)));
}

TEST_CASE("solve_linear on an identity matrix", "[linalg]") {
  MatrixX<Rational> a = MatrixX<Rational>::Identity(3, 3);
  const auto sol = solve_linear<Rational>(a);
  REQUIRE(sol.rank == 3);
  REQUIRE(sol.kernel.cols() == 0);
}

TEST_CASE("solve_linear on a zero matrix", "[linalg]") {
  MatrixX<Rational> a = MatrixX<Rational>::Zero(2, 2);
  const auto sol = solve_linear<Rational>(a);
  REQUIRE(sol.rank == 0);
  REQUIRE(sol.kernel.cols() == 2);
}

// The degree-zero differential system of the two-crown poset with sigma
// = zeta: unknowns g(1), g(2), g(3), g(4), equations f(x,y) = g(y) - g(x)
// over the four strict pairs. Its determinant vanishes, so the rank is 3.
TEST_CASE("two-crown coboundary system has rank 3 for zeta", "[linalg]") {
  MatrixX<Rational> a(4, 4);
  a << Rational(-1), Rational(0), Rational(1), Rational(0),   // (1,3)
      Rational(-1), Rational(0), Rational(0), Rational(1),    // (1,4)
      Rational(0), Rational(-1), Rational(1), Rational(0),    // (2,3)
      Rational(0), Rational(-1), Rational(0), Rational(1);    // (2,4)
  REQUIRE(rank_of<Rational>(a) == 3);
  REQUIRE(kernel_basis<Rational>(a).cols() == 1);
}

TEST_CASE("inconsistent systems are reported", "[linalg]") {
  MatrixX<Rational> a(2, 1);
  a << Rational(1), Rational(1);
  VectorX<Rational> b(2);
  b << Rational(1), Rational(2);
  const auto sol = solve_linear<Rational>(a, b);
  REQUIRE_FALSE(sol.consistent);
  REQUIRE(sol.rank == 1);
  REQUIRE_FALSE(sol.particular.has_value());
}

TEST_CASE("particular solutions solve the system", "[linalg]") {
  FpContext ctx(7);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> dist(0, 6);
  for (int trial = 0; trial < 30; ++trial) {
    MatrixX<Fp> a(3, 4);
    for (Eigen::Index i = 0; i < a.size(); ++i) *(a.data() + i) = Fp(dist(rng));
    VectorX<Fp> x(4);
    for (Eigen::Index i = 0; i < 4; ++i) x(i) = Fp(dist(rng));
    const VectorX<Fp> b = a * x;
    const auto sol = solve_linear<Fp>(a, std::optional<VectorX<Fp>>(b));
    REQUIRE(sol.consistent);
    REQUIRE(is_zero_matrix<Fp>(a * *sol.particular - b));
    // Every kernel column really annihilates a.
    for (Eigen::Index j = 0; j < sol.kernel.cols(); ++j)
      REQUIRE(is_zero_matrix<Fp>(a * sol.kernel.col(j)));
  }
}

TEST_CASE("rank-nullity and permutation invariance", "[linalg][property]") {
  std::mt19937_64 rng(37);
  FpContext ctx(5);
  std::uniform_int_distribution<long long> dist(0, 4);
  std::uniform_int_distribution<int> shape(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = shape(rng), cols = shape(rng);
    MatrixX<Fp> a(rows, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i) *(a.data() + i) = Fp(dist(rng));
    const auto sol = solve_linear<Fp>(a);
    REQUIRE(sol.rank + sol.kernel.cols() == cols);

    MatrixX<Fp> shuffled = a;
    for (int r = rows - 1; r > 0; --r) {
      std::uniform_int_distribution<int> pick(0, r);
      shuffled.row(r).swap(shuffled.row(pick(rng)));
    }
    const auto sol2 = solve_linear<Fp>(shuffled);
    REQUIRE(sol2.rank == sol.rank);
    REQUIRE(sol2.kernel.cols() == sol.kernel.cols());
    // Same row space, so the canonical reduced kernel agrees exactly.
    REQUIRE(equal_matrices<Fp>(sol2.kernel, sol.kernel));
  }
}

TEST_CASE("row spaces track rank and membership", "[linalg]") {
  FpContext ctx(5);
  RowSpace<Fp> span(3);
  VectorX<Fp> v1(3), v2(3), v3(3);
  v1 << Fp(1), Fp(2), Fp(0);
  v2 << Fp(0), Fp(1), Fp(1);
  v3 << Fp(1), Fp(3), Fp(1);  // v1 + v2
  REQUIRE(span.insert(v1));
  REQUIRE(span.insert(v2));
  REQUIRE_FALSE(span.insert(v3));
  REQUIRE(span.rank() == 2);
  REQUIRE(span.contains(v3));
  VectorX<Fp> w(3);
  w << Fp(0), Fp(0), Fp(1);
  REQUIRE_FALSE(span.contains(w));
}
