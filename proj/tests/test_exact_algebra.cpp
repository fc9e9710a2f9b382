#include <doctest.h>

#include "arr4/matrix.hpp"
#include "arr4/scalar.hpp"
#include "arr4/surd.hpp"

using namespace arr4;

namespace {
Scalar r(long p, long q = 1) {
  Rational x(p, q);
  x.canonicalize();
  return Scalar(x);
}
Scalar qt(long a, long b) { return Scalar(Rational(a), Rational(b)); }
}  // namespace

TEST_CASE("tau satisfies its minimal polynomial") {
  Scalar t = Scalar::tau();
  CHECK(t * t == t + Scalar(1));
  CHECK(t.norm() == Rational(-1));
  CHECK(t.inverse() == t - Scalar(1));
  CHECK(t.conjugate() == Scalar(1) - t);
  CHECK(t * t.conjugate() == Scalar(t.norm()));
}

TEST_CASE("exact sign near tau") {
  Scalar t = Scalar::tau();
  CHECK((t - r(8, 5)).sign() > 0);
  CHECK((t - r(13, 8)).sign() < 0);
  CHECK((t - r(987, 610)).sign() > 0);   // Fibonacci convergents alternate
  CHECK((t - r(1597, 987)).sign() < 0);
  CHECK(qt(-1, 1).sign() > 0);           // tau - 1
  CHECK(qt(2, -1).sign() > 0);           // 2 - tau
  CHECK(qt(1, -1).sign() < 0);           // 1 - tau
  CHECK(Scalar().sign() == 0);
  CHECK(qt(3, -2).sign() < 0);           // 3 - 2 tau = 2 - sqrt 5
}

TEST_CASE("real order, not structural order") {
  CHECK(Scalar::tau() < r(2));
  CHECK(r(3, 2) < Scalar::tau());
  CHECK(qt(0, -1) < r(-1));
  CHECK((qt(1, 1) <=> qt(0, 1) * qt(0, 1)) == std::strong_ordering::equal);
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(Scalar().inverse(), std::domain_error); }

TEST_CASE("parsing and printing scalars") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+5/1") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK(parse_scalar("t") == Scalar::tau());
  CHECK(parse_scalar("-t") == -Scalar::tau());
  CHECK(parse_scalar("1+t") == qt(1, 1));
  CHECK(parse_scalar("2-3*t") == qt(2, -3));
  CHECK(parse_scalar("-1/2+3/4*t") == Scalar(Rational(-1, 2), Rational(3, 4)));
  CHECK(parse_scalar("5*t") == qt(0, 5));
  CHECK_THROWS_AS(parse_scalar("1+x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1 + t"), std::invalid_argument);
  for (Scalar x : {qt(1, 1), qt(-1, -1), qt(0, 1), qt(3, 0), Scalar(Rational(-1, 2), Rational(7, 3))}) {
    CHECK(parse_scalar(to_string(x)) == x);
  }
}

TEST_CASE("echelon, rank, kernel") {
  std::vector<Vector> rows = {{r(1), r(2), r(3), r(4)}, {r(2), r(4), r(6), r(8)}, {r(0), r(1), r(1), r(0)}};
  CHECK(rank(rows, 4) == 2);
  auto k = kernel_basis(rows, 4);
  REQUIRE(k.size() == 2);
  for (const Vector& v : k) {
    for (const Vector& row : rows) CHECK(dot(v, row).is_zero());
  }
  CHECK(free_columns(rows, 4) == std::vector<std::size_t>{2, 3});
  std::vector<Vector> golden = {{Scalar(1), Scalar::tau()}, {Scalar::tau(), qt(1, 1)}};
  CHECK(rank(golden, 2) == 1);  // second row is tau times the first
}

TEST_CASE("integer square roots and surd floors") {
  CHECK(isqrt_floor(Integer(0)) == 0);
  CHECK(isqrt_floor(Integer(15)) == 3);
  CHECK(isqrt_ceil(Integer(15)) == 4);
  CHECK(isqrt_ceil(Integer(16)) == 4);
  CHECK_THROWS_AS(isqrt_floor(Integer(-1)), NegativeRadicand);
  CHECK(floor_div(Integer(-7), Integer(2)) == -4);
  CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
  CHECK(floor_plus_sqrt(0, 2, 1) == 1);
  CHECK(ceil_minus_sqrt(0, 2, 1) == -1);
  CHECK(floor_plus_sqrt(-3, 9, 1) == 0);
  CHECK(ceil_minus_sqrt(3, 9, 1) == 0);
  // bounds for (n, h) = (15, 79): base 4862, radicand 4
  CHECK(floor_plus_sqrt(4862, 4, 27) == 180);
  CHECK(ceil_minus_sqrt(4862, 4, 27) == 180);
  CHECK(compare_with_sqrt(3, 9) == 0);
  CHECK(compare_with_sqrt(3, 10) < 0);
  CHECK(compare_with_sqrt(-1, 0) < 0);
  CHECK(compare_with_sqrt(4, 15) > 0);
}
