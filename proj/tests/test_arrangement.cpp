#include <doctest.h>

#include "arr4/arrangement.hpp"
#include "arr4/lattice.hpp"

using namespace arr4;

namespace {
Vector v(long a, long b, long c, long d) { return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)}; }

Arrangement boolean() { return Arrangement(Field::rational, {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)}); }

Arrangement braid() {
  // x_i - x_j in K^5 restricted to the sum-zero hyperplane, written in K^4
  std::vector<Vector> n;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      Vector x(4);
      if (i < 4) x[i] += 1;
      if (j < 4) x[j] -= 1;
      if (j == 4) {
        for (auto& c : x) c += 1;
      }
      n.push_back(x);
    }
  }
  return new_arrangement(n);
}
}  // namespace

TEST_CASE("canonical normals") {
  CHECK(canonical_normal(v(0, -2, 4, 6), Field::rational) == v(0, 1, -2, -3));
  Vector half{Scalar(Rational(1, 2)), Scalar(Rational(-1, 3)), Scalar(0), Scalar(0)};
  CHECK(canonical_normal(half, Field::rational) == v(3, -2, 0, 0));
  Vector golden{Scalar(0), Scalar::tau(), Scalar(1), Scalar(0)};
  Vector c = canonical_normal(golden, Field::quadratic_tau);
  CHECK(c[1] == Scalar(1));
  CHECK(c[2] == Scalar::tau() - Scalar(1));
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(Arrangement(Field::rational, {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(-2, 0, 0, 0), v(0, 0, 0, 1)}),
                  DuplicateHyperplane);
  CHECK_THROWS_AS(Arrangement(Field::rational, {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0)}), NotEssential);
  CHECK_THROWS_AS(Arrangement(Field::rational, {v(1, 0, 0, 0), {Scalar::tau(), Scalar(1), Scalar(0), Scalar(0)},
                                                v(0, 0, 1, 0), v(0, 0, 0, 1)}),
                  MixedField);
  CHECK_THROWS_AS(Arrangement(Field::rational, {v(0, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)}),
                  ArrangementError);
  try {
    Arrangement(Field::rational, {v(1, 0, 0, 0), v(0, 1, 0, 0), v(2, 0, 0, 0), v(0, 0, 0, 1), v(0, 0, 1, 0)});
    FAIL("expected duplicate");
  } catch (const DuplicateHyperplane& e) {
    CHECK(e.first == 0);
    CHECK(e.second == 2);
  }
}

TEST_CASE("boolean lattice") {
  Arrangement a = boolean();
  Lattice l(a);
  CHECK(l.lines().size() == 6);
  CHECK(l.vertices().size() == 4);
  CHECK(l.h_vector().positional() == std::vector<long long>{6});
  CHECK(l.t_vector().positional() == std::vector<long long>{4});
  CHECK(l.multiplicity() == 3);
  CHECK(l.lines_through(0).size() == 3);
  CHECK(l.lines_in(0).size() == 3);
  auto r = restriction(a, l, 0);
  CHECK(r.size() == 3);
  auto p = parabolic(a, l.vertices()[0]);
  CHECK(p.size() == 3);
}

TEST_CASE("braid arrangement lattice") {
  Arrangement a = braid();
  CHECK(a.size() == 10);
  CHECK(h_vector(a).positional() == std::vector<long long>{15, 10});
  CHECK(t_vector(a).positional() == std::vector<long long>{0, 10, 0, 5});
  Lattice l(a);
  for (std::size_t h = 0; h < a.size(); ++h) {
    // every restriction is a braid arrangement of rank 3
    CHECK(l.lines_in(h).size() == 6);
  }
  auto rank3 = Rank3Lattice(restriction(a, l, 0));
  CHECK(rank3.chamber_count() == 12);
}

TEST_CASE("reducibility by span") {
  CHECK(is_reducible(boolean()).has_value());
  auto parts = direct_sum_components(boolean());
  CHECK(parts.size() == 4);
  CHECK(!is_reducible(braid()).has_value());
  Arrangement mixed(Field::rational, {v(1, -1, 0, 0), v(0, 1, -1, 0), v(1, 0, -1, 0), v(0, 0, 0, 1), v(1, 1, 1, 0)});
  auto p = is_reducible(mixed);
  REQUIRE(p.has_value());
  CHECK(p->first == std::vector<std::size_t>{0, 1, 2});
  CHECK(p->second == std::vector<std::size_t>{3, 4});
}
