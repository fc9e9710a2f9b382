#include <doctest.h>

#include "arr4/invariants.hpp"

using namespace arr4;

namespace {
Vector v(long a, long b, long c, long d) { return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)}; }

Arrangement boolean() { return Arrangement(Field::rational, {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)}); }

Arrangement braid() {
  std::vector<Vector> n;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Vector x(4);
      x[i] = 1;
      x[j] = -1;
      n.push_back(x);
    }
    Vector x = v(1, 1, 1, 1);
    x[i] = 2;
    n.push_back(x);
  }
  return Arrangement(Field::rational, n);
}

std::array<Integer, 5> coeffs(long a, long b, long c, long d, long e) { return {a, b, c, d, e}; }

ArrangementData row(long long n, std::vector<long long> h, std::vector<long long> t, FVector f) {
  return {n, HVector::from_positional(h), TVector::from_positional(t), f};
}

const CheckResult& find(const std::vector<CheckResult>& cs, const std::string& name) {
  for (const auto& c : cs) {
    if (c.name == name) return c;
  }
  throw std::logic_error(name);
}
}  // namespace

TEST_CASE("characteristic polynomial by formula") {
  CHECK(char_poly_formula(10, 35, 60).coefficients() == coeffs(1, -10, 35, -50, 24));
  CHECK(char_poly_formula(4, 6, 8).coefficients() == coeffs(1, -4, 6, -4, 1));
  CharPoly p = char_poly_formula(15, 79, 180);
  CHECK(p.integer_roots() == std::vector<Integer>{1, 4, 5, 5});
  ReducedCubic c = reduced_cubic(15, 79, 180);
  CHECK(c.p == -14);
  CHECK(c.q == 65);
  CHECK(c.r == -100);
  CHECK(c.discriminant() == 0);
}

TEST_CASE("characteristic polynomial by Moebius recursion") {
  CharPoly a4 = char_poly_moebius(braid());
  CHECK(a4.coefficients() == coeffs(1, -10, 35, -50, 24));
  CHECK(a4.integer_roots() == std::vector<Integer>{1, 2, 3, 4});
  CHECK(a4.factored() == "(t - 1)(t - 2)(t - 3)(t - 4)");
  CHECK(a4(1) == 0);
  CHECK(a4(-1) == 120);
  CharPoly b = char_poly_moebius(boolean());
  CHECK(b.factored() == "(t - 1)^4");
  CHECK(b.to_string() == "t^4 - 4*t^3 + 6*t^2 - 4*t + 1");
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(boolean()) == FVector{4, 12, 16, 8});
  CHECK(f_vector(braid()) == FVector{15, 75, 120, 60});
}

TEST_CASE("real roots test") {
  RealRootsReport t = real_roots_test(15, 79, 180);
  CHECK(t.h_bound.holds);
  CHECK(t.h_bound.tight);
  CHECK(t.h_bound.rhs == 79);
  CHECK(t.f3_upper.rhs == 180);
  CHECK(t.f3_lower.rhs == 180);
  CHECK(t.f3_upper.tight);
  CHECK(t.f3_lower.tight);
  CHECK(t.routes_agree());
  RealRootsReport a4 = real_roots_test(10, 35, 60);
  CHECK(a4.real_rooted());
  CHECK(a4.discriminant == 4);
  CHECK(real_roots_test(4, 6, 8).real_rooted());
  RealRootsReport bad = real_roots_test(4, 7, 8);
  CHECK(!bad.real_rooted());
  CHECK(bad.negative_radicand);
  CHECK(bad.routes_agree());
  RealRootsReport complex = real_roots_test(10, 35, 70);
  CHECK(!complex.real_rooted());
  CHECK(complex.discriminant < 0);
}

TEST_CASE("chamber bounds") {
  CHECK(chamber_upper_bound(10, 60).rhs == 64);
  CHECK(chamber_upper_bound(15, 180).rhs == Rational(4913, 27));
  CHECK(chamber_upper_bound(15, 180).holds);
  CHECK(chamber_upper_bound(4, 8).tight);
  CHECK(check_dimension_chamber_bound(60, 7200).rhs == Rational(238328, 27));
  CHECK(check_dimension_chamber_bound(60, 7200).holds);
  CHECK(check_dimension_chamber_bound(4, 8).tight);
  CHECK(check_dimension_chamber_bound(10, 60).note.empty());
}

TEST_CASE("heavy line bound") {
  CheckResult a4 = check_heavy_lines(10, HVector::from_positional(std::vector<long long>{15, 10}));
  CHECK(a4.lhs == 20);
  CHECK(a4.rhs == 18);
  CheckResult h4 = check_heavy_lines(60, HVector::from_positional(std::vector<long long>{450, 200, 0, 72}));
  CHECK(h4.lhs == 1264);
  CHECK(h4.rhs == Rational(3304, 3));
  CHECK(h4.holds);
  CheckResult b = check_heavy_lines(4, HVector::from_positional(std::vector<long long>{6}));
  CHECK(b.holds);
  CHECK(b.tight);
}

TEST_CASE("t-vector identity and its bounds") {
  auto a4 = check_t_vector_relations(row(10, {15, 10}, {0, 10, 0, 5}, {15, 75, 120, 60}));
  CHECK(find(a4, "t_identity").lhs == 70);
  for (const auto& c : a4) CHECK_MESSAGE(c.holds, c.name);
  auto a28 = check_t_vector_relations(row(28, {90, 76, 0, 6}, {0, 100, 0, 58, 15, 0, 0, 12, 0, 0, 0, 0, 1}, {186, 1146, 1920, 960}));
  CHECK(find(a28, "t_identity").rhs == 988);
  for (const auto& c : a28) CHECK_MESSAGE(c.holds, c.name);
  auto b = check_t_vector_relations(row(4, {6}, {4}, {4, 12, 16, 8}));
  CHECK(find(b, "t_identity").lhs == 12);
  // lines of weight >= m make the truncated h differ
  auto odd = check_t_vector_relations(row(5, {4, 2}, {5}, {5, 15, 20, 10}));
  CHECK(find(odd, "t_cubic").note.find("truncated") != std::string::npos);
}

TEST_CASE("simply laced bounds") {
  auto d4 = check_simply_laced_bounds(row(12, {18, 16}, {12, 0, 0, 12}, {24, 120, 192, 96}), true, true);
  for (const auto& c : d4) CHECK_MESSAGE(c.holds, c.name);
  auto a215 = check_simply_laced_bounds(row(15, {27, 26}, {0, 24, 0, 6, 9}, {39, 219, 360, 180}), true, true);
  CHECK(find(a215, "gs_simply_laced_size").tight);
  CHECK(find(a215, "simply_laced_f3_lower").tight);
  auto a4 = check_simply_laced_bounds(row(10, {15, 10}, {0, 10, 0, 5}, {15, 75, 120, 60}), true, true);
  CHECK(find(a4, "simply_laced_h2").rhs == 18);
  CHECK(find(a4, "simply_laced_h3").rhs == 9);
  for (const auto& c : a4) CHECK(c.holds);
  auto h4 = check_simply_laced_bounds(row(60, {450, 200, 0, 72}, {0, 600}, {1320, 8520, 14400, 7200}), true, true);
  for (const auto& c : h4) CHECK(c.skipped);
}

TEST_CASE("weighted t-vector lower bound") {
  CheckResult a4 = check_weighted_vertices(row(10, {15, 10}, {0, 10, 0, 5}, {15, 75, 120, 60}));
  CHECK(a4.rhs == Rational(160, 3));
  CHECK(a4.holds);
  CheckResult d4 = check_weighted_vertices(row(12, {18, 16}, {12, 0, 0, 12}, {24, 120, 192, 96}));
  CHECK(d4.lhs == 108);
  CHECK(d4.rhs == 90);
  CheckResult b = check_weighted_vertices(row(4, {6}, {4}, {4, 12, 16, 8}));
  CHECK(b.lhs == 12);
  CHECK(b.tight);
}

TEST_CASE("Gruenbaum-Shephard and multiplicity window") {
  CHECK(check_grunbaum_shephard(HVector::from_positional(std::vector<long long>{90, 76, 0, 6})).holds);
  CHECK(check_grunbaum_shephard(HVector::from_positional(std::vector<long long>{450, 200, 0, 72})).holds);
  CHECK(!check_grunbaum_shephard(HVector::from_positional(std::vector<long long>{5, 5})).holds);
  auto d4 = check_multiplicity_window(6, true, true, true);
  CHECK(d4[0].holds);
  CHECK(d4[1].holds);
  auto h4 = check_multiplicity_window(15, true, false, true);
  CHECK(h4[0].skipped);
  CHECK(h4[1].holds);
  CHECK(check_multiplicity_window(7, true, false, true)[1].holds);
}

TEST_CASE("counting identities") {
  CHECK(check_h_pair_identity(10, HVector::from_positional(std::vector<long long>{15, 10})).holds);
  CHECK(!check_h_pair_identity(10, HVector::from_positional(std::vector<long long>{15, 9})).holds);
  CHECK(check_euler({15, 75, 120, 60}).holds);
  CHECK(check_simplicial_count({15, 75, 120, 60}).holds);
  CHECK(!check_simplicial_count({1, 1, 3, 1}).holds);
}
