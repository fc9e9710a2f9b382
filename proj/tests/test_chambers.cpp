#include <doctest.h>

#include <random>
#include <set>

#include "arr4/chambers.hpp"
#include "arr4/invariants.hpp"

using namespace arr4;

namespace {
Vector v(long a, long b, long c, long d) { return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)}; }
Vector v2(long a, long b) { return {Scalar(a), Scalar(b)}; }

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

// Nonempty iff the sum of the oriented vertices inside the closed cone is
// strictly inside it; the closed cone of a chamber is spanned by vertices.
bool nonempty_by_vertices(const Arrangement& a, const Lattice& l, const SignVector& s) {
  Vector sum(4);
  for (const VertexFlat& vf : l.vertices()) {
    for (int orient : {1, -1}) {
      bool inside = true;
      for (std::size_t i = 0; i < a.size() && inside; ++i) {
        inside = dot(vf.point, a.normal(i)).sign() * orient * s[i] >= 0;
      }
      if (inside) {
        for (std::size_t k = 0; k < 4; ++k) sum[k] += orient > 0 ? vf.point[k] : -vf.point[k];
      }
    }
  }
  return sign_vector_at(a, sum) == s;
}

std::set<SignVector> brute_force_chambers(const Arrangement& a, const Lattice& l) {
  std::set<SignVector> out;
  const std::size_t n = a.size();
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    SignVector s(n, 1);
    for (std::size_t i = 1; i < n; ++i) s[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    if (nonempty_by_vertices(a, l, s)) out.insert(s);
  }
  return out;
}

std::optional<Arrangement> random_arrangement(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> coord(-2, 2);
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < n; ++i) normals.push_back(v(coord(rng), coord(rng), coord(rng), coord(rng)));
  try {
    return Arrangement(Field::rational, normals);
  } catch (const ArrangementError&) {
    return std::nullopt;
  }
}
}  // namespace

TEST_CASE("two-variable open half-plane test") {
  CHECK(strictly_feasible({v2(1, 0), v2(0, 1)}, 2));
  CHECK(strictly_feasible({v2(1, 0), v2(0, 1), v2(-1, 1)}, 2));
  CHECK(!strictly_feasible({v2(1, 0), v2(-1, 0)}, 2));
  CHECK(!strictly_feasible({v2(1, 0), v2(-1, 1), v2(-1, -1)}, 2));
  CHECK(!strictly_feasible({v2(1, 1), v2(-1, 1), v2(0, -1)}, 2));
  CHECK(strictly_feasible({v2(1, 1), v2(2, 2)}, 2));
  CHECK(!strictly_feasible({v2(0, 0)}, 2));
  CHECK(strictly_feasible({}, 2));
}

TEST_CASE("Fourier-Motzkin strict feasibility") {
  CHECK(strictly_feasible({v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1)}, 4));
  CHECK(!strictly_feasible({v(1, 0, 0, 0), v(0, 1, 0, 0), v(-1, -1, 0, 0)}, 4));
  CHECK(!strictly_feasible({v(1, 1, 1, 1), v(-1, 0, 0, 0), v(0, -1, 0, 0), v(0, 0, -1, 0), v(0, 0, 0, -1)}, 4));
  CHECK(strictly_feasible({v(1, 1, 1, 1), v(-1, 0, 0, 0), v(0, -1, 0, 0), v(0, 0, -1, 0)}, 4));
  CHECK(!strictly_feasible({v(1, -1, 0, 0), v(0, 1, -1, 0), v(0, 0, 1, -1), v(-1, 0, 0, 1)}, 4));
  CHECK(strictly_feasible({{Scalar::tau(), Scalar(-1), Scalar(0)}, {Scalar(-1), Scalar(1), Scalar(0)}}, 3));
  CHECK(!strictly_feasible({{Scalar::tau(), Scalar(-1), Scalar(0)}, {Scalar(-1), Scalar(1), Scalar(0)},
                            {Scalar(-1), Scalar(0), Scalar(0)}},
                           3));
}

TEST_CASE("walls of the boolean chambers") {
  Arrangement a = boolean();
  CHECK(walls(a, {1, 1, 1, 1}) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(walls(a, {1, -1, 1, -1}) == std::vector<std::size_t>{0, 1, 2, 3});
  Arrangement b(Field::rational, {v(1, 0, 0, 0), v(0, 1, 0, 0), v(0, 0, 1, 0), v(0, 0, 0, 1), v(1, 1, 0, 0)});
  CHECK(walls(b, {1, 1, 1, 1, 1}) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(walls(b, {1, 1, 1, 1, -1}), EmptyChamber);
  CHECK_THROWS_AS(walls(b, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("sign vectors") {
  CHECK(canonical_signs({-1, 1, -1}) == SignVector{1, -1, 1});
  CHECK(canonical_signs({1, 1, -1}) == SignVector{1, 1, -1});
  CHECK(to_string(SignVector{1, -1, 0}) == "+-0");
  Vector g = generic_point(braid());
  for (auto s : sign_vector_at(braid(), g)) CHECK(s != 0);
}

TEST_CASE("boolean chambers") {
  Arrangement a = boolean();
  Lattice l(a);
  ChamberList list = enumerate_chambers(a, l);
  CHECK(list.complete);
  CHECK(list.chambers.size() == 8);
  CHECK(to_string(list.chambers.front().signs) == "++++");
  CHECK(to_string(list.chambers.back().signs) == "+---");
  for (const Chamber& c : list.chambers) {
    CoxeterDiagram d = coxeter_diagram(l, c);
    CHECK(d.edges.empty());
    CHECK(d.type_name() == "A1xA1xA1xA1");
    CHECK(!d.connected());
  }
  CHECK(is_simplicial(a, l));
  CHECK(!is_irreducible_diagrams(a, l));
}

TEST_CASE("braid chambers have path diagrams") {
  Arrangement a = braid();
  Lattice l(a);
  ChamberList list = enumerate_chambers(a, l);
  CHECK(list.chambers.size() == 60);
  for (const Chamber& c : list.chambers) {
    CHECK(c.walls.size() == 4);
    CoxeterDiagram d = coxeter_diagram(l, c);
    CHECK(d.edges.size() == 3);
    CHECK(d.simply_laced());
    CHECK(d.type_name() == "A4");
    ChamberGeometry g = chamber_geometry(a, l, c.signs);
    CHECK(g.rays.size() == 4);
    CHECK(g.edge_count == 6);
    CHECK(g.facets == c.walls);
  }
  ChamberSummary s = summarize_chambers(a, l);
  CHECK(s.count == 60);
  CHECK(s.diagram_types.at("A4") == 60);
}

TEST_CASE("chamber limit marks partial results") {
  Arrangement a = braid();
  Lattice l(a);
  EnumerationOptions o;
  o.max_chambers = 10;
  ChamberList list = enumerate_chambers(a, l, o);
  CHECK(!list.complete);
  CHECK(list.chambers.size() == 10);
  o.max_chambers = 60;
  CHECK(enumerate_chambers(a, l, o).complete);
}

TEST_CASE("diagram names") {
  auto named = [](std::vector<std::size_t> nodes, std::vector<CoxeterEdge> edges) {
    return CoxeterDiagram{std::move(nodes), std::move(edges)}.type_name();
  };
  CHECK(named({0, 1, 2, 3}, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}}) == "B4");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}) == "F4");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}}) == "H4");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}}) == "D4");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 0, 3}}) == "~A3");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 3}, {1, 2, 3}}) == "A3xA1");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 4}, {2, 3, 6}}) == "B2xG2");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 3}, {1, 2, 5}}) == "H3xA1");
  CHECK(named({0, 1, 2, 3}, {{0, 1, 7}}) == "I2(7)xA1xA1");
}

TEST_CASE("chamber search agrees with brute force on random arrangements") {
  std::mt19937 rng(20240611);
  int tried = 0;
  while (tried < 25) {
    std::uniform_int_distribution<std::size_t> size(4, 8);
    auto a = random_arrangement(rng, size(rng));
    if (!a) continue;
    ++tried;
    Lattice l(*a);
    ChamberList list = enumerate_chambers(*a, l);
    std::set<SignVector> found;
    for (const Chamber& c : list.chambers) found.insert(c.signs);
    CHECK(found == brute_force_chambers(*a, l));
    CHECK(Integer(2 * static_cast<long>(found.size())) == char_poly_moebius(*a, l)(-1));
    for (const Chamber& c : list.chambers) CHECK(walls(*a, c.signs) == c.walls);
  }
}
