// Randomized property suites: field axioms, surd floors against interval
// refinement, chamber search closure.

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "arr4/chambers.hpp"
#include "arr4/invariants.hpp"
#include "arr4/surd.hpp"

using namespace arr4;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed);
  return g;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Rational random_rational() {
  Rational r(uniform(-30, 30), uniform(1, 12));
  r.canonicalize();
  return r;
}

Scalar random_scalar() { return Scalar(random_rational(), uniform(0, 3) == 0 ? Rational(0) : random_rational()); }

double approx(const Scalar& x) { return x.a().get_d() + x.b().get_d() * (1 + std::sqrt(5.0)) / 2; }

// Brackets sqrt(radicand) by dyadic bisection; integer roots are hit exactly.
struct SqrtBracket {
  Rational lo = 0, hi = 1;
  bool exact = false;
  explicit SqrtBracket(const Integer& r) : radicand(r) {
    while (hi * hi <= radicand) hi *= 2;
    exact = sgn(radicand) == 0;
  }
  void refine() {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= radicand) {
      lo = mid;
      exact = lo * lo == radicand;
    } else {
      hi = mid;
    }
  }
  Integer radicand;
};

Integer floor_q(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer ceil_q(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer oracle_floor_plus(const Integer& base, const Integer& radicand, const Integer& den) {
  SqrtBracket b(radicand);
  for (;;) {
    if (b.exact) return floor_q(Rational(base + b.lo) / den);
    Integer fl = floor_q(Rational(base + b.lo) / den);
    if (fl == floor_q(Rational(base + b.hi) / den)) return fl;
    b.refine();
  }
}

Integer oracle_ceil_minus(const Integer& base, const Integer& radicand, const Integer& den) {
  SqrtBracket b(radicand);
  for (;;) {
    if (b.exact) return ceil_q(Rational(base - b.lo) / den);
    Integer cl = ceil_q(Rational(base - b.lo) / den);
    if (cl == ceil_q(Rational(base - b.hi) / den)) return cl;
    b.refine();
  }
}

std::optional<Arrangement> random_arrangement(std::size_t n) {
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(4);
    for (auto& c : v) c = Scalar(uniform(-2, 2));
    normals.push_back(v);
  }
  try {
    return Arrangement(Field::rational, normals);
  } catch (const ArrangementError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("field axioms and order compatibility") {
  const Scalar zero, one(1);
  for (int k = 0; k < 10000; ++k) {
    Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x + zero == x);
    REQUIRE(x * one == x);
    REQUIRE(x + (-x) == zero);
    if (!x.is_zero()) {
      REQUIRE(x * x.inverse() == one);
      REQUIRE((x * y) / x == y);
    }
    REQUIRE(x * x.conjugate() == Scalar(x.norm()));
    REQUIRE((x * y).conjugate() == x.conjugate() * y.conjugate());
    REQUIRE((x * x).sign() >= 0);
    // trichotomy and compatibility with + and positive *
    auto c = x <=> y;
    REQUIRE(((c < 0) + (c == 0) + (c > 0)) == 1);
    REQUIRE((c == 0) == (x == y));
    REQUIRE((x + z <=> y + z) == c);
    if (z.sign() > 0) REQUIRE((x * z <=> y * z) == c);
    if (z.sign() < 0) REQUIRE((y * z <=> x * z) == c);
    REQUIRE((x - y).sign() == (c < 0 ? -1 : (c > 0 ? 1 : 0)));
    double dx = approx(x), dy = approx(y);
    if (std::abs(dx - dy) > 1e-9) REQUIRE((dx < dy) == (c < 0));
  }
}

TEST_CASE("surd floors against interval refinement") {
  int cases = 0;
  while (cases < 1500) {
    const long n = uniform(1, 200);
    const Integer nn = n;
    const Integer top = (nn * nn + nn - 2) / 3;
    if (top < 0) continue;
    const Integer h = uniform(0, top.get_si());
    const Integer c = nn * nn + nn - 2 - 3 * h;
    const Integer base = (9 * nn + 18) * h + 20 + 12 * nn - 2 * nn * nn * nn - 3 * nn * nn;
    const Integer radicand = 4 * c * c * c;
    CAPTURE(n);
    CAPTURE(h.get_str());
    REQUIRE(floor_plus_sqrt(base, radicand, 27) == oracle_floor_plus(base, radicand, 27));
    REQUIRE(ceil_minus_sqrt(base, radicand, 27) == oracle_ceil_minus(base, radicand, 27));
    // and on arbitrary small inputs
    Integer b = uniform(-1000, 1000), r = uniform(0, 5000), d = uniform(1, 40);
    REQUIRE(floor_plus_sqrt(b, r, d) == oracle_floor_plus(b, r, d));
    REQUIRE(ceil_minus_sqrt(b, r, d) == oracle_ceil_minus(b, r, d));
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("real-rootedness relations agree with the discriminant") {
  for (long n = 1; n <= 40; ++n) {
    for (long h = 0; h <= (n * n + n) / 3 + 2; ++h) {
      for (long f3 = 1; f3 <= (n + 2) * (n + 2) * (n + 2) / 27 + 3; f3 += 1 + n / 8) {
        RealRootsReport r = real_roots_test(n, h, f3);
        REQUIRE_MESSAGE(r.routes_agree(), n << " " << h << " " << f3);
      }
    }
  }
}

TEST_CASE("sign vector canonicalization is idempotent") {
  for (int k = 0; k < 2000; ++k) {
    SignVector s(static_cast<std::size_t>(uniform(1, 20)));
    for (auto& x : s) x = uniform(0, 1) ? 1 : -1;
    SignVector c = canonical_signs(s);
    SignVector neg = s;
    for (auto& x : neg) x = static_cast<std::int8_t>(-x);
    REQUIRE(canonical_signs(c) == c);
    REQUIRE(canonical_signs(neg) == c);
    REQUIRE(c.front() == 1);
  }
}

TEST_CASE("chamber search is closed under wall flips") {
  int tried = 0;
  while (tried < 40) {
    auto a = random_arrangement(static_cast<std::size_t>(uniform(4, 10)));
    if (!a) continue;
    ++tried;
    Lattice l(*a);
    ChamberList list = enumerate_chambers(*a, l);
    std::set<SignVector> found;
    for (const Chamber& c : list.chambers) found.insert(c.signs);
    REQUIRE(found.size() == list.chambers.size());
    REQUIRE(Integer(2 * static_cast<long>(found.size())) == char_poly_moebius(*a, l)(-1));
    for (const Chamber& c : list.chambers) {
      REQUIRE(c.walls.size() >= 4);
      for (std::size_t h : c.walls) {
        SignVector s = c.signs;
        s[h] = static_cast<std::int8_t>(-s[h]);
        REQUIRE(found.count(canonical_signs(s)) == 1);
      }
    }
    EnumerationOptions one, many;
    one.threads = 1;
    many.threads = 4;
    auto x = enumerate_chambers(*a, l, one), y = enumerate_chambers(*a, l, many);
    REQUIRE(x.chambers.size() == y.chambers.size());
    for (std::size_t i = 0; i < x.chambers.size(); ++i) {
      REQUIRE(x.chambers[i].signs == y.chambers[i].signs);
      REQUIRE(x.chambers[i].walls == y.chambers[i].walls);
    }
  }
}
