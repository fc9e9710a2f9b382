#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "arr4/lattice.hpp"

namespace arr4 {

/// Cell counts (f0, f1, f2, f3) of the decomposition of P^3.
using FVector = std::array<long long, 4>;

/**
 * The combinatorial record every data-only check works from. Built either
 * from an arrangement's lattice or from a catalogue row.
 */
struct ArrangementData {
  long long n = 0;
  HVector h;
  TVector t;
  FVector f{};

  /// sum_{i>=2} (i-1) h_i
  Integer h_weighted() const;
  /// sum_{i>=2} h_i, the number of lines
  Integer line_count() const;
  /// sum_{i=2}^{m-1} (i-1) h_i
  Integer h_weighted_truncated() const;
  /// sum_{i>=3} i t_i
  Integer t_weighted() const;
  std::size_t multiplicity() const { return static_cast<std::size_t>(t.max_index()); }
  /// h_i = 0 for all i >= 4
  bool simply_laced_by_h() const { return h.max_index() <= 3; }
};

/// chi(A, t) of a rank-4 arrangement, integer coefficients in descending order.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(std::array<Integer, 5> coefficients) : c_(std::move(coefficients)) {}

  const std::array<Integer, 5>& coefficients() const { return c_; }
  Integer operator()(const Integer& t) const;
  /// Integer roots with multiplicity, found by divisor trial on the constant
  /// term and repeated synthetic division.
  std::vector<Integer> integer_roots() const;
  /// Human-readable product of linear factors and an irreducible remainder.
  std::string factored() const;
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::array<Integer, 5> c_;
};

/// chi by explicit Moebius recursion over the flats of L(A).
CharPoly char_poly_moebius(const Arrangement& a, const Lattice& lattice);
CharPoly char_poly_moebius(const Arrangement& a);

/// (t - 1)(t^3 + (1 - n) t^2 + (h + 1 - n) t + (h + 1 - f3)), expanded.
CharPoly char_poly_formula(long long n, const Integer& h, const Integer& f3);

/// chi / (t - 1) = t^3 + p t^2 + q t + r.
struct ReducedCubic {
  Integer p, q, r;
  Integer discriminant() const;
};
ReducedCubic reduced_cubic(long long n, const Integer& h, const Integer& f3);

/// f0 = #vertices, f1 = incidences vertex/line, f2 = chambers of the
/// restrictions, f3 = chi(-1) / 2.
FVector f_vector(const Arrangement& a, const Lattice& lattice);
FVector f_vector(const Arrangement& a);

ArrangementData arrangement_data(const Arrangement& a, const Lattice& lattice);

enum class Relation { le, ge, eq, gt };
std::string_view to_string(Relation r);

/**
 * Outcome of one named relation lhs (rel) rhs. Irrational bounds are stored
 * as the integer floor/ceiling that is equivalent for integer lhs; `note`
 * says so.
 */
struct CheckResult {
  std::string name;
  Relation relation = Relation::le;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool tight = false;
  bool skipped = false;
  std::string note;

  static CheckResult compare(std::string name, Relation relation, Rational lhs, Rational rhs,
                             std::string note = {});
  static CheckResult skip(std::string name, std::string reason);
  bool failed() const { return !skipped && !holds; }
};

struct RealRootsReport {
  CheckResult h_bound;
  CheckResult f3_upper;
  CheckResult f3_lower;
  Integer discriminant;
  bool negative_radicand = false;

  bool relations_hold() const {
    return h_bound.holds && f3_upper.holds && f3_lower.holds;
  }
  bool discriminant_nonnegative() const { return sgn(discriminant) >= 0; }
  /// The two routes must always agree; a disagreement is a bug.
  bool routes_agree() const { return relations_hold() == discriminant_nonnegative(); }
  bool real_rooted() const { return relations_hold(); }
};

/// The three real-rootedness bounds (h, upper f3, lower f3) and the cubic
/// discriminant, all exact.
RealRootsReport real_roots_test(long long n, const Integer& h, const Integer& f3);

/// f3 <= (n + 2)^3 / 27.
CheckResult chamber_upper_bound(long long n, long long f3);
/// sum_{i>=3} (i-1)(i-2) h_i >= (n - 4)(n - 1) / 3.
CheckResult check_heavy_lines(long long n, const HVector& h);
/// f3 <= (1 + (n - 1) / 3)^3, the dimension-indexed form of the chamber bound.
CheckResult check_dimension_chamber_bound(long long n, long long f3);
/// Simplicial t-vector identity, its cubic, and the rephrased bounds.
std::vector<CheckResult> check_t_vector_relations(const ArrangementData& d);
/// h2 <= 2n - 2, h3 bound, the f3 sandwich and the size bounds for simply
/// laced arrangements with real-rooted chi.
std::vector<CheckResult> check_simply_laced_bounds(const ArrangementData& d, bool simplicial,
                                                   bool grunbaum_shephard);
/// sum_{i=3}^m i t_i >= n + sum_{i=2}^{m-1} i(n-i) / (3(m-i)) h_i.
CheckResult check_weighted_vertices(const ArrangementData& d);
/// h2 > sum_{i>=3} h_i.
CheckResult check_grunbaum_shephard(const HVector& h);
/// m <= 7 for simplicial simply laced, m >= 6 for irreducible simplicial.
std::vector<CheckResult> check_multiplicity_window(std::size_t m, bool simplicial, bool simply_laced,
                                                   bool irreducible);

/// sum_{i>=2} C(i,2) h_i = C(n,2).
CheckResult check_h_pair_identity(long long n, const HVector& h);
/// f0 - f1 + f2 - f3 = 0.
CheckResult check_euler(const FVector& f);
/// f2 = 2 f3.
CheckResult check_simplicial_count(const FVector& f);

}  // namespace arr4
