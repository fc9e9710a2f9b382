#include "arr4/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "arr4/surd.hpp"

namespace arr4 {

namespace {

Integer big(long long x) { return Integer(std::to_string(x)); }

Rational frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binom2(const Integer& x) { return x * (x - 1) / 2; }

// Descending coefficients -> "t^3 - 14*t^2 + 65*t - 100".
std::string format_poly(const std::vector<Integer>& c) {
  std::ostringstream os;
  const std::size_t deg = c.size() - 1;
  bool first = true;
  for (std::size_t k = 0; k <= deg; ++k) {
    const Integer& coef = c[k];
    if (sgn(coef) == 0) continue;
    std::size_t power = deg - k;
    Integer mag = abs(coef);
    if (first) {
      if (sgn(coef) < 0) os << '-';
    } else {
      os << (sgn(coef) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && power > 0;
    if (!unit) os << mag.get_str();
    if (power > 0) {
      if (!unit) os << '*';
      os << 't';
      if (power > 1) os << '^' << power;
    }
  }
  if (first) os << '0';
  return os.str();
}

// Synthetic division by (t - root); returns false if root is not a root.
bool divide_out(std::vector<Integer>& c, const Integer& root) {
  std::vector<Integer> q(c.size() - 1);
  Integer acc = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    acc = acc * root + c[k];
    q[k] = acc;
  }
  if (acc * root + c.back() != 0) return false;
  c = std::move(q);
  return true;
}

std::vector<Integer> divisors(Integer x) {
  x = abs(x);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x) large.push_back(x / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct RootSplit {
  std::vector<Integer> roots;
  std::vector<Integer> remainder;  // descending
};

RootSplit split_integer_roots(std::vector<Integer> c) {
  RootSplit out;
  while (c.size() > 1 && sgn(c.back()) == 0) {
    c.pop_back();
    out.roots.push_back(0);
  }
  if (c.size() > 1) {
    for (const Integer& d : divisors(c.back())) {
      for (const Integer& cand : {d, Integer(-d)}) {
        while (c.size() > 1 && divide_out(c, cand)) out.roots.push_back(cand);
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = std::move(c);
  return out;
}

}  // namespace

Integer ArrangementData::h_weighted() const {
  Integer sum = 0;
  for (const auto& [i, count] : h.counts()) sum += big(i - 1) * big(count);
  return sum;
}

Integer ArrangementData::line_count() const {
  Integer sum = 0;
  for (const auto& [i, count] : h.counts()) sum += big(count);
  return sum;
}

Integer ArrangementData::h_weighted_truncated() const {
  const int m = static_cast<int>(multiplicity());
  Integer sum = 0;
  for (const auto& [i, count] : h.counts()) {
    if (i <= m - 1) sum += big(i - 1) * big(count);
  }
  return sum;
}

Integer ArrangementData::t_weighted() const {
  Integer sum = 0;
  for (const auto& [i, count] : t.counts()) sum += big(i) * big(count);
  return sum;
}

Integer CharPoly::operator()(const Integer& t) const {
  Integer acc = 0;
  for (const Integer& c : c_) acc = acc * t + c;
  return acc;
}

std::vector<Integer> CharPoly::integer_roots() const {
  return split_integer_roots({c_.begin(), c_.end()}).roots;
}

std::string CharPoly::factored() const {
  RootSplit split = split_integer_roots({c_.begin(), c_.end()});
  std::string out;
  for (std::size_t i = 0; i < split.roots.size();) {
    const Integer& r = split.roots[i];
    std::size_t k = i;
    while (k < split.roots.size() && split.roots[k] == r) ++k;
    std::string factor = sgn(r) == 0 ? "t" : "(t" + std::string(sgn(r) > 0 ? " - " : " + ") + Integer(abs(r)).get_str() + ")";
    out += factor;
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  if (split.remainder.size() > 1) out += "(" + format_poly(split.remainder) + ")";
  return out.empty() ? "1" : out;
}

std::string CharPoly::to_string() const { return format_poly({c_.begin(), c_.end()}); }

CharPoly char_poly_moebius(const Arrangement& a, const Lattice& lattice) {
  // mu(V) = 1 and mu(H) = -1; every lower flat X gets
  // mu(X) = -sum_{V <= Y < X} mu(Y), Y ranging over flats containing X.
  const Integer n = static_cast<long>(a.size());
  const auto& lines = lattice.lines();
  std::vector<Integer> mu_line(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    mu_line[k] = -(Integer(1) - static_cast<long>(lines[k].weight()));
  }
  Integer line_sum = 0;
  for (const Integer& m : mu_line) line_sum += m;

  Integer vertex_sum = 0;
  for (std::size_t v = 0; v < lattice.vertices().size(); ++v) {
    Integer above = Integer(1) - static_cast<long>(lattice.vertices()[v].weight());
    for (std::size_t k : lattice.lines_through(v)) above += mu_line[k];
    vertex_sum += -above;
  }
  Integer bottom = -(Integer(1) - n + line_sum + vertex_sum);
  return CharPoly({Integer(1), Integer(-n), line_sum, vertex_sum, bottom});
}

CharPoly char_poly_moebius(const Arrangement& a) { return char_poly_moebius(a, Lattice(a)); }

CharPoly char_poly_formula(long long n, const Integer& h, const Integer& f3) {
  ReducedCubic c = reduced_cubic(n, h, f3);
  // (t - 1)(t^3 + p t^2 + q t + r)
  return CharPoly({Integer(1), c.p - 1, c.q - c.p, c.r - c.q, Integer(-c.r)});
}

ReducedCubic reduced_cubic(long long n, const Integer& h, const Integer& f3) {
  Integer nn = big(n);
  return {Integer(1 - nn), Integer(h + 1 - nn), Integer(h + 1 - f3)};
}

Integer ReducedCubic::discriminant() const {
  return 18 * p * q * r - 4 * p * p * p * r + p * p * q * q - 4 * q * q * q - 27 * r * r;
}

FVector f_vector(const Arrangement& a, const Lattice& lattice) {
  FVector f{};
  f[0] = static_cast<long long>(lattice.vertices().size());
  long long incidences = 0;
  for (std::size_t v = 0; v < lattice.vertices().size(); ++v) {
    incidences += static_cast<long long>(lattice.lines_through(v).size());
  }
  f[1] = incidences;
  Integer faces = 0;
  for (std::size_t h = 0; h < a.size(); ++h) {
    faces += Rank3Lattice(restriction(a, lattice, h)).chamber_count();
  }
  f[2] = faces.get_si();
  Integer chi_minus_one = char_poly_moebius(a, lattice)(Integer(-1));
  f[3] = Integer(chi_minus_one / 2).get_si();
  return f;
}

FVector f_vector(const Arrangement& a) { return f_vector(a, Lattice(a)); }

ArrangementData arrangement_data(const Arrangement& a, const Lattice& lattice) {
  ArrangementData d;
  d.n = static_cast<long long>(a.size());
  d.h = lattice.h_vector();
  d.t = lattice.t_vector();
  d.f = f_vector(a, lattice);
  return d;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
    case Relation::gt: return ">";
  }
  return "?";
}

CheckResult CheckResult::compare(std::string name, Relation relation, Rational lhs, Rational rhs,
                                 std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.relation = relation;
  lhs.canonicalize();
  rhs.canonicalize();
  int s = cmp(lhs, rhs);
  switch (relation) {
    case Relation::le: c.holds = s <= 0; break;
    case Relation::ge: c.holds = s >= 0; break;
    case Relation::eq: c.holds = s == 0; break;
    case Relation::gt: c.holds = s > 0; break;
  }
  c.tight = s == 0;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.note = std::move(note);
  return c;
}

CheckResult CheckResult::skip(std::string name, std::string reason) {
  CheckResult c;
  c.name = std::move(name);
  c.skipped = true;
  c.note = std::move(reason);
  return c;
}

RealRootsReport real_roots_test(long long n, const Integer& h, const Integer& f3) {
  const Integer nn = big(n);
  RealRootsReport out;
  out.h_bound = CheckResult::compare("real_roots_h", Relation::le, Rational(h),
                                       Rational(floor_div((nn + 2) * (nn - 1), 3)));
  const Integer c = nn * nn + nn - 2 - 3 * h;
  const Integer base = (9 * nn + 18) * h + 20 + 12 * nn - 2 * nn * nn * nn - 3 * nn * nn;
  try {
    const Integer radicand = 4 * c * c * c;  // (2 sqrt(c^3))^2
    out.f3_upper = CheckResult::compare("real_roots_f3_upper", Relation::le, Rational(f3),
                                         Rational(floor_plus_sqrt(base, radicand, 27)),
                                         "rhs is the floor of the surd bound");
    out.f3_lower = CheckResult::compare("real_roots_f3_lower", Relation::ge, Rational(f3),
                                         Rational(ceil_minus_sqrt(base, radicand, 27)),
                                         "rhs is the ceiling of the surd bound");
  } catch (const NegativeRadicand&) {
    out.negative_radicand = true;
    for (CheckResult* r : {&out.f3_upper, &out.f3_lower}) {
      r->name = r == &out.f3_upper ? "real_roots_f3_upper" : "real_roots_f3_lower";
      r->relation = r == &out.f3_upper ? Relation::le : Relation::ge;
      r->lhs = f3;
      r->holds = false;
      r->note = "negative radicand n^2 + n - 2 - 3h = " + c.get_str();
    }
  }
  out.discriminant = reduced_cubic(n, h, f3).discriminant();
  return out;
}

CheckResult chamber_upper_bound(long long n, long long f3) {
  Integer s = big(n) + 2;
  return CheckResult::compare("chamber_bound", Relation::le, Rational(big(f3)), frac(s * s * s, 27));
}

CheckResult check_heavy_lines(long long n, const HVector& h) {
  Integer lhs = 0;
  for (const auto& [i, count] : h.counts()) {
    if (i >= 3) lhs += big(static_cast<long long>(i - 1) * (i - 2)) * big(count);
  }
  return CheckResult::compare("heavy_lines", Relation::ge, Rational(lhs),
                              frac((big(n) - 4) * (big(n) - 1), 3));
}

CheckResult check_dimension_chamber_bound(long long n, long long f3) {
  Rational base = 1 + frac(big(n - 1), 3);
  CheckResult c = CheckResult::compare("chamber_bound_by_dimension", Relation::le, Rational(big(f3)),
                                       Rational(base * base * base));
  Integer s = big(n) + 2;
  if (c.rhs != frac(s * s * s, 27)) c.note = "bound differs from (n+2)^3/27";
  return c;
}

std::vector<CheckResult> check_t_vector_relations(const ArrangementData& d) {
  std::vector<CheckResult> out;
  const Integer n = big(d.n);
  const Integer f3 = big(d.f[3]);
  const Integer ti = d.t_weighted();
  const Integer h_trunc = d.h_weighted_truncated();
  const Integer h_full = d.h_weighted();
  std::string note;
  if (h_trunc != h_full) {
    note = "truncated h = " + h_trunc.get_str() + " differs from full h = " + h_full.get_str();
  }

  out.push_back(CheckResult::compare("t_identity", Relation::eq, Rational(f3 + n), Rational(ti)));

  // (1 + h)(t + 1) + n(1 - t) - sum i t_i  against chi / (t - 1).
  ReducedCubic full_cubic = reduced_cubic(d.n, h_full, f3);
  Integer q3 = 1 + h_trunc - n;
  Integer r3 = 1 + h_trunc + n - ti;
  bool same = full_cubic.q == q3 && full_cubic.r == r3;
  out.push_back(CheckResult::compare("t_cubic", Relation::eq, Rational(same ? 1 : 0), Rational(1),
                                     "1 iff the t-vector cubic equals chi/(t-1)" +
                                         (note.empty() ? std::string() : "; " + note)));

  Integer s = n + 2;
  out.push_back(CheckResult::compare("t_upper", Relation::le, Rational(ti),
                                     Rational(frac(s * s * s, 27) + n)));

  const Integer c = n * n + n - 2 - 3 * h_trunc;
  const Integer base = (9 * n + 18) * h_trunc + 20 + 39 * n - 2 * n * n * n - 3 * n * n;
  if (sgn(c) < 0) {
    CheckResult r2 = CheckResult::compare("t_upper_surd", Relation::le, Rational(ti), Rational(0));
    r2.holds = false;
    r2.note = "negative radicand";
    CheckResult r3 = r2;
    r3.name = "t_lower_surd";
    r3.relation = Relation::ge;
    out.push_back(r2);
    out.push_back(r3);
  } else {
    Integer radicand = 4 * c * c * c;
    out.push_back(CheckResult::compare("t_upper_surd", Relation::le, Rational(ti),
                                       Rational(floor_plus_sqrt(base, radicand, 27)), note));
    out.push_back(CheckResult::compare("t_lower_surd", Relation::ge, Rational(ti),
                                       Rational(ceil_minus_sqrt(base, radicand, 27)), note));
  }
  return out;
}

std::vector<CheckResult> check_simply_laced_bounds(const ArrangementData& d, bool simplicial,
                                                   bool grunbaum_shephard) {
  std::vector<CheckResult> out;
  const char* names[] = {"simply_laced_h2", "simply_laced_h3", "simply_laced_f3_upper", "simply_laced_f3_lower", "simply_laced_size", "gs_simply_laced_size"};
  if (!d.simply_laced_by_h()) {
    for (const char* name : names) out.push_back(CheckResult::skip(name, "not simply laced"));
    return out;
  }
  const Integer n = big(d.n);
  const Integer h2 = big(d.h[2]);
  const Integer h3 = big(d.h[3]);
  const Integer f3 = big(d.f[3]);
  out.push_back(CheckResult::compare("simply_laced_h2", Relation::le, Rational(h2), Rational(2 * n - 2)));
  out.push_back(CheckResult::compare("simply_laced_h3", Relation::ge, Rational(h3),
                                     frac((n - 4) * (n - 1), 6)));
  Integer s = n + 2;
  out.push_back(CheckResult::compare("simply_laced_f3_upper", Relation::le, Rational(f3), frac(s * s * s, 27)));

  const Integer dd = 2 * n - 2 - h2;
  const Integer base = n * n * n + 6 * n + 20 + 3 * h2 * (n + 2);
  if (sgn(dd) < 0) {
    CheckResult r = CheckResult::compare("simply_laced_f3_lower", Relation::ge, Rational(f3), Rational(0));
    r.holds = false;
    r.note = "negative radicand 2n - 2 - h2";
    out.push_back(r);
  } else {
    out.push_back(CheckResult::compare("simply_laced_f3_lower", Relation::ge, Rational(f3),
                                       Rational(ceil_minus_sqrt(base, 4 * dd * dd * dd, 27)),
                                       "rhs is the ceiling of the surd bound"));
  }
  if (simplicial) {
    out.push_back(CheckResult::compare("simply_laced_size", Relation::le, Rational(n), Rational(119)));
  } else {
    out.push_back(CheckResult::skip("simply_laced_size", "not simplicial"));
  }
  if (grunbaum_shephard) {
    out.push_back(CheckResult::compare("gs_simply_laced_size", Relation::le, Rational(n), Rational(15)));
  } else {
    out.push_back(CheckResult::skip("gs_simply_laced_size", "not a Gruenbaum-Shephard arrangement"));
  }
  return out;
}

CheckResult check_weighted_vertices(const ArrangementData& d) {
  const long long m = static_cast<long long>(d.multiplicity());
  Rational rhs(big(d.n));
  for (long long i = 2; i <= m - 1; ++i) {
    long long hi = d.h[static_cast<int>(i)];
    if (hi == 0) continue;
    rhs += frac(big(i * (d.n - i)), big(3 * (m - i))) * big(hi);
  }
  return CheckResult::compare("weighted_vertices", Relation::ge, Rational(d.t_weighted()), rhs);
}

CheckResult check_grunbaum_shephard(const HVector& h) {
  Integer rest = 0;
  for (const auto& [i, count] : h.counts()) {
    if (i >= 3) rest += big(count);
  }
  return CheckResult::compare("grunbaum_shephard", Relation::gt, Rational(big(h[2])), Rational(rest));
}

std::vector<CheckResult> check_multiplicity_window(std::size_t m, bool simplicial, bool simply_laced,
                                                   bool irreducible) {
  std::vector<CheckResult> out;
  Rational mm(static_cast<long>(m));
  if (simplicial && simply_laced) {
    out.push_back(CheckResult::compare("multiplicity_upper", Relation::le, mm, Rational(7)));
  } else {
    out.push_back(CheckResult::skip("multiplicity_upper", "needs simplicial and simply laced"));
  }
  if (simplicial && irreducible) {
    out.push_back(CheckResult::compare("multiplicity_lower", Relation::ge, mm, Rational(6)));
  } else {
    out.push_back(CheckResult::skip("multiplicity_lower", "needs irreducible and simplicial"));
  }
  return out;
}

CheckResult check_h_pair_identity(long long n, const HVector& h) {
  Integer lhs = 0;
  for (const auto& [i, count] : h.counts()) lhs += binom2(big(i)) * big(count);
  return CheckResult::compare("h_pair_identity", Relation::eq, Rational(lhs), Rational(binom2(big(n))));
}

CheckResult check_euler(const FVector& f) {
  Integer chi = big(f[0]) - big(f[1]) + big(f[2]) - big(f[3]);
  return CheckResult::compare("euler", Relation::eq, Rational(chi), Rational(0));
}

CheckResult check_simplicial_count(const FVector& f) {
  return CheckResult::compare("simplicial_count", Relation::eq, Rational(big(f[2])),
                              Rational(2 * big(f[3])));
}

}  // namespace arr4
