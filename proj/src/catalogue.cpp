#include "arr4/catalogue.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "arr4/parallel.hpp"

namespace arr4 {

namespace {

struct Row {
  const char* label;
  std::vector<long long> h;
  std::vector<long long> t;
  FVector f;
  const char* comments;
  const char* alias;
};

CatalogueEntry make_entry(const Row& r) {
  CatalogueEntry e;
  e.label = r.label;
  std::string_view s(r.label);
  auto open = s.find('(');
  e.n = std::stoll(std::string(s.substr(open + 1, s.size() - open - 2)));
  e.h = HVector::from_positional(r.h);
  e.t = TVector::from_positional(r.t);
  e.f = r.f;
  e.comments = r.comments;
  e.alias = r.alias;
  e.has_vectors = !e.alias.empty() || e.label == "A^3_1(27)" || e.label == "A^3_1(28)";
  return e;
}

std::vector<CatalogueEntry> build_catalogue() {
  const std::vector<Row> rows = {
      {"A^3_1(10)", {15, 10}, {0, 10, 0, 5}, {15, 75, 120, 60}, "type A(A4)", "A4"},
      {"A^3_1(12)", {18, 16}, {12, 0, 0, 12}, {24, 120, 192, 96}, "type A(D4)", "D4"},
      {"A^3_1(13)", {21, 19}, {6, 10, 0, 9, 3}, {28, 148, 240, 120}, "subarrangement of A(B4)", ""},
      {"A^3_1(14)", {25, 20, 1}, {2, 16, 2, 8, 2, 2}, {32, 176, 288, 144}, "subarrangement of A(B4)", ""},
      {"A^3_1(15)", {30, 19, 3}, {0, 18, 6, 8, 0, 3, 1}, {36, 204, 336, 168}, "subarrangement of A(B4)", ""},
      {"A^3_2(15)", {27, 26}, {0, 24, 0, 6, 9}, {39, 219, 360, 180}, "Nr. 1", ""},
      {"A^3_1(16)", {36, 16, 6}, {0, 16, 12, 8, 0, 0, 4}, {40, 232, 384, 192}, "type A(B4)", "B4"},
      {"A^3_1(17)", {34, 28, 3}, {12, 20, 0, 14, 0, 6, 1}, {53, 293, 480, 240}, "Nr. 2", ""},
      {"A^3_1(18)", {39, 32, 3}, {0, 36, 3, 8, 6, 6, 1}, {60, 348, 576, 288}, "Nr. 3", ""},
      {"A^3_1(21)", {51, 41, 6}, {12, 38, 6, 21, 3, 6, 0, 4}, {90, 522, 864, 432},
       "missing in Gruenbaum-Shephard; Nr. 4", ""},
      {"A^3_1(22)", {57, 40, 9}, {12, 48, 6, 20, 0, 6, 4, 4}, {100, 580, 960, 480},
       "missing in Gruenbaum-Shephard; Nr. 5", ""},
      {"A^3_1(24)", {72, 32, 18}, {0, 96, 0, 0, 0, 0, 24}, {120, 696, 1152, 576}, "type A(F4); Nr. 6", "F4"},
      {"A^3_1(25)", {75, 55, 10}, {0, 60, 30, 25, 15, 0, 0, 10}, {140, 860, 1440, 720},
       "missing in Gruenbaum-Shephard; Nr. 7", ""},
      {"A^3_1(27)", {81, 70, 0, 6}, {30, 60, 0, 67, 0, 0, 0, 12, 0, 0, 0, 0, 1}, {170, 1010, 1680, 840},
       "subarrangement of A(H4)", ""},
      {"A^3_1(28)", {90, 76, 0, 6}, {0, 100, 0, 58, 15, 0, 0, 12, 0, 0, 0, 0, 1}, {186, 1146, 1920, 960},
       "subarrangement of A(H4)", ""},
      {"A^3_2(28)", {90, 64, 16}, {24, 84, 18, 40, 0, 18, 3, 0, 6, 0, 1}, {194, 1154, 1920, 960}, "Nr. 8", ""},
      {"A^3_1(30)", {99, 84, 9, 0, 2}, {0, 144, 0, 36, 24, 18, 0, 0, 0, 0, 6}, {228, 1380, 2304, 1152},
       "Nr. 9", ""},
      {"A^3_1(32)", {120, 76, 18, 4}, {24, 120, 24, 68, 0, 6, 10, 8, 0, 0, 6}, {266, 1610, 2688, 1344},
       "missing in Gruenbaum-Shephard; Nr. 10", ""},
      {"A^3_2(32)", {124, 64, 30}, {0, 144, 48, 40, 0, 0, 12, 16, 0, 0, 4}, {264, 1608, 2688, 1344},
       "missing in Gruenbaum-Shephard; Nr. 11", ""},
      {"A^3_1(60)", {450, 200, 0, 72}, {0, 600, 0, 660, 0, 0, 0, 0, 0, 0, 0, 0, 60}, {1320, 8520, 14400, 7200},
       "type A(H4)", "H4"},
  };
  std::vector<CatalogueEntry> out;
  for (const Row& r : rows) out.push_back(make_entry(r));
  return out;
}

Scalar q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}
Scalar qt(long a, long b) { return Scalar(Rational(a), Rational(b)); }

Matrix identity4() {
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i) g(i, i) = 1;
  return g;
}

Vector reflect(const Vector& x, const Vector& root, const Matrix& gram) {
  Vector g_root = gram * root;
  Scalar coeff = Scalar(2) * dot(x, g_root) / dot(root, g_root);
  Vector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - coeff * root[k];
  return out;
}

struct VectorLess {
  bool operator()(const Vector& x, const Vector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), structural_less);
  }
};

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> table = build_catalogue();
  return table;
}

const CatalogueEntry& catalogue_entry(std::string_view label) {
  for (const CatalogueEntry& e : catalogue()) {
    if (e.label == label || (!e.alias.empty() && e.alias == label)) return e;
  }
  throw UnknownLabel(label);
}

RootSystemSpec root_system(std::string_view name) {
  RootSystemSpec s;
  s.name = std::string(name);
  auto e = [](std::size_t i) {
    Vector v(4);
    v[i] = 1;
    return v;
  };
  auto diff = [](std::size_t i, std::size_t j, long sign) {
    Vector v(4);
    v[i] = 1;
    v[j] = Scalar(sign);
    return v;
  };
  if (name == "A4" || name == "H4") {
    // root coordinates with the Coxeter form as Gram matrix
    s.simple_roots = {e(0), e(1), e(2), e(3)};
    s.gram = Matrix(4, 4);
    for (std::size_t i = 0; i < 4; ++i) s.gram(i, i) = 2;
    for (std::size_t i = 0; i + 1 < 4; ++i) s.gram(i, i + 1) = s.gram(i + 1, i) = -1;
    if (name == "H4") {
      s.field = Field::quadratic_tau;
      s.gram(0, 1) = s.gram(1, 0) = -Scalar::tau();
    }
  } else if (name == "B4") {
    s.simple_roots = {diff(0, 1, -1), diff(1, 2, -1), diff(2, 3, -1), e(3)};
    s.gram = identity4();
  } else if (name == "D4") {
    s.simple_roots = {diff(0, 1, -1), diff(1, 2, -1), diff(2, 3, -1), diff(2, 3, 1)};
    s.gram = identity4();
  } else if (name == "F4") {
    s.simple_roots = {diff(1, 2, -1), diff(2, 3, -1), e(3), Vector{q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)}};
    s.gram = identity4();
  } else {
    throw UnknownLabel(name);
  }
  return s;
}

Arrangement reflection_closure(const RootSystemSpec& spec, std::size_t cap) {
  if (rank(spec.simple_roots, 4) != 4) throw std::invalid_argument("simple roots are not independent");
  std::set<Vector, VectorLess> seen;
  std::vector<Vector> roots;
  std::deque<Vector> queue;
  auto offer = [&](const Vector& r) {
    if (seen.insert(canonical_normal(r, Field::quadratic_tau)).second) {
      if (seen.size() > cap) throw ClosureOverflow(cap);
      roots.push_back(r);
      queue.push_back(r);
    }
  };
  for (const Vector& r : spec.simple_roots) offer(r);
  while (!queue.empty()) {
    Vector r = queue.front();
    queue.pop_front();
    for (const Vector& s : spec.simple_roots) offer(reflect(r, s, spec.gram));
  }
  std::vector<Vector> normals;
  for (const Vector& r : roots) normals.push_back(spec.gram * r);
  return Arrangement(spec.field, std::move(normals));
}

std::vector<Vector> appendix_normals() {
  const Scalar t = Scalar::tau();
  const Scalar t1 = qt(1, 1);  // 1 + tau
  return {
      {q(1), q(0), q(0), q(0)},     {q(0), q(1), q(0), q(0)},      {q(0), q(1), q(1), q(0)},
      {q(0), q(0), q(1), q(0)},     {q(0), q(1), q(1), q(1)},      {q(0), q(0), q(1), q(1)},
      {q(0), q(0), q(0), q(1)},     {q(1), q(1), q(0), q(0)},      {q(1), q(1), q(1), q(1)},
      {q(1), t, q(0), q(0)},        {t, q(1), q(0), q(0)},         {q(1), t, t, t},
      {t, q(1), q(1), q(0)},        {t, t1, q(1), q(0)},           {t, q(1), q(1), q(1)},
      {t, t1, t, t},                {t1, t1, q(1), q(0)},          {t, t1, q(1), q(1)},
      {t1, t1, t, t},               {t, t1, t1, t},                {t1, t1, q(1), q(1)},
      {t1, qt(0, 2), t, t},         {t1, qt(0, 2), t, q(1)},       {t, t, t, q(1)},
      {t, t1, t, q(1)},             {t1, t1, t, q(1)},             {t, q(2), qt(3, -1), q(1)},
      {qt(2, 3), qt(2, 4), qt(1, 3), qt(1, 1)},
  };
}

std::vector<std::string> builtin_labels() {
  std::vector<std::string> out;
  for (const CatalogueEntry& e : catalogue()) {
    if (e.has_vectors) out.push_back(e.label);
  }
  return out;
}

Arrangement builtin(std::string_view label) {
  const CatalogueEntry& e = catalogue_entry(label);
  if (!e.has_vectors) throw NoVectorsAvailable(e.label);
  if (!e.alias.empty()) return reflection_closure(root_system(e.alias));
  std::vector<Vector> normals = appendix_normals();
  if (e.label == "A^3_1(27)") normals.pop_back();
  return Arrangement(Field::quadratic_tau, std::move(normals));
}

std::size_t RowReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.skipped && c.holds; }));
}
std::size_t RowReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); }));
}
std::size_t RowReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.skipped; }));
}

std::vector<CheckResult> data_checks(const ArrangementData& d, bool simplicial, bool irreducible) {
  std::vector<CheckResult> out;
  const Integer h = d.h_weighted();
  const Integer f3(std::to_string(d.f[3]));

  out.push_back(check_h_pair_identity(d.n, d.h));
  out.push_back(check_euler(d.f));
  out.push_back(check_simplicial_count(d.f));
  out.push_back(CheckResult::compare("vertex_weight", Relation::le, Rational(d.t.max_index()),
                                     Rational(static_cast<long>(d.n - 1))));

  RealRootsReport rr = real_roots_test(d.n, h, f3);
  out.push_back(rr.h_bound);
  out.push_back(rr.f3_upper);
  out.push_back(rr.f3_lower);
  out.push_back(CheckResult::compare("discriminant", Relation::ge, Rational(rr.discriminant), Rational(0)));
  out.push_back(CheckResult::compare("discriminant_agrees", Relation::eq,
                                     Rational(rr.discriminant_nonnegative() ? 1 : 0),
                                     Rational(rr.relations_hold() ? 1 : 0),
                                     "1 iff the verdict is real-rooted"));

  CheckResult gs = check_grunbaum_shephard(d.h);
  out.push_back(gs);
  out.push_back(chamber_upper_bound(d.n, d.f[3]));
  out.push_back(check_heavy_lines(d.n, d.h));
  out.push_back(check_dimension_chamber_bound(d.n, d.f[3]));
  if (simplicial) {
    for (CheckResult& c : check_t_vector_relations(d)) out.push_back(std::move(c));
    out.push_back(check_weighted_vertices(d));
  } else {
    for (const char* name : {"t_identity", "t_cubic", "t_upper", "t_upper_surd", "t_lower_surd",
                             "weighted_vertices"}) {
      out.push_back(CheckResult::skip(name, "not simplicial"));
    }
  }
  for (CheckResult& c : check_multiplicity_window(d.multiplicity(), simplicial, d.simply_laced_by_h(), irreducible)) {
    out.push_back(std::move(c));
  }
  for (CheckResult& c : check_simply_laced_bounds(d, simplicial, gs.holds)) out.push_back(std::move(c));
  return out;
}

namespace {

CheckResult match(std::string name, bool equal, std::string computed, std::string expected) {
  return CheckResult::compare(std::move(name), Relation::eq, Rational(equal ? 1 : 0), Rational(1),
                              "computed " + computed + ", table " + expected);
}

std::string positional_string(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string f_string(const FVector& f) { return positional_string({f.begin(), f.end()}); }

const char* kGeometryChecks[] = {"geometry_n",       "geometry_h",        "geometry_t",
                                 "geometry_f",       "chi_routes",        "h_restriction_identity",
                                 "irreducible_span", "chamber_count",     "chamber_simplicial",
                                 "chamber_irreducible", "simply_laced_routes"};

void geometry_checks(const CatalogueEntry& e, const VerifyOptions& options, RowReport& report) {
  Arrangement a = builtin(e.label);
  Lattice lattice(a);
  ArrangementData d = arrangement_data(a, lattice);
  auto& out = report.checks;
  out.push_back(CheckResult::compare("geometry_n", Relation::eq, Rational(static_cast<long>(d.n)), Rational(static_cast<long>(e.n))));
  out.push_back(match("geometry_h", d.h == e.h, positional_string(d.h.positional()), positional_string(e.h.positional())));
  out.push_back(match("geometry_t", d.t == e.t, positional_string(d.t.positional()), positional_string(e.t.positional())));
  out.push_back(match("geometry_f", d.f == e.f, f_string(d.f), f_string(e.f)));

  CharPoly moebius = char_poly_moebius(a, lattice);
  CharPoly formula = char_poly_formula(d.n, d.h_weighted(), Integer(std::to_string(d.f[3])));
  out.push_back(match("chi_routes", moebius == formula, moebius.to_string(), formula.to_string()));

  Integer restricted = 0;
  for (std::size_t h = 0; h < a.size(); ++h) restricted += static_cast<unsigned long>(lattice.lines_in(h).size());
  out.push_back(CheckResult::compare("h_restriction_identity", Relation::eq, Rational(restricted - d.line_count()),
                                     Rational(d.h_weighted()), "sum over H of |A^H| minus the line count"));

  bool irreducible_span = !is_reducible(a).has_value();
  out.push_back(CheckResult::compare("irreducible_span", Relation::eq, Rational(irreducible_span ? 1 : 0),
                                     Rational(1)));

  if (d.n <= options.chamber_threshold) {
    EnumerationOptions eo;
    eo.threads = options.threads;
    ChamberSummary s = summarize_chambers(a, lattice, eo);
    out.push_back(CheckResult::compare("chamber_count", Relation::eq, Rational(static_cast<unsigned long>(s.count)),
                                       Rational(static_cast<long>(e.f[3]))));
    out.push_back(CheckResult::compare("chamber_simplicial", Relation::eq, Rational(s.simplicial ? 1 : 0),
                                       Rational(1)));
    out.push_back(CheckResult::compare("chamber_irreducible", Relation::eq, Rational(s.irreducible ? 1 : 0),
                                       Rational(irreducible_span ? 1 : 0), "diagram route against span route"));
    out.push_back(CheckResult::compare("simply_laced_routes", Relation::eq, Rational(s.simply_laced ? 1 : 0),
                                       Rational(d.simply_laced_by_h() ? 1 : 0), "diagram route against h-vector"));
    report.chambers = std::move(s);
  } else {
    for (const char* name : {"chamber_count", "chamber_simplicial", "chamber_irreducible", "simply_laced_routes"}) {
      out.push_back(CheckResult::skip(name, "chamber enumeration above threshold; simpliciality from f2 = 2 f3"));
    }
  }
}

}  // namespace

RowReport verify_row(std::string_view label, const VerifyOptions& options) {
  const CatalogueEntry& e = catalogue_entry(label);
  RowReport report;
  report.label = e.label;
  report.has_vectors = e.has_vectors;
  report.checks = data_checks(e.data(), true, true);
  if (e.has_vectors) {
    geometry_checks(e, options, report);
  } else {
    report.checks.push_back(CheckResult::skip("h_restriction_identity", "restrictions unknown without vectors"));
    for (const char* name : kGeometryChecks) {
      if (std::string_view(name) == "h_restriction_identity") continue;
      report.checks.push_back(CheckResult::skip(name, "no vectors"));
    }
  }
  return report;
}

std::vector<RowReport> verify_all(const VerifyOptions& options) {
  std::vector<RowReport> out;
  for (const CatalogueEntry& e : catalogue()) out.push_back(verify_row(e.label, options));
  return out;
}

}  // namespace arr4
