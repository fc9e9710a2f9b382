#include "arr4/report.hpp"

#include <limits>
#include <sstream>

namespace arr4 {

Json exact(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Json exact(const Rational& x) {
  if (x.get_den() == 1) return exact(Integer(x.get_num()));
  return x.get_str();
}

Json to_json(const CheckResult& c) {
  Json out;
  out["name"] = c.name;
  if (c.skipped) {
    out["status"] = "skip";
  } else {
    out["status"] = c.holds ? "pass" : "fail";
    out["relation"] = std::string(to_string(c.relation));
    out["lhs"] = exact(c.lhs);
    out["rhs"] = exact(c.rhs);
    out["holds"] = c.holds;
    out["tight"] = c.tight;
  }
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

namespace {

Json relation_json(const CheckResult& c) {
  Json out;
  out["holds"] = c.holds;
  out["lhs"] = exact(c.lhs);
  out["rhs"] = exact(c.rhs);
  out["tight"] = c.tight;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json f_json(const FVector& f) {
  Json out = Json::array();
  for (long long x : f) out.push_back(x);
  return out;
}

Json summary_json(const ChamberSummary& s) {
  Json out;
  out["count"] = s.count;
  out["complete"] = s.complete;
  out["simplicial"] = s.simplicial;
  out["simply_laced"] = s.simply_laced;
  out["irreducible"] = s.irreducible;
  Json types = Json::object();
  for (const auto& [name, count] : s.diagram_types) types[name] = count;
  out["diagram_types"] = types;
  return out;
}

const CheckResult& named(const std::vector<CheckResult>& checks, std::string_view name) {
  for (const CheckResult& c : checks) {
    if (c.name == name) return c;
  }
  throw std::logic_error("missing check " + std::string(name));
}

}  // namespace

Json analyze(const Arrangement& a, const AnalyzeOptions& options) {
  Lattice lattice(a);
  ArrangementData d = arrangement_data(a, lattice);
  CharPoly chi = char_poly_moebius(a, lattice);
  const Integer h = d.h_weighted();
  const Integer f3(std::to_string(d.f[3]));
  CharPoly formula = char_poly_formula(d.n, h, f3);
  if (!(chi == formula)) throw std::logic_error("characteristic polynomial routes disagree");

  std::optional<ChamberSummary> summary;
  bool run = !options.skip_chambers &&
             (options.force_chambers || static_cast<long long>(a.size()) <= options.chamber_threshold);
  if (run) {
    EnumerationOptions eo;
    eo.max_chambers = options.max_chambers;
    eo.threads = options.threads;
    summary = summarize_chambers(a, lattice, eo);
  }

  const bool simplicial = (summary && summary->complete) ? summary->simplicial : d.f[2] == 2 * d.f[3];
  const bool irreducible = !is_reducible(a).has_value();
  const bool simply_laced = (summary && summary->complete) ? summary->simply_laced : d.simply_laced_by_h();
  std::vector<CheckResult> checks = data_checks(d, simplicial, irreducible);
  RealRootsReport rr = real_roots_test(d.n, h, f3);

  Json out;
  out["n"] = d.n;
  out["field"] = std::string(to_string(a.field()));
  out["h_vector"] = to_json(d.h);
  out["t_vector"] = to_json(d.t);
  out["f_vector"] = f_json(d.f);
  Json coeffs = Json::array();
  for (const Integer& c : chi.coefficients()) coeffs.push_back(exact(c));
  out["char_poly"] = coeffs;
  out["char_poly_factored"] = chi.factored();
  out["real_rooted"] = rr.real_rooted();
  Json rel;
  rel["h_bound"] = relation_json(rr.h_bound);
  rel["f3_upper"] = relation_json(rr.f3_upper);
  rel["f3_lower"] = relation_json(rr.f3_lower);
  rel["discriminant"] = exact(rr.discriminant);
  out["relations"] = rel;
  out["simplicial"] = simplicial;
  out["simply_laced"] = simply_laced;
  out["irreducible"] = irreducible;
  out["multiplicity"] = d.multiplicity();
  out["gs_conjecture"] = to_json(named(checks, "grunbaum_shephard"));
  Json t_relations = Json::array();
  for (const char* name : {"t_identity", "t_cubic", "t_upper", "t_upper_surd", "t_lower_surd"}) {
    t_relations.push_back(to_json(named(checks, name)));
  }
  out["t_vector_relations"] = t_relations;
  out["weighted_vertices"] = to_json(named(checks, "weighted_vertices"));
  Json bounds;
  bounds["chamber_bound"] = to_json(named(checks, "chamber_bound"));
  bounds["heavy_lines"] = to_json(named(checks, "heavy_lines"));
  bounds["chamber_bound_by_dimension"] = to_json(named(checks, "chamber_bound_by_dimension"));
  Json laced = Json::array();
  for (const char* name : {"simply_laced_h2", "simply_laced_h3", "simply_laced_f3_upper", "simply_laced_f3_lower", "simply_laced_size", "gs_simply_laced_size"}) {
    laced.push_back(to_json(named(checks, name)));
  }
  bounds["simply_laced"] = laced;
  Json window = Json::array();
  window.push_back(to_json(named(checks, "multiplicity_upper")));
  window.push_back(to_json(named(checks, "multiplicity_lower")));
  bounds["multiplicity_window"] = window;
  out["bounds"] = bounds;
  Json identities = Json::array();
  for (const char* name : {"h_pair_identity", "euler", "simplicial_count"}) {
    identities.push_back(to_json(named(checks, name)));
  }
  out["identities"] = identities;
  if (summary) out["chambers"] = summary_json(*summary);
  return out;
}

namespace {

std::string plain(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string weights_text(const Json& w) {
  std::string s;
  for (const auto& [k, v] : w.items()) s += (s.empty() ? "" : " ") + k + ":" + v.dump();
  return s.empty() ? "-" : s;
}

void check_line(std::ostringstream& os, const Json& c) {
  os << "  " << c["name"].get<std::string>() << ": " << c["status"].get<std::string>();
  if (c.contains("lhs")) os << " (" << plain(c["lhs"]) << " " << plain(c["relation"]) << " " << plain(c["rhs"]) << ")";
  if (c.contains("note")) os << " [" << c["note"].get<std::string>() << "]";
  os << "\n";
}

}  // namespace

std::string analyze_text(const Json& r) {
  std::ostringstream os;
  os << "n: " << r["n"].dump() << "\n";
  os << "field: " << r["field"].get<std::string>() << "\n";
  os << "h-vector: " << weights_text(r["h_vector"]) << "\n";
  os << "t-vector: " << weights_text(r["t_vector"]) << "\n";
  os << "f-vector: " << r["f_vector"].dump() << "\n";
  os << "char poly: " << r["char_poly_factored"].get<std::string>() << "\n";
  os << "real rooted: " << r["real_rooted"].dump() << "\n";
  for (const char* k : {"h_bound", "f3_upper", "f3_lower"}) {
    const Json& x = r["relations"][k];
    os << "  " << k << ": " << (x["holds"].get<bool>() ? "holds" : "fails") << " (" << plain(x["lhs"]) << " vs "
       << plain(x["rhs"]) << (x["tight"].get<bool>() ? ", tight" : "") << ")\n";
  }
  os << "  discriminant: " << plain(r["relations"]["discriminant"]) << "\n";
  os << "simplicial: " << r["simplicial"].dump() << "\n";
  os << "simply laced: " << r["simply_laced"].dump() << "\n";
  os << "irreducible: " << r["irreducible"].dump() << "\n";
  os << "multiplicity: " << r["multiplicity"].dump() << "\n";
  os << "checks:\n";
  check_line(os, r["gs_conjecture"]);
  for (const Json& c : r["t_vector_relations"]) check_line(os, c);
  check_line(os, r["weighted_vertices"]);
  for (const char* k : {"chamber_bound", "heavy_lines", "chamber_bound_by_dimension"}) check_line(os, r["bounds"][k]);
  for (const Json& c : r["bounds"]["simply_laced"]) check_line(os, c);
  for (const Json& c : r["bounds"]["multiplicity_window"]) check_line(os, c);
  for (const Json& c : r["identities"]) check_line(os, c);
  if (r.contains("chambers")) {
    const Json& c = r["chambers"];
    os << "chambers: " << c["count"].dump() << (c["complete"].get<bool>() ? "" : " (partial)") << "\n";
    for (const auto& [name, count] : c["diagram_types"].items()) os << "  " << name << ": " << count.dump() << "\n";
  }
  return os.str();
}

Json to_json(const RowReport& r) {
  Json out;
  out["label"] = r.label;
  out["has_vectors"] = r.has_vectors;
  out["passed"] = r.passed();
  out["failed"] = r.failed();
  out["skipped"] = r.skipped();
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = checks;
  if (r.chambers) out["chambers"] = summary_json(*r.chambers);
  return out;
}

std::string row_text(const RowReport& r) {
  std::ostringstream os;
  os << r.label << ": " << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped\n";
  for (const CheckResult& c : r.checks) check_line(os, to_json(c));
  return os.str();
}

Json catalogue_json() {
  Json rows = Json::array();
  for (const CatalogueEntry& e : catalogue()) {
    Json row;
    row["label"] = e.label;
    row["n"] = e.n;
    row["h_vector"] = to_json(e.h);
    row["t_vector"] = to_json(e.t);
    row["f_vector"] = f_json(e.f);
    row["comments"] = e.comments;
    row["has_vectors"] = e.has_vectors;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace arr4
