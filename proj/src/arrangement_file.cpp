#include "arr4/arrangement_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace arr4 {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

ArrangementText parse_arrangement_text(std::string_view text) {
  ArrangementText out;
  bool have_field = false;
  std::size_t number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("field:")) {
      if (have_field) throw ParseError(number, "duplicate field header");
      std::string_view value = trim(line.substr(6));
      if (value == "rational") {
        out.field = Field::rational;
      } else if (value == "quadratic-tau") {
        out.field = Field::quadratic_tau;
      } else {
        throw ParseError(number, "unknown field '" + std::string(value) + "'");
      }
      have_field = true;
      continue;
    }
    if (!have_field) throw ParseError(number, "expected header 'field: rational' or 'field: quadratic-tau'");

    std::istringstream tokens{std::string(line)};
    std::vector<std::string> coords;
    for (std::string tok; tokens >> tok;) coords.push_back(tok);
    if (coords.size() != 4) {
      throw ParseError(number, "expected 4 coordinates, found " + std::to_string(coords.size()));
    }
    Vector v;
    for (const std::string& c : coords) {
      try {
        v.push_back(out.field == Field::rational ? Scalar(parse_rational(c)) : parse_scalar(c));
      } catch (const std::invalid_argument& e) {
        throw ParseError(number, e.what());
      }
    }
    out.normals.push_back(std::move(v));
  }
  if (!have_field) throw ParseError(0, "missing field header");
  if (out.normals.empty()) throw ParseError(0, "no normals");
  return out;
}

Arrangement parse_arrangement(std::string_view text) {
  ArrangementText t = parse_arrangement_text(text);
  return Arrangement(t.field, std::move(t.normals));
}

Arrangement read_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string emit_arrangement(const Arrangement& a) {
  std::vector<Vector> normals = a.normals();
  std::sort(normals.begin(), normals.end(), [](const Vector& x, const Vector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Scalar& p, const Scalar& q) { return p < q; });
  });
  std::string out = "field: " + std::string(to_string(a.field())) + "\n";
  for (const Vector& v : normals) {
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + to_string(v[k]);
    out += '\n';
  }
  return out;
}

void write_arrangement(const std::filesystem::path& path, const Arrangement& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << emit_arrangement(a);
}

}  // namespace arr4
