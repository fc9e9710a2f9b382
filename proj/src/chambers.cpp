#include "arr4/chambers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "arr4/parallel.hpp"

namespace arr4 {

namespace {

struct StructuralLess {
  bool operator()(const Vector& x, const Vector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), structural_less);
  }
};

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

// Positive multiple of v whose first nonzero entry is +1 or -1.
Vector positive_normalized(const Vector& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  Scalar scale = lead->abs().inverse();
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[k] = v[k] * scale;
  }
  return out;
}

Vector negated(const Vector& v) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = -v[k];
  return out;
}

int cross_sign(const Vector& x, const Vector& y) { return (x[0] * y[1] - x[1] * y[0]).sign(); }

// All rows inside one open half-plane of K^2.
bool open_halfplane(const std::vector<Vector>& rows) {
  const Vector* lo = nullptr;  // clockwise boundary of the row cone
  const Vector* hi = nullptr;  // counter-clockwise boundary
  bool degenerate = true;      // lo and hi point the same way
  for (const Vector& r : rows) {
    if (is_zero_vector(r)) return false;
    if (lo == nullptr) {
      lo = hi = &r;
      continue;
    }
    int a = cross_sign(*lo, r);
    int b = cross_sign(r, *hi);
    if (degenerate && a == 0 && b == 0) {
      if (dot(*lo, r).sign() > 0) continue;
      return false;
    }
    if (!degenerate && a >= 0 && b >= 0) continue;
    if (a < 0 && b > 0) {
      lo = &r;
    } else if (a > 0 && b < 0) {
      hi = &r;
    } else {
      return false;
    }
    degenerate = false;
  }
  return true;
}

bool feasible(std::vector<Vector> rows, std::size_t dim, bool normalized) {
  if (rows.empty()) return true;
  for (const Vector& r : rows) {
    if (is_zero_vector(r)) return false;
  }
  if (dim == 2) return open_halfplane(rows);

  std::set<Vector, StructuralLess> distinct;
  for (Vector& r : rows) distinct.insert(normalized ? std::move(r) : positive_normalized(r));
  for (const Vector& r : distinct) {
    if (distinct.count(negated(r)) != 0) return false;
  }
  if (dim == 1) return true;  // all leads share one sign

  const std::size_t last = dim - 1;
  std::vector<const Vector*> pos, neg;
  std::vector<Vector> next;
  for (const Vector& r : distinct) {
    int s = r[last].sign();
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else {
      next.emplace_back(r.begin(), r.end() - 1);
    }
  }
  if (pos.empty() || neg.empty()) {
    // The last coordinate can be pushed far enough to satisfy every row using it.
    return feasible(std::move(next), dim - 1, true);
  }
  for (const Vector* p : pos) {
    for (const Vector* q : neg) {
      Scalar wp = -(*q)[last];
      const Scalar& wq = (*p)[last];
      Vector combo(last);
      for (std::size_t k = 0; k < last; ++k) combo[k] = (*p)[k] * wp + (*q)[k] * wq;
      next.push_back(std::move(combo));
    }
  }
  return feasible(std::move(next), dim - 1, false);
}

// Per-hyperplane data for the restricted wall systems. For hyperplane h and
// every other i, the functional v_i restricted to h is rel_sign[i] times a
// positive multiple of reps[class_of[i]]; proportional restrictions share a
// class.
class WallOracle {
 public:
  explicit WallOracle(const Arrangement& a) : n_(a.size()), per_h_(a.size()) {
    for (std::size_t h = 0; h < n_; ++h) {
      std::vector<Vector> basis = kernel_basis(std::vector<Vector>{a.normal(h)}, Arrangement::dimension);
      Restricted& r = per_h_[h];
      r.class_of.assign(n_, kNone);
      r.rel_sign.assign(n_, 0);
      std::map<Vector, std::size_t, StructuralLess> index;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == h) continue;
        Vector u(3);
        for (std::size_t k = 0; k < 3; ++k) u[k] = dot(basis[k], a.normal(i));
        Vector nu = positive_normalized(u);
        auto lead = std::find_if(nu.begin(), nu.end(), [](const Scalar& x) { return !x.is_zero(); });
        std::int8_t s = static_cast<std::int8_t>(lead->sign());
        if (s < 0) nu = negated(nu);
        auto [it, inserted] = index.try_emplace(nu, r.reps.size());
        if (inserted) r.reps.push_back(nu);
        r.class_of[i] = it->second;
        r.rel_sign[i] = s;
      }
    }
  }

  bool is_wall(const SignVector& signs, std::size_t h) const {
    const Restricted& r = per_h_[h];
    std::vector<std::int8_t> required(r.reps.size(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == h) continue;
      std::int8_t s = static_cast<std::int8_t>(signs[i] * r.rel_sign[i]);
      std::int8_t& slot = required[r.class_of[i]];
      if (slot == 0) {
        slot = s;
      } else if (slot != s) {
        return false;
      }
    }
    std::vector<Vector> rows;
    rows.reserve(r.reps.size());
    for (std::size_t c = 0; c < r.reps.size(); ++c) {
      rows.push_back(required[c] > 0 ? r.reps[c] : negated(r.reps[c]));
    }
    return feasible(std::move(rows), 3, true);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Restricted {
    std::vector<Vector> reps;
    std::vector<std::size_t> class_of;
    std::vector<std::int8_t> rel_sign;
  };
  std::size_t n_;
  std::vector<Restricted> per_h_;
};

// Nonzero signs <point, v_i> for every lattice vertex.
class VertexSigns {
 public:
  VertexSigns(const Arrangement& a, const Lattice& lattice) {
    for (const VertexFlat& v : lattice.vertices()) {
      std::vector<std::pair<std::size_t, std::int8_t>> row;
      for (std::size_t i = 0; i < a.size(); ++i) {
        int s = dot(v.point, a.normal(i)).sign();
        if (s != 0) row.emplace_back(i, static_cast<std::int8_t>(s));
      }
      rows_.push_back(std::move(row));
    }
  }

  // Orientation (+1 / -1) putting the vertex into the closed chamber, or 0.
  int orientation(std::size_t v, const SignVector& signs) const {
    const auto& row = rows_[v];
    int s = row.front().second * signs[row.front().first];
    for (const auto& [i, sv] : row) {
      if (sv * signs[i] * s < 0) return 0;
    }
    return s;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::vector<std::pair<std::size_t, std::int8_t>>> rows_;
};

std::size_t common_count(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y,
                         std::size_t stop) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < x.size() && j < y.size() && c < stop) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

ChamberGeometry geometry_from(const Arrangement& a, const Lattice& lattice, const VertexSigns& vs,
                              const SignVector& signs) {
  ChamberGeometry g;
  const auto& verts = lattice.vertices();
  g.witness.assign(Arrangement::dimension, Scalar());
  std::vector<std::size_t> on_plane(a.size(), 0);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    int s = vs.orientation(v, signs);
    if (s == 0) continue;
    Vector ray = verts[v].point;
    if (s < 0) ray = negated(ray);
    for (std::size_t k = 0; k < ray.size(); ++k) g.witness[k] += ray[k];
    for (std::size_t i : verts[v].members) ++on_plane[i];
    g.ray_vertices.push_back(v);
    g.rays.push_back(std::move(ray));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (on_plane[i] >= 3) g.facets.push_back(i);
  }
  for (std::size_t x = 0; x < g.ray_vertices.size(); ++x) {
    for (std::size_t y = x + 1; y < g.ray_vertices.size(); ++y) {
      if (common_count(verts[g.ray_vertices[x]].members, verts[g.ray_vertices[y]].members, 2) >= 2) {
        ++g.edge_count;
      }
    }
  }
  if (g.rays.empty() || sign_vector_at(a, g.witness) != signs) throw EmptyChamber();
  return g;
}

bool sign_less(const SignVector& x, const SignVector& y) {
  // '+' sorts before '-'
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](std::int8_t p, std::int8_t q) { return p > q; });
}

std::vector<unsigned long> small_primes(std::size_t count) {
  std::vector<unsigned long> primes;
  for (unsigned long c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (unsigned long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

SignVector canonical_signs(SignVector s) {
  if (!s.empty() && s.front() < 0) {
    for (auto& x : s) x = static_cast<std::int8_t>(-x);
  }
  return s;
}

std::string to_string(const SignVector& s) {
  std::string out;
  out.reserve(s.size());
  for (auto x : s) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
  return out;
}

SignVector sign_vector_at(const Arrangement& a, const Vector& x) {
  SignVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<std::int8_t>(dot(x, a.normal(i)).sign());
  return s;
}

Vector generic_point(const Arrangement& a) {
  for (unsigned long p : small_primes(1000)) {
    Integer q = p;
    Vector x{Scalar(1), Scalar(Rational(q)), Scalar(Rational(q * q)), Scalar(Rational(q * q * q))};
    SignVector s = sign_vector_at(a, x);
    if (std::none_of(s.begin(), s.end(), [](std::int8_t v) { return v == 0; })) return x;
  }
  throw GenericPointNotFound();
}

bool strictly_feasible(std::vector<Vector> rows, std::size_t dim) {
  for (const Vector& r : rows) {
    if (r.size() != dim) throw std::invalid_argument("strictly_feasible: row dimension mismatch");
  }
  if (dim == 0) return rows.empty();
  return feasible(std::move(rows), dim, false);
}

std::vector<std::size_t> walls(const Arrangement& a, const SignVector& signs) {
  if (signs.size() != a.size()) throw std::invalid_argument("walls: sign vector has wrong length");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("walls: signs must be +1 or -1");
    rows.push_back(signs[i] > 0 ? a.normal(i) : negated(a.normal(i)));
  }
  if (!strictly_feasible(std::move(rows), Arrangement::dimension)) throw EmptyChamber();
  WallOracle oracle(a);
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (oracle.is_wall(signs, h)) out.push_back(h);
  }
  return out;
}

ChamberGeometry chamber_geometry(const Arrangement& a, const Lattice& lattice, const SignVector& signs) {
  if (signs.size() != a.size()) throw std::invalid_argument("chamber_geometry: sign vector has wrong length");
  return geometry_from(a, lattice, VertexSigns(a, lattice), signs);
}

bool CoxeterDiagram::connected() const {
  if (nodes.size() <= 1) return true;
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](std::size_t h) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), h) - nodes.begin());
  };
  std::size_t components = nodes.size();
  for (const CoxeterEdge& e : edges) {
    std::size_t x = find(pos(e.first)), y = find(pos(e.second));
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

bool CoxeterDiagram::simply_laced() const {
  return std::all_of(edges.begin(), edges.end(), [](const CoxeterEdge& e) { return e.weight == 3; });
}

namespace {

std::string component_name(const std::vector<std::size_t>& comp, const std::vector<CoxeterEdge>& edges) {
  const std::size_t k = comp.size();
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> adj;  // node -> (nbr, weight)
  std::vector<std::size_t> weights;
  for (const CoxeterEdge& e : edges) {
    if (std::find(comp.begin(), comp.end(), e.first) == comp.end()) continue;
    adj[e.first].emplace_back(e.second, e.weight);
    adj[e.second].emplace_back(e.first, e.weight);
    weights.push_back(e.weight);
  }
  const std::size_t m = weights.size();
  auto generic = [&] {
    std::ostringstream os;
    std::vector<std::size_t> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    os << "G" << k << "[";
    for (std::size_t i = 0; i < sorted.size(); ++i) os << (i ? "," : "") << sorted[i];
    os << "]";
    return os.str();
  };
  if (k == 1) return "A1";
  if (k == 2) {
    switch (weights.front()) {
      case 3: return "A2";
      case 4: return "B2";
      case 5: return "H2";
      case 6: return "G2";
      default: return "I2(" + std::to_string(weights.front()) + ")";
    }
  }
  std::size_t max_degree = 0;
  std::size_t end = comp.front();
  for (std::size_t v : comp) {
    max_degree = std::max(max_degree, adj[v].size());
    if (adj[v].size() == 1) end = v;
  }
  if (m == k - 1 && max_degree <= 2) {
    // path: read the weights from one end
    std::vector<std::size_t> seq;
    std::size_t prev = static_cast<std::size_t>(-1), cur = end;
    while (seq.size() < m) {
      for (const auto& [nbr, w] : adj[cur]) {
        if (nbr != prev) {
          seq.push_back(w);
          prev = cur;
          cur = nbr;
          break;
        }
      }
    }
    std::vector<std::size_t> rev(seq.rbegin(), seq.rend());
    auto is = [&](std::vector<std::size_t> pattern) { return seq == pattern || rev == pattern; };
    const std::string kk = std::to_string(k);
    if (std::all_of(seq.begin(), seq.end(), [](std::size_t w) { return w == 3; })) return "A" + kk;
    std::vector<std::size_t> b(m, 3), h(m, 3);
    b.back() = 4;
    h.back() = 5;
    if (is(b)) return "B" + kk;
    if (k <= 4 && is(h)) return "H" + kk;
    if (k == 4 && is({3, 4, 3})) return "F4";
    return generic();
  }
  if (k == 4 && m == 3 && max_degree == 3 &&
      std::all_of(weights.begin(), weights.end(), [](std::size_t w) { return w == 3; })) {
    return "D4";
  }
  if (m == k && max_degree == 2 &&
      std::all_of(weights.begin(), weights.end(), [](std::size_t w) { return w == 3; })) {
    return "~A" + std::to_string(k - 1);
  }
  return generic();
}

}  // namespace

std::string CoxeterDiagram::type_name() const {
  std::map<std::size_t, std::size_t> parent;
  for (std::size_t v : nodes) parent[v] = v;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const CoxeterEdge& e : edges) parent[find(e.first)] = find(e.second);
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t v : nodes) comps[find(v)].push_back(v);
  std::vector<std::pair<std::size_t, std::string>> names;
  for (const auto& [root, comp] : comps) names.emplace_back(comp.size(), component_name(comp, edges));
  std::sort(names.begin(), names.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  std::string out;
  for (const auto& [size, name] : names) out += (out.empty() ? "" : "x") + name;
  return out;
}

CoxeterDiagram coxeter_diagram(const Lattice& lattice, const Chamber& chamber) {
  CoxeterDiagram d;
  d.nodes = chamber.walls;
  for (std::size_t x = 0; x < d.nodes.size(); ++x) {
    for (std::size_t y = x + 1; y < d.nodes.size(); ++y) {
      std::size_t w = lattice.lines()[lattice.line_of(d.nodes[x], d.nodes[y])].weight();
      if (w >= 3) d.edges.push_back({d.nodes[x], d.nodes[y], w});
    }
  }
  return d;
}

bool for_each_chamber(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options,
                      const std::function<bool(const Chamber&)>& visit) {
  const unsigned threads = options.threads != 0 ? options.threads : worker_count();
  WallOracle oracle(a);
  VertexSigns vertex_signs(a, lattice);

  SignVector seed = canonical_signs(sign_vector_at(a, generic_point(a)));
  std::set<SignVector> seen{seed};
  std::vector<SignVector> frontier{seed};
  std::size_t visited = 0;

  while (!frontier.empty()) {
    std::vector<Chamber> level(frontier.size());
    parallel_for(frontier.size(), threads, [&](std::size_t k) {
      const SignVector& signs = frontier[k];
      ChamberGeometry g = geometry_from(a, lattice, vertex_signs, signs);
      Chamber c{signs, {}};
      // Every facet of the closed cone contains >= 3 extreme rays; the
      // restricted strict system decides each candidate.
      for (std::size_t h : g.facets) {
        if (oracle.is_wall(signs, h)) c.walls.push_back(h);
      }
      if (c.walls != g.facets) throw std::logic_error("wall routes disagree on chamber " + to_string(signs));
      level[k] = std::move(c);
    });

    std::vector<SignVector> next;
    for (const Chamber& c : level) {
      if (options.max_chambers != 0 && visited == options.max_chambers) return false;
      ++visited;
      if (!visit(c)) return false;
      for (std::size_t h : c.walls) {
        SignVector flipped = c.signs;
        flipped[h] = static_cast<std::int8_t>(-flipped[h]);
        flipped = canonical_signs(std::move(flipped));
        if (seen.insert(flipped).second) next.push_back(std::move(flipped));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

ChamberList enumerate_chambers(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options) {
  ChamberList out;
  out.complete = for_each_chamber(a, lattice, options, [&](const Chamber& c) {
    out.chambers.push_back(c);
    return true;
  });
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const Chamber& x, const Chamber& y) { return sign_less(x.signs, y.signs); });
  return out;
}

ChamberList enumerate_chambers(const Arrangement& a, const EnumerationOptions& options) {
  return enumerate_chambers(a, Lattice(a), options);
}

bool is_simplicial(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options) {
  bool result = true;
  for_each_chamber(a, lattice, options, [&](const Chamber& c) {
    result = c.walls.size() == 4;
    return result;
  });
  return result;
}

bool is_simply_laced(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options) {
  bool result = true;
  for_each_chamber(a, lattice, options, [&](const Chamber& c) {
    result = coxeter_diagram(lattice, c).simply_laced();
    return result;
  });
  return result;
}

bool is_irreducible_diagrams(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options) {
  bool result = true;
  for_each_chamber(a, lattice, options, [&](const Chamber& c) {
    result = coxeter_diagram(lattice, c).connected();
    return result;
  });
  return result;
}

ChamberSummary summarize_chambers(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options) {
  ChamberSummary s;
  s.complete = for_each_chamber(a, lattice, options, [&](const Chamber& c) {
    ++s.count;
    CoxeterDiagram d = coxeter_diagram(lattice, c);
    s.simplicial = s.simplicial && c.walls.size() == 4;
    s.simply_laced = s.simply_laced && d.simply_laced();
    s.irreducible = s.irreducible && d.connected();
    ++s.diagram_types[d.type_name()];
    return true;
  });
  return s;
}

}  // namespace arr4
