#include "arr4/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arr4 {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct StructuralLess {
  bool operator()(const Vector& x, const Vector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), structural_less);
  }
};

Vector concat(const std::vector<Vector>& parts) {
  Vector out;
  for (const Vector& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

template <typename Flat>
std::vector<std::size_t> sort_by_members(std::vector<Flat>& flats) {
  std::vector<std::size_t> order(flats.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return flats[x].members < flats[y].members; });
  std::vector<Flat> sorted;
  sorted.reserve(flats.size());
  std::vector<std::size_t> new_index(flats.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    sorted.push_back(std::move(flats[order[k]]));
  }
  flats = std::move(sorted);
  return new_index;
}

}  // namespace

Lattice::Lattice(const Arrangement& a) : n_(a.size()), pair_line_(n_ * n_, kNone) {
  const auto& v = a.normals();
  constexpr std::size_t d = Arrangement::dimension;

  std::map<Vector, std::size_t, StructuralLess> line_index;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (pair_line_[i * n_ + j] != kNone) continue;
      std::vector<Vector> rows{v[i], v[j]};
      std::vector<Vector> basis = kernel_basis(rows, d);
      Vector key = concat(basis);
      auto [it, inserted] = line_index.try_emplace(std::move(key), lines_.size());
      if (inserted) {
        LineFlat line;
        line.direction_basis = {basis[0], basis[1]};
        for (std::size_t k = 0; k < n_; ++k) {
          if (dot(basis[0], v[k]).is_zero() && dot(basis[1], v[k]).is_zero()) line.members.push_back(k);
        }
        lines_.push_back(std::move(line));
      }
      const auto& members = lines_[it->second].members;
      for (std::size_t x : members) {
        for (std::size_t y : members) {
          if (x != y) pair_line_[x * n_ + y] = it->second;
        }
      }
    }
  }
  std::vector<std::size_t> remap = sort_by_members(lines_);
  for (std::size_t& idx : pair_line_) {
    if (idx != kNone) idx = remap[idx];
  }

  std::map<Vector, std::size_t, StructuralLess> vertex_index;
  std::vector<bool> covered(n_);
  for (const LineFlat& line : lines_) {
    std::fill(covered.begin(), covered.end(), false);
    for (std::size_t k : line.members) covered[k] = true;
    const Vector& d1 = line.direction_basis[0];
    const Vector& d2 = line.direction_basis[1];
    for (std::size_t k = 0; k < n_; ++k) {
      if (covered[k]) continue;
      Scalar s1 = dot(d1, v[k]);
      Scalar s2 = dot(d2, v[k]);
      Vector p(d);
      for (std::size_t c = 0; c < d; ++c) p[c] = s2 * d1[c] - s1 * d2[c];
      p = canonical_normal(std::move(p), a.field());
      auto [it, inserted] = vertex_index.try_emplace(p, vertices_.size());
      if (inserted) {
        VertexFlat vertex;
        vertex.point = std::move(p);
        for (std::size_t m = 0; m < n_; ++m) {
          if (dot(vertex.point, v[m]).is_zero()) vertex.members.push_back(m);
        }
        vertices_.push_back(std::move(vertex));
      }
      for (std::size_t m : vertices_[it->second].members) covered[m] = true;
    }
  }
  sort_by_members(vertices_);
}

std::vector<std::size_t> Lattice::lines_through(std::size_t v) const {
  const auto& members = vertices_[v].members;
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) out.insert(line_of(members[x], members[y]));
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> Lattice::lines_in(std::size_t h) const {
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (j != h) out.insert(line_of(h, j));
  }
  return {out.begin(), out.end()};
}

HVector Lattice::h_vector() const {
  HVector h;
  for (const LineFlat& line : lines_) h.add(static_cast<int>(line.weight()));
  return h;
}

TVector Lattice::t_vector() const {
  TVector t;
  for (const VertexFlat& vertex : vertices_) t.add(static_cast<int>(vertex.weight()));
  return t;
}

std::vector<LineFlat> lines(const Arrangement& a) { return Lattice(a).lines(); }
std::vector<VertexFlat> vertices(const Arrangement& a) { return Lattice(a).vertices(); }
HVector h_vector(const Arrangement& a) { return Lattice(a).h_vector(); }
TVector t_vector(const Arrangement& a) { return Lattice(a).t_vector(); }
std::size_t multiplicity(const Arrangement& a) { return Lattice(a).multiplicity(); }

Rank3Arrangement restriction(const Arrangement& a, const Lattice& lattice, std::size_t h) {
  if (h >= a.size()) throw std::out_of_range("restriction: hyperplane index out of range");
  std::vector<Vector> basis = kernel_basis(std::vector<Vector>{a.normal(h)}, Arrangement::dimension);
  std::vector<Vector> normals;
  for (std::size_t idx : lattice.lines_in(h)) {
    const auto& members = lattice.lines()[idx].members;
    std::size_t j = members.front() != h ? members.front() : members[1];
    Vector u(3);
    for (std::size_t c = 0; c < 3; ++c) u[c] = dot(basis[c], a.normal(j));
    normals.push_back(std::move(u));
  }
  return Rank3Arrangement(a.field(), std::move(normals));
}

Rank3Arrangement restriction(const Arrangement& a, std::size_t h) {
  return restriction(a, Lattice(a), h);
}

Rank3Arrangement parabolic(const Arrangement& a, const VertexFlat& v) {
  // Every member normal lies in v.point^perp; its coordinates in the canonical
  // kernel basis of v.point are its entries at the free columns.
  std::vector<std::size_t> free = free_columns(std::vector<Vector>{v.point}, Arrangement::dimension);
  std::vector<Vector> normals;
  for (std::size_t i : v.members) {
    Vector u(free.size());
    for (std::size_t c = 0; c < free.size(); ++c) u[c] = a.normal(i)[free[c]];
    normals.push_back(std::move(u));
  }
  return Rank3Arrangement(a.field(), std::move(normals));
}

Rank3Lattice::Rank3Lattice(const Rank3Arrangement& a) : n_(a.size()) {
  const auto& v = a.normals();
  std::map<Vector, std::size_t, StructuralLess> index;
  std::vector<bool> done(n_ * n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (done[i * n_ + j]) continue;
      std::vector<Vector> rows{v[i], v[j]};
      Vector p = kernel_basis(rows, 3).front();
      auto [it, inserted] = index.try_emplace(p, points_.size());
      if (inserted) {
        PointFlat flat;
        flat.point = std::move(p);
        for (std::size_t k = 0; k < n_; ++k) {
          if (dot(flat.point, v[k]).is_zero()) flat.members.push_back(k);
        }
        points_.push_back(std::move(flat));
      }
      for (std::size_t x : points_[it->second].members) {
        for (std::size_t y : points_[it->second].members) done[x * n_ + y] = true;
      }
    }
  }
  sort_by_members(points_);
}

std::array<Integer, 4> Rank3Lattice::char_poly() const {
  // mu(V) = 1, mu(H) = -1, mu(p) = w(p) - 1, mu(0) = -(sum of the others).
  Integer point_sum = 0;
  for (const PointFlat& p : points_) point_sum += static_cast<long>(p.weight()) - 1;
  Integer n = static_cast<long>(n_);
  Integer bottom = -(1 - n + point_sum);
  return {Integer(1), Integer(-n), point_sum, bottom};
}

Integer Rank3Lattice::chamber_count() const {
  auto c = char_poly();
  Integer at_minus_one = -c[0] + c[1] - c[2] + c[3];
  return abs(at_minus_one) / 2;
}

}  // namespace arr4
