#include "arr4/arrangement.hpp"

#include <algorithm>
#include <numeric>

namespace arr4 {

DuplicateHyperplane::DuplicateHyperplane(std::size_t first, std::size_t second)
    : ArrangementError("duplicate hyperplane: normals " + std::to_string(first + 1) + " and " +
                       std::to_string(second + 1) + " are proportional"),
      first(first),
      second(second) {}

NotEssential::NotEssential(std::size_t rank, std::size_t dimension)
    : ArrangementError("arrangement is not essential: normals have rank " + std::to_string(rank) +
                       " < " + std::to_string(dimension)) {}

MixedField::MixedField(std::size_t index)
    : ArrangementError("normal " + std::to_string(index + 1) +
                       " has a coordinate outside the declared field") {}

Vector canonical_normal(Vector v, Field field) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (lead == v.end()) throw std::invalid_argument("zero vector has no projective normal form");

  if (field == Field::quadratic_tau) {
    Scalar inv = lead->inverse();
    for (Scalar& x : v) {
      if (!x.is_zero()) x *= inv;
    }
    return v;
  }

  Integer den_lcm = 1;
  for (const Scalar& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.a().get_den_mpz_t());
  Integer content = 0;
  for (const Scalar& x : v) {
    Integer num = x.a().get_num() * (den_lcm / x.a().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (sgn(lead->a()) < 0) scale = -scale;
  for (Scalar& x : v) x = Scalar(Rational(x.a() * scale));
  return v;
}

bool proportional(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) return false;
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!(v[i] * w[j] - v[j] * w[i]).is_zero()) return false;
    }
  }
  return std::any_of(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
}

Field field_of(const std::vector<Vector>& vectors) {
  for (const Vector& v : vectors) {
    for (const Scalar& x : v) {
      if (!x.is_rational()) return Field::quadratic_tau;
    }
  }
  return Field::rational;
}

template <std::size_t Dim>
BasicArrangement<Dim>::BasicArrangement(Field field, std::vector<Vector> normals) : field_(field) {
  if (normals.empty()) throw ArrangementError("arrangement needs at least one hyperplane");
  normals_.reserve(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    Vector& v = normals[i];
    if (v.size() != Dim) {
      throw ArrangementError("normal " + std::to_string(i + 1) + " has " + std::to_string(v.size()) +
                             " coordinates, expected " + std::to_string(Dim));
    }
    if (field == Field::rational) {
      for (const Scalar& x : v) {
        if (!x.is_rational()) throw MixedField(i);
      }
    }
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); })) {
      throw ArrangementError("normal " + std::to_string(i + 1) + " is zero");
    }
    normals_.push_back(canonical_normal(std::move(v), field));
  }
  // Canonical forms coincide exactly for proportional normals.
  std::vector<std::size_t> order(normals_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key_less = [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(normals_[x].begin(), normals_[x].end(), normals_[y].begin(),
                                        normals_[y].end(), structural_less);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (key_less(x, y)) return true;
    if (key_less(y, x)) return false;
    return x < y;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (normals_[order[k - 1]] == normals_[order[k]]) {
      throw DuplicateHyperplane(order[k - 1], order[k]);
    }
  }
  std::size_t r = rank(normals_, Dim);
  if (r < Dim) throw NotEssential(r, Dim);
}

template class BasicArrangement<3>;
template class BasicArrangement<4>;

Arrangement new_arrangement(std::vector<Vector> normals) {
  Field field = field_of(normals);
  return Arrangement(field, std::move(normals));
}

std::vector<std::vector<std::size_t>> direct_sum_components(const Arrangement& a) {
  // Matroid components of the normals: pick a basis greedily, then join every
  // non-basis element with the basis elements of its fundamental circuit.
  const std::size_t n = a.size();
  std::vector<std::size_t> basis;
  std::vector<Vector> basis_rows;
  for (std::size_t i = 0; i < n && basis.size() < Arrangement::dimension; ++i) {
    basis_rows.push_back(a.normal(i));
    if (rank(basis_rows, Arrangement::dimension) == basis_rows.size()) {
      basis.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  // Coordinates w.r.t. the basis: solve B^T c = v via the echelon form of the
  // augmented system [B^T | v].
  const std::size_t d = Arrangement::dimension;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(basis.begin(), basis.end(), i) != basis.end()) continue;
    Matrix aug(d, d + 1);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) aug(r, c) = basis_rows[c][r];
      aug(r, d) = a.normal(i)[r];
    }
    Echelon e = reduced_echelon(aug);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (!e.reduced(r, d).is_zero()) unite(i, basis[e.pivot_cols[r]]);
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (group_of[root] == n) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(i);
  }
  return groups;
}

std::optional<Partition> is_reducible(const Arrangement& a) {
  auto groups = direct_sum_components(a);
  if (groups.size() < 2) return std::nullopt;
  Partition p;
  p.first = groups.front();
  for (std::size_t g = 1; g < groups.size(); ++g) {
    p.second.insert(p.second.end(), groups[g].begin(), groups[g].end());
  }
  std::sort(p.second.begin(), p.second.end());
  return p;
}

}  // namespace arr4
