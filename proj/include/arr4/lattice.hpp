#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "arr4/arrangement.hpp"

namespace arr4 {

/**
 * Tally of flats by weight, stored index-explicitly (weight -> count).
 * `First` is the smallest weight of the positional notation: 2 for
 * h-vectors, 3 for t-vectors.
 */
template <int First>
class WeightVector {
 public:
  static constexpr int first_index = First;

  WeightVector() = default;
  static WeightVector from_positional(std::span<const long long> counts) {
    WeightVector w;
    for (std::size_t k = 0; k < counts.size(); ++k) w.add(First + static_cast<int>(k), counts[k]);
    return w;
  }

  void add(int weight, long long count = 1) {
    if (count == 0) return;
    counts_[weight] += count;
  }
  long long operator[](int weight) const {
    auto it = counts_.find(weight);
    return it == counts_.end() ? 0 : it->second;
  }
  /// Largest weight with a nonzero count, or First - 1 if empty.
  int max_index() const {
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
      if (it->second != 0) return it->first;
    }
    return First - 1;
  }
  /// Counts for weights First .. max_index().
  std::vector<long long> positional() const {
    std::vector<long long> out;
    for (int w = First; w <= max_index(); ++w) out.push_back((*this)[w]);
    return out;
  }
  const std::map<int, long long>& counts() const { return counts_; }

  friend bool operator==(const WeightVector& x, const WeightVector& y) {
    return x.positional() == y.positional();
  }

 private:
  std::map<int, long long> counts_;
};

using HVector = WeightVector<2>;
using TVector = WeightVector<3>;

/// Rank-2 flat ("line"): the common kernel of at least two hyperplanes.
struct LineFlat {
  std::vector<std::size_t> members;     // sorted, every hyperplane containing the flat
  std::array<Vector, 2> direction_basis;  // canonical kernel basis
  std::size_t weight() const { return members.size(); }
};

/// Rank-3 flat ("vertex"): a projective point.
struct VertexFlat {
  std::vector<std::size_t> members;  // sorted
  Vector point;                      // canonical projective form
  std::size_t weight() const { return members.size(); }
};

/**
 * Lines and vertices of a rank-4 arrangement.
 *
 * Lines come from grouping the pairwise intersections by canonical kernel
 * basis; vertices from intersecting each line with each hyperplane not
 * containing it. Both lists are sorted by member set.
 */
class Lattice {
 public:
  explicit Lattice(const Arrangement& a);

  std::size_t hyperplane_count() const { return n_; }
  const std::vector<LineFlat>& lines() const { return lines_; }
  const std::vector<VertexFlat>& vertices() const { return vertices_; }

  /// Index of the line H_i ∩ H_j (i != j).
  std::size_t line_of(std::size_t i, std::size_t j) const { return pair_line_[i * n_ + j]; }
  /// Indices of the lines through vertex v.
  std::vector<std::size_t> lines_through(std::size_t v) const;
  /// Indices of the lines contained in hyperplane h.
  std::vector<std::size_t> lines_in(std::size_t h) const;

  HVector h_vector() const;
  TVector t_vector() const;
  std::size_t multiplicity() const { return static_cast<std::size_t>(t_vector().max_index()); }

 private:
  std::size_t n_;
  std::vector<LineFlat> lines_;
  std::vector<VertexFlat> vertices_;
  std::vector<std::size_t> pair_line_;
};

std::vector<LineFlat> lines(const Arrangement& a);
std::vector<VertexFlat> vertices(const Arrangement& a);
HVector h_vector(const Arrangement& a);
TVector t_vector(const Arrangement& a);
std::size_t multiplicity(const Arrangement& a);

/// The lines of A inside hyperplane h, in the kernel basis of h.
Rank3Arrangement restriction(const Arrangement& a, const Lattice& lattice, std::size_t h);
Rank3Arrangement restriction(const Arrangement& a, std::size_t h);

/// The hyperplanes through vertex v, on the quotient K^4 / <v.point>.
Rank3Arrangement parabolic(const Arrangement& a, const VertexFlat& v);

/// Points (rank-2 flats) of a rank-3 arrangement.
struct PointFlat {
  std::vector<std::size_t> members;
  Vector point;
  std::size_t weight() const { return members.size(); }
};

class Rank3Lattice {
 public:
  explicit Rank3Lattice(const Rank3Arrangement& a);
  std::size_t size() const { return n_; }
  const std::vector<PointFlat>& points() const { return points_; }
  /// Coefficients of chi(t), descending, degree 3, from the Moebius function.
  std::array<Integer, 4> char_poly() const;
  /// Projective chamber count |chi(-1)| / 2.
  Integer chamber_count() const;

 private:
  std::size_t n_;
  std::vector<PointFlat> points_;
};

}  // namespace arr4
