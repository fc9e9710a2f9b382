#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arr4/matrix.hpp"

namespace arr4 {

class ArrangementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two normals are proportional.
class DuplicateHyperplane : public ArrangementError {
 public:
  DuplicateHyperplane(std::size_t first, std::size_t second);
  std::size_t first;
  std::size_t second;
};

/// The normals do not span the ambient space.
class NotEssential : public ArrangementError {
 public:
  NotEssential(std::size_t rank, std::size_t dimension);
};

/// A coordinate lies outside the declared field.
class MixedField : public ArrangementError {
 public:
  explicit MixedField(std::size_t index);
};

/**
 * Canonical projective representative of a nonzero vector.
 *
 * Over Q the vector is scaled to a primitive integer vector whose first
 * nonzero coordinate is positive; over Q(tau) it is scaled so that the first
 * nonzero coordinate is 1.
 */
Vector canonical_normal(Vector v, Field field);

/// True iff v and w are nonzero multiples of each other.
bool proportional(const Vector& v, const Vector& w);

/// Smallest field containing every coordinate.
Field field_of(const std::vector<Vector>& vectors);

/**
 * Central essential arrangement of hyperplanes in K^Dim, given by normals.
 *
 * Normals are stored in canonical projective form and in input order (the
 * index of a hyperplane is its position in the input).
 */
template <std::size_t Dim>
class BasicArrangement {
 public:
  static constexpr std::size_t dimension = Dim;

  BasicArrangement(Field field, std::vector<Vector> normals);

  Field field() const { return field_; }
  std::size_t size() const { return normals_.size(); }
  const Vector& normal(std::size_t i) const { return normals_[i]; }
  const std::vector<Vector>& normals() const { return normals_; }

  friend bool operator==(const BasicArrangement&, const BasicArrangement&) = default;

 private:
  Field field_;
  std::vector<Vector> normals_;
};

using Arrangement = BasicArrangement<4>;
using Rank3Arrangement = BasicArrangement<3>;

/// Builds an arrangement in the smallest field containing the input.
Arrangement new_arrangement(std::vector<Vector> normals);

extern template class BasicArrangement<3>;
extern template class BasicArrangement<4>;

/// Partition of the hyperplane indices returned by is_reducible.
using Partition = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

/**
 * Finest decomposition K^4 = V_1 + ... + V_k (direct sum) such that every
 * normal lies in one summand, as groups of hyperplane indices. Groups are
 * sorted by their smallest index.
 */
std::vector<std::vector<std::size_t>> direct_sum_components(const Arrangement& a);

/// First summand against the union of the rest, or nullopt if irreducible.
std::optional<Partition> is_reducible(const Arrangement& a);

}  // namespace arr4
