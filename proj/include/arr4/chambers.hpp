#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "arr4/lattice.hpp"

namespace arr4 {

class ChamberError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The sign vector describes no point of the complement.
class EmptyChamber : public ChamberError {
 public:
  EmptyChamber() : ChamberError("sign vector describes an empty chamber") {}
};

class GenericPointNotFound : public ChamberError {
 public:
  GenericPointNotFound() : ChamberError("no generic seed point found on the moment curve") {}
};

/// Entries +1 / -1 per hyperplane (0 only for points on a hyperplane).
using SignVector = std::vector<std::int8_t>;

/// Antipodal representative with first entry +1.
SignVector canonical_signs(SignVector s);
std::string to_string(const SignVector& s);

/// Signs of <x, v_i>.
SignVector sign_vector_at(const Arrangement& a, const Vector& x);

/// First point (1, p, p^2, p^3), p = 2, 3, 5, 7, ..., off every hyperplane.
Vector generic_point(const Arrangement& a);

/**
 * Is there y with <row, y> > 0 for every row? Decided exactly by
 * Fourier-Motzkin elimination of the last coordinate, merging positively
 * proportional rows after each step; the two-variable system is settled by
 * tracking the cone of row directions, which must stay inside an open
 * half-plane.
 */
bool strictly_feasible(std::vector<Vector> rows, std::size_t dim);

/// H is a wall iff {s_i <x, v_i> > 0, i != H} has a solution on H.
/// Throws EmptyChamber if the sign vector is infeasible.
std::vector<std::size_t> walls(const Arrangement& a, const SignVector& signs);

struct Chamber {
  SignVector signs;                 // canonical
  std::vector<std::size_t> walls;   // sorted
};

/// Closed cone of a chamber described by the vertices it contains.
struct ChamberGeometry {
  std::vector<std::size_t> ray_vertices;  // lattice vertex indices of the extreme rays
  std::vector<Vector> rays;               // oriented points, same order
  Vector witness;                         // sum of the rays; strictly inside
  std::size_t edge_count = 0;             // two-dimensional faces of the cone
  std::vector<std::size_t> facets;        // hyperplanes containing >= 3 rays
};

/// Requires a nonempty chamber; the witness is verified exactly.
ChamberGeometry chamber_geometry(const Arrangement& a, const Lattice& lattice, const SignVector& signs);

struct CoxeterEdge {
  std::size_t first;
  std::size_t second;
  std::size_t weight;
  friend bool operator==(const CoxeterEdge&, const CoxeterEdge&) = default;
};

/// Graph on the walls of one chamber; edges where the wall pair meets in a
/// line of weight >= 3, labelled by that weight.
struct CoxeterDiagram {
  std::vector<std::size_t> nodes;
  std::vector<CoxeterEdge> edges;

  bool connected() const;
  bool simply_laced() const;
  /// "A4", "D4", "B4", "F4", "H4", products like "A1xA1xA1xA1", "~A3" for a
  /// four-cycle; anything else gets a generic edge-list label.
  std::string type_name() const;
};

CoxeterDiagram coxeter_diagram(const Lattice& lattice, const Chamber& chamber);

struct EnumerationOptions {
  std::size_t max_chambers = 0;  // 0: no limit
  unsigned threads = 0;          // 0: worker_count()
};

struct ChamberList {
  std::vector<Chamber> chambers;  // sorted by sign vector
  bool complete = true;
};

/**
 * Breadth-first search over the chamber graph starting at the chamber of
 * generic_point(a); neighbours are reached by flipping walls. Every chamber's
 * sign vector is certified by an interior witness.
 *
 * `visit` may return false to stop early; the return value is false iff the
 * search stopped before exhausting the graph.
 */
bool for_each_chamber(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options,
                      const std::function<bool(const Chamber&)>& visit);

ChamberList enumerate_chambers(const Arrangement& a, const Lattice& lattice,
                               const EnumerationOptions& options = {});
ChamberList enumerate_chambers(const Arrangement& a, const EnumerationOptions& options = {});

/// Every chamber has exactly four walls.
bool is_simplicial(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options = {});
/// Every Coxeter diagram has only weight-3 edges.
bool is_simply_laced(const Arrangement& a, const Lattice& lattice, const EnumerationOptions& options = {});
/// Every Coxeter diagram is connected.
bool is_irreducible_diagrams(const Arrangement& a, const Lattice& lattice,
                             const EnumerationOptions& options = {});

/// One pass over all chambers collecting every chamber-level verdict.
struct ChamberSummary {
  std::size_t count = 0;
  bool complete = true;
  bool simplicial = true;
  bool simply_laced = true;
  bool irreducible = true;
  std::map<std::string, std::size_t> diagram_types;
};

ChamberSummary summarize_chambers(const Arrangement& a, const Lattice& lattice,
                                  const EnumerationOptions& options = {});

}  // namespace arr4
