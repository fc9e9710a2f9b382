#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arr4/chambers.hpp"
#include "arr4/invariants.hpp"

namespace arr4 {

class CatalogueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLabel : public CatalogueError {
 public:
  explicit UnknownLabel(std::string_view label)
      : CatalogueError("unknown catalogue label '" + std::string(label) + "'") {}
};

class NoVectorsAvailable : public CatalogueError {
 public:
  explicit NoVectorsAvailable(std::string_view label)
      : CatalogueError("no normal vectors available for '" + std::string(label) + "'") {}
};

class ClosureOverflow : public CatalogueError {
 public:
  explicit ClosureOverflow(std::size_t cap)
      : CatalogueError("reflection closure exceeded " + std::to_string(cap) + " hyperplanes") {}
};

/// One row of the table of known irreducible simplicial arrangements in P^3.
struct CatalogueEntry {
  std::string label;     // e.g. "A^3_1(10)"
  long long n = 0;
  HVector h;
  TVector t;
  FVector f{};
  std::string comments;
  bool has_vectors = false;
  std::string alias;     // "A4", "D4", ... for reflection arrangements, else empty

  ArrangementData data() const { return {n, h, t, f}; }
};

const std::vector<CatalogueEntry>& catalogue();
/// Accepts labels and the aliases A4, D4, B4, F4, H4; throws UnknownLabel.
const CatalogueEntry& catalogue_entry(std::string_view label);

/**
 * Simple roots in root coordinates together with the bilinear form
 * <x, y> = x^T G y. The hyperplane orthogonal to a root a has normal G a.
 */
struct RootSystemSpec {
  std::string name;
  Field field = Field::rational;
  std::vector<Vector> simple_roots;
  Matrix gram;
};

/// "A4", "B4", "D4", "F4", "H4".
RootSystemSpec root_system(std::string_view name);

/// All root hyperplanes of the group generated by the simple reflections.
Arrangement reflection_closure(const RootSystemSpec& spec, std::size_t cap = 10000);

/// The 28 normals of A^3_1(28); A^3_1(27) uses the first 27.
std::vector<Vector> appendix_normals();

/// Labels with normal vectors, in table order.
std::vector<std::string> builtin_labels();

/// UnknownLabel for labels outside the table, NoVectorsAvailable for rows
/// without vectors.
Arrangement builtin(std::string_view label);

struct VerifyOptions {
  long long chamber_threshold = 32;  // enumerate chambers when n <= this
  unsigned threads = 0;
};

struct RowReport {
  std::string label;
  bool has_vectors = false;
  std::vector<CheckResult> checks;
  std::optional<ChamberSummary> chambers;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
};

RowReport verify_row(std::string_view label, const VerifyOptions& options = {});
std::vector<RowReport> verify_all(const VerifyOptions& options = {});

/// Every data-only check on a bare record. Rows of the table are simplicial
/// and irreducible by construction.
std::vector<CheckResult> data_checks(const ArrangementData& d, bool simplicial, bool irreducible);

}  // namespace arr4
