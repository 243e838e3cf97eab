#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringfill/triangulation.hpp"

namespace ringfill {

/// Limits for exhaustive enumeration of disks bounded by a labeled C_n.
struct EnumerationBudget {
  std::uint32_t n = 3;
  std::uint32_t max_interior = 0;
  /// Disks with k interior vertices have n + 2k - 2 triangles; levels above
  /// the cap are skipped and reported as truncated.
  std::uint32_t max_triangles = 64;

  static constexpr std::uint32_t kMaxBoundary = 7;
  static constexpr std::uint32_t kMaxInterior = 4;

  /// Throws std::invalid_argument when outside the enumerable range.
  void check() const;
};

struct EnumerationStats {
  /// Distinct disks found per interior-vertex count k = 0..max_interior.
  std::vector<std::uint64_t> per_level;
  /// Candidates produced by the peeling search that were not simplicial disks.
  std::uint64_t rejected = 0;
  bool truncated = false;
  bool stopped_early = false;
};

/// Visitor returns false to stop the enumeration.
using FillingVisitor = std::function<bool(const Triangulation&, std::uint32_t interior)>;

/// Every triangulated disk with boundary exactly 0..n-1 and k interior
/// vertices, k = 0..max_interior in increasing order, each exactly once up to
/// relabeling of interior vertices. Interior vertices are labeled in the
/// order the peeling search meets them, which is the canonical labeling used
/// by canonical_code.
EnumerationStats enumerate_fillings(const EnumerationBudget& budget, const FillingVisitor& visit);

/// Same, restricted to exactly `interior` interior vertices.
EnumerationStats enumerate_level(std::uint32_t n, std::uint32_t interior, const FillingVisitor& visit);

/// Code invariant under relabeling of interior vertices (boundary labels are
/// kept). The complex must be a valid disk; throws std::invalid_argument
/// otherwise.
std::string canonical_code(const Triangulation& t);

struct OracleResult {
  std::uint32_t n = 0;
  /// Minimum |V| over isometric fillings within budget; empty means unknown.
  std::optional<std::uint32_t> min_vertices;
  std::optional<Triangulation> witness;
  /// True when a budget cap skipped a level that could hold a smaller filling.
  bool truncated = false;
  std::vector<std::uint64_t> fillings_per_level;
  std::vector<std::uint64_t> isometric_per_level;
};

/// Breadth-first over interior count, stopping at the first level that
/// contains an isometric filling.
OracleResult min_isometric_vertices(std::uint32_t n, const EnumerationBudget& budget);

/// Exact isometry check for small complexes (BFS from each boundary vertex).
bool is_isometric(const Triangulation& t);

}  // namespace ringfill
