#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringfill/rational.hpp"

namespace ringfill {

/// Dense vertex index. Boundary vertices of C_n are 0..n-1 in cyclic order.
using VertexId = std::uint32_t;

/// A 2-simplex stored with its smallest vertex first, orientation kept.
struct Triangle {
  std::array<VertexId, 3> v{};

  Triangle() = default;
  Triangle(VertexId a, VertexId b, VertexId c);

  bool degenerate() const { return v[0] == v[1] || v[1] == v[2] || v[0] == v[2]; }
  bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }
  /// Vertex set in ascending order; equal for the two orientations.
  std::array<VertexId, 3> sorted() const;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Undirected edge with u < v and the number of triangles that contain it.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::uint32_t incidence = 0;
};

/// Position of a vertex in the concentric layer structure. Complexes that
/// carry no layering put boundary vertices in layer 0 and the rest in layer 1.
struct VertexInfo {
  std::uint32_t layer = 0;
  std::uint32_t index_in_layer = 0;
};

/// One cycle C_r of the construction (or the apex, or an unlayered bucket).
/// When `phase` is set, vertex i of the layer sits at phase + n*i/size mod n
/// on the auxiliary circle of circumference n.
struct LayerInfo {
  std::uint32_t size = 0;
  std::optional<Rational> phase;
};

/// Immutable abstract 2-complex with a distinguished boundary length n.
/// Derived edge incidences are computed once at construction.
class Triangulation {
 public:
  Triangulation(std::uint32_t n, std::vector<VertexInfo> vertices, std::vector<LayerInfo> layers,
                std::vector<Triangle> triangles);

  std::uint32_t boundary_length() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const VertexInfo> vertices() const { return vertices_; }
  std::span<const LayerInfo> layers() const { return layers_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  /// Sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }

  const VertexInfo& vertex(VertexId v) const { return vertices_.at(v); }

  /// Auxiliary circular coordinate, if the vertex lies on a phased cycle.
  std::optional<Rational> theta(VertexId v) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b);

 private:
  std::uint32_t n_;
  std::vector<VertexInfo> vertices_;
  std::vector<LayerInfo> layers_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
};

/// Plain disk fixtures used by tests, the oracle and the CLI.
Triangulation single_triangle();
/// Wheel: boundary 0..n-1 plus apex n, triangles (n, i, i+1).
Triangulation cone_over_cycle(std::uint32_t n);
/// Builds an unlayered complex: vertices 0..n-1 in layer 0 with phase 0,
/// the remaining vertex_count-n in layer 1 without phase.
Triangulation unlayered(std::uint32_t n, std::size_t vertex_count, std::vector<Triangle> triangles);

enum class DiskDefect {
  empty,
  vertex_out_of_range,
  degenerate_triangle,
  repeated_triangle,
  edge_overused,
  stray_boundary_edge,
  missing_boundary_edge,
  isolated_vertex,
  disconnected,
  euler_characteristic,
  bad_link,
};

std::string_view to_string(DiskDefect d);

struct DiskIssue {
  DiskDefect kind;
  std::vector<std::int64_t> witness;  // vertex ids, or (u, v) for edges
  std::string message;
};

/// Every failed disk invariant, each with a concrete witness.
struct ValidationReport {
  std::vector<DiskIssue> issues;
  std::int64_t euler_characteristic = 0;
  std::size_t boundary_edges = 0;
  std::size_t interior_edges = 0;

  bool ok() const { return issues.empty(); }
  bool has(DiskDefect kind) const;
};

/// Checks that t is a triangulated disk whose boundary is exactly the n-cycle
/// on 0..n-1. Never throws; all problems are collected in the report.
ValidationReport validate_disk(const Triangulation& t);

/// Boundary vertices in cyclic order starting 0, 1, ...
/// Throws std::runtime_error if the 1-incidence edges are not a single n-cycle.
std::vector<VertexId> boundary_cycle(const Triangulation& t);

/// Compressed adjacency of the 1-skeleton.
class SkeletonGraph {
 public:
  explicit SkeletonGraph(const Triangulation& t);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> targets_;
};

inline SkeletonGraph skeleton_graph(const Triangulation& t) { return SkeletonGraph(t); }

/// Cycle distance on C_n between boundary ids.
inline std::uint32_t cycle_distance(std::uint32_t n, VertexId x, VertexId y) {
  const std::uint32_t d = x > y ? x - y : y - x;
  return d < n - d ? d : n - d;
}

}  // namespace ringfill
