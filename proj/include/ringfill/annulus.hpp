#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ringfill/rational.hpp"
#include "ringfill/triangulation.hpp"

namespace ringfill {

/// Point of the auxiliary circle R/nZ, held exactly and reduced into [0, n).
class Phase {
 public:
  Phase() = default;
  Phase(const Rational& value, const Rational& circumference)
      : value_(mod(value, circumference)) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const Phase&, const Phase&) = default;

 private:
  Rational value_{0};
};

/// Shorter arc between a and b on the circle of circumference n.
Rational circ_dist(const Rational& a, const Rational& b, const Rational& n);
inline Rational circ_dist(const Phase& a, const Phase& b, const Rational& n) {
  return circ_dist(a.value(), b.value(), n);
}

/// Kind of the annulus between C_r and C_{r+1}; `cone` marks the innermost
/// cycle, which is closed by the apex.
enum class AnnulusKind { collar, equal, shrink, transition_equal, cone };

std::string_view to_string(AnnulusKind kind);

/// Cycle C_r together with the annulus that leaves it toward the centre.
struct LayerRecord {
  std::uint32_t r = 0;
  std::uint32_t length = 0;  // m_r
  Phase phase;               // alpha_r
  VertexId first = 0;        // vertex ids first .. first+length-1, cyclic order
  AnnulusKind kind = AnnulusKind::cone;
  /// b_r, the one-crossing drift bound of annulus r; absent for the cone.
  std::optional<Rational> drift_bound;
};

class LayerLedger {
 public:
  std::span<const LayerRecord> layers() const { return layers_; }
  const LayerRecord& operator[](std::size_t r) const { return layers_.at(r); }
  std::size_t size() const { return layers_.size(); }

  /// A_h = 2 * sum_{r<h} b_r.
  Rational accumulated_drift(std::size_t h) const;

 private:
  friend class ComplexBuilder;
  std::vector<LayerRecord> layers_;
};

/// Handle of a cycle inside a ComplexBuilder.
struct LayerHandle {
  std::uint32_t index = 0;
};

struct AnnulusResult {
  LayerHandle inner;
  std::size_t first_triangle = 0;
  std::size_t triangle_count = 0;
};

/// Under-construction concentric complex. Starts with the boundary cycle
/// C_0 = C_n at phase 0; annuli are appended toward the centre.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(std::uint32_t n);

  std::uint32_t boundary_length() const { return n_; }
  LayerHandle boundary() const { return {0}; }
  LayerHandle innermost() const { return {static_cast<std::uint32_t>(ledger_.layers_.size() - 1)}; }
  const LayerLedger& ledger() const { return ledger_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  /// Vertex i (taken mod m) of a cycle.
  VertexId vertex(LayerHandle layer, std::int64_t i) const;

  AnnulusResult add_equal_annulus(LayerHandle outer, AnnulusKind kind);
  AnnulusResult add_shrinking_annulus(LayerHandle outer, std::uint32_t inner_length);
  /// Closes `outer` with one apex vertex; returns the apex id.
  VertexId add_cone_cap(LayerHandle outer);

  /// Moves the vertex and triangle tables out; the ledger stays readable.
  Triangulation finish();

 private:
  LayerHandle new_layer(std::uint32_t length, const Rational& phase);
  void require_open(LayerHandle outer) const;

  std::uint32_t n_;
  Rational circumference_;
  LayerLedger ledger_;
  std::vector<VertexInfo> vertices_;
  std::vector<Triangle> triangles_;
  bool closed_ = false;
};

/// Equal-length annulus: new inner m-cycle at phase alpha + n/(2m) and the
/// 2m triangles (U_i, U_{i+1}, V_i), (U_{i+1}, V_i, V_{i+1}).
/// Throws std::invalid_argument if m < 3.
AnnulusResult build_equal_annulus(ComplexBuilder& builder, LayerHandle outer);

/// Staircase indices k_i = floor(M*i/m) for i = 0..m.
std::vector<std::uint32_t> staircase_steps(std::uint32_t m, std::uint32_t inner);

/// Shrinking annulus from the m-cycle `outer` to a new M-cycle with the same
/// phase, triangulated by the staircase; emits m + M triangles. M == m is
/// allowed and yields the staircase with every step incrementing.
/// Throws std::invalid_argument unless 3 <= M <= m.
AnnulusResult build_shrinking_annulus(ComplexBuilder& builder, LayerHandle outer, std::uint32_t inner);

}  // namespace ringfill
