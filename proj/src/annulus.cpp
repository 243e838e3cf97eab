#include "ringfill/annulus.hpp"

#include <stdexcept>
#include <string>

namespace ringfill {

Rational circ_dist(const Rational& a, const Rational& b, const Rational& n) {
  Rational d = mod(a - b, n);
  Rational other = n - d;
  return d <= other ? d : other;
}

std::string_view to_string(AnnulusKind kind) {
  switch (kind) {
    case AnnulusKind::collar: return "collar";
    case AnnulusKind::equal: return "equal";
    case AnnulusKind::shrink: return "shrink";
    case AnnulusKind::transition_equal: return "transition-equal";
    case AnnulusKind::cone: return "cone";
  }
  return "unknown";
}

Rational LayerLedger::accumulated_drift(std::size_t h) const {
  if (h >= layers_.size()) throw std::out_of_range("accumulated_drift: layer out of range");
  Rational sum = 0;
  for (std::size_t r = 0; r < h; ++r) sum += *layers_[r].drift_bound;
  return 2 * sum;
}

ComplexBuilder::ComplexBuilder(std::uint32_t n) : n_(n), circumference_(n) {
  if (n < 3) throw std::invalid_argument("boundary length must be at least 3");
  new_layer(n, Rational(0));
}

LayerHandle ComplexBuilder::new_layer(std::uint32_t length, const Rational& phase) {
  const auto r = static_cast<std::uint32_t>(ledger_.layers_.size());
  LayerRecord rec;
  rec.r = r;
  rec.length = length;
  rec.phase = Phase(phase, circumference_);
  rec.first = static_cast<VertexId>(vertices_.size());
  ledger_.layers_.push_back(std::move(rec));
  for (std::uint32_t i = 0; i < length; ++i) vertices_.push_back({r, i});
  return {r};
}

VertexId ComplexBuilder::vertex(LayerHandle layer, std::int64_t i) const {
  const auto& rec = ledger_.layers_.at(layer.index);
  const std::int64_t m = rec.length;
  return rec.first + static_cast<VertexId>(((i % m) + m) % m);
}

void ComplexBuilder::require_open(LayerHandle outer) const {
  if (closed_) throw std::logic_error("complex already closed by a cone cap");
  if (outer.index + 1 != ledger_.layers_.size()) {
    throw std::logic_error("annuli must be attached to the innermost cycle");
  }
}

AnnulusResult ComplexBuilder::add_equal_annulus(LayerHandle outer, AnnulusKind kind) {
  require_open(outer);
  const std::uint32_t m = ledger_.layers_[outer.index].length;
  if (m < 3) throw std::invalid_argument("equal-length annulus needs m >= 3");
  const Rational step = circumference_ / (2 * Rational(m));
  const Rational phase = ledger_.layers_[outer.index].phase.value() + step;

  const auto inner = new_layer(m, phase);
  auto& rec = ledger_.layers_[outer.index];
  rec.kind = kind;
  rec.drift_bound = step;

  AnnulusResult out{inner, triangles_.size(), 0};
  for (std::int64_t i = 0; i < m; ++i) {
    triangles_.emplace_back(vertex(outer, i), vertex(outer, i + 1), vertex(inner, i));
    triangles_.emplace_back(vertex(outer, i + 1), vertex(inner, i), vertex(inner, i + 1));
  }
  out.triangle_count = triangles_.size() - out.first_triangle;
  return out;
}

AnnulusResult ComplexBuilder::add_shrinking_annulus(LayerHandle outer, std::uint32_t inner_length) {
  require_open(outer);
  const std::uint32_t m = ledger_.layers_[outer.index].length;
  const std::uint32_t M = inner_length;
  if (M < 3 || M > m) {
    throw std::invalid_argument("shrinking annulus needs 3 <= M <= m (m=" + std::to_string(m) +
                                ", M=" + std::to_string(M) + ")");
  }
  const Rational phase = ledger_.layers_[outer.index].phase.value();
  const auto inner = new_layer(M, phase);
  auto& rec = ledger_.layers_[outer.index];
  rec.kind = AnnulusKind::shrink;
  rec.drift_bound = circumference_ / M;

  const auto k = staircase_steps(m, M);
  AnnulusResult out{inner, triangles_.size(), 0};
  for (std::int64_t i = 0; i < m; ++i) {
    if (k[i + 1] == k[i]) {
      triangles_.emplace_back(vertex(outer, i), vertex(outer, i + 1), vertex(inner, k[i]));
    } else {
      triangles_.emplace_back(vertex(outer, i), vertex(outer, i + 1), vertex(inner, k[i] + 1));
      triangles_.emplace_back(vertex(outer, i), vertex(inner, k[i]), vertex(inner, k[i] + 1));
    }
  }
  out.triangle_count = triangles_.size() - out.first_triangle;
  return out;
}

VertexId ComplexBuilder::add_cone_cap(LayerHandle outer) {
  require_open(outer);
  const std::uint32_t m = ledger_.layers_[outer.index].length;
  const auto r = static_cast<std::uint32_t>(ledger_.layers_.size());
  const auto apex = static_cast<VertexId>(vertices_.size());
  vertices_.push_back({r, 0});
  for (std::int64_t i = 0; i < m; ++i) {
    triangles_.emplace_back(apex, vertex(outer, i), vertex(outer, i + 1));
  }
  ledger_.layers_[outer.index].kind = AnnulusKind::cone;
  closed_ = true;
  return apex;
}

Triangulation ComplexBuilder::finish() {
  std::vector<LayerInfo> layers;
  layers.reserve(ledger_.layers_.size() + 1);
  for (const auto& rec : ledger_.layers_) layers.push_back({rec.length, rec.phase.value()});
  if (closed_) layers.push_back({1, std::nullopt});
  return Triangulation(n_, std::move(vertices_), std::move(layers), std::move(triangles_));
}

AnnulusResult build_equal_annulus(ComplexBuilder& builder, LayerHandle outer) {
  return builder.add_equal_annulus(outer, AnnulusKind::equal);
}

std::vector<std::uint32_t> staircase_steps(std::uint32_t m, std::uint32_t inner) {
  if (m == 0) throw std::invalid_argument("staircase needs m >= 1");
  std::vector<std::uint32_t> k(m + 1);
  for (std::uint64_t i = 0; i <= m; ++i) k[i] = static_cast<std::uint32_t>(inner * i / m);
  return k;
}

AnnulusResult build_shrinking_annulus(ComplexBuilder& builder, LayerHandle outer, std::uint32_t inner) {
  return builder.add_shrinking_annulus(outer, inner);
}

}  // namespace ringfill
