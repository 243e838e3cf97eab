#include "ringfill/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "ringfill/verifier.hpp"

namespace ringfill {

void EnumerationBudget::check() const {
  if (n < 3 || n > kMaxBoundary) {
    throw std::invalid_argument("oracle boundary length must be in [3, " + std::to_string(kMaxBoundary) + "]");
  }
  if (max_interior > kMaxInterior) {
    throw std::invalid_argument("oracle interior budget must be at most " + std::to_string(kMaxInterior));
  }
}

namespace {

constexpr std::size_t kMaxVertices = EnumerationBudget::kMaxBoundary + EnumerationBudget::kMaxInterior;

struct Region {
  std::vector<VertexId> polygon;
  std::uint32_t budget = 0;
};

// Peels the triangle on the first polygon edge of the newest pending region.
// The apex is either a later polygon vertex (split in two) or a fresh
// interior vertex (polygon grows by one, budget shrinks by one).
class Peeler {
 public:
  Peeler(std::uint32_t n, std::uint32_t interior, const FillingVisitor& visit, EnumerationStats& stats)
      : n_(n), interior_(interior), visit_(visit), stats_(stats), next_label_(n) {
    Region outer;
    for (VertexId i = 0; i < n; ++i) outer.polygon.push_back(i);
    outer.budget = interior;
    pending_.push_back(std::move(outer));
  }

  void run() { step(); }

 private:
  bool on_cycle(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return b < n_ && (b == a + 1 || (a == 0 && b == n_ - 1));
  }

  bool add(VertexId a, VertexId b, VertexId c) {
    const std::array<std::pair<VertexId, VertexId>, 3> es{{{a, b}, {b, c}, {a, c}}};
    for (auto [u, v] : es) {
      const auto used = count_[u][v];
      if (used >= 2 || (used == 1 && on_cycle(u, v))) return false;
    }
    for (auto [u, v] : es) {
      ++count_[u][v];
      ++count_[v][u];
    }
    triangles_.emplace_back(a, b, c);
    return true;
  }

  void remove(VertexId a, VertexId b, VertexId c) {
    for (auto [u, v] : std::array<std::pair<VertexId, VertexId>, 3>{{{a, b}, {b, c}, {a, c}}}) {
      --count_[u][v];
      --count_[v][u];
    }
    triangles_.pop_back();
  }

  void emit() {
    Triangulation t = unlayered(n_, n_ + interior_, triangles_);
    if (!validate_disk(t).ok()) {
      ++stats_.rejected;
      return;
    }
    ++stats_.per_level[interior_];
    if (!visit_(t, interior_)) {
      stopped_ = true;
      stats_.stopped_early = true;
    }
  }

  void step() {
    if (stopped_) return;
    if (pending_.empty()) {
      if (next_label_ == n_ + interior_) emit();
      return;
    }
    Region region = std::move(pending_.back());
    pending_.pop_back();
    const auto& poly = region.polygon;
    const std::size_t len = poly.size();
    const VertexId p0 = poly[0];
    const VertexId p1 = poly[1];

    for (std::size_t j = 2; j < len && !stopped_; ++j) {
      if (!add(p0, p1, poly[j])) continue;
      Region a{{poly.begin() + 1, poly.begin() + static_cast<std::ptrdiff_t>(j) + 1}, 0};
      Region b{{poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end()}, 0};
      b.polygon.push_back(p0);
      for (std::uint32_t ka = 0; ka <= region.budget && !stopped_; ++ka) {
        const std::uint32_t kb = region.budget - ka;
        if ((a.polygon.size() < 3 && ka > 0) || (b.polygon.size() < 3 && kb > 0)) continue;
        a.budget = ka;
        b.budget = kb;
        std::size_t pushed = 0;
        if (b.polygon.size() >= 3) {
          pending_.push_back(b);
          ++pushed;
        }
        if (a.polygon.size() >= 3) {
          pending_.push_back(a);
          ++pushed;
        }
        step();
        pending_.resize(pending_.size() - pushed);
      }
      remove(p0, p1, poly[j]);
    }

    if (region.budget > 0 && !stopped_) {
      const VertexId x = next_label_++;
      if (add(p0, p1, x)) {
        Region grown{{p0, x}, region.budget - 1};
        grown.polygon.insert(grown.polygon.end(), poly.begin() + 1, poly.end());
        pending_.push_back(std::move(grown));
        step();
        pending_.pop_back();
        remove(p0, p1, x);
      }
      --next_label_;
    }
    pending_.push_back(std::move(region));
  }

  std::uint32_t n_;
  std::uint32_t interior_;
  const FillingVisitor& visit_;
  EnumerationStats& stats_;
  VertexId next_label_;
  bool stopped_ = false;
  std::vector<Region> pending_;
  std::vector<Triangle> triangles_;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> count_{};
};

}  // namespace

EnumerationStats enumerate_level(std::uint32_t n, std::uint32_t interior, const FillingVisitor& visit) {
  EnumerationBudget{n, interior}.check();
  EnumerationStats stats;
  stats.per_level.assign(interior + 1, 0);
  Peeler(n, interior, visit, stats).run();
  return stats;
}

EnumerationStats enumerate_fillings(const EnumerationBudget& budget, const FillingVisitor& visit) {
  budget.check();
  EnumerationStats stats;
  stats.per_level.assign(budget.max_interior + 1, 0);
  for (std::uint32_t k = 0; k <= budget.max_interior; ++k) {
    if (budget.n + 2 * k - 2 > budget.max_triangles) {
      stats.truncated = true;
      break;
    }
    const auto level = enumerate_level(budget.n, k, visit);
    stats.per_level[k] = level.per_level[k];
    stats.rejected += level.rejected;
    if (level.stopped_early) {
      stats.stopped_early = true;
      break;
    }
  }
  return stats;
}

std::string canonical_code(const Triangulation& t) {
  if (!validate_disk(t).ok()) throw std::invalid_argument("canonical_code needs a valid disk");
  const std::uint32_t n = t.boundary_length();
  const auto tris = t.triangles();

  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> by_edge;
  for (std::size_t k = 0; k < tris.size(); ++k) {
    const auto s = tris[k].sorted();
    by_edge[{s[0], s[1]}].push_back(k);
    by_edge[{s[1], s[2]}].push_back(k);
    by_edge[{s[0], s[2]}].push_back(k);
  }
  std::vector<bool> used(tris.size(), false);
  std::vector<std::int64_t> label(t.vertex_count(), -1);
  for (VertexId i = 0; i < n; ++i) label[i] = i;
  std::int64_t next_label = n;

  std::vector<std::vector<VertexId>> pending;
  {
    std::vector<VertexId> outer(n);
    for (VertexId i = 0; i < n; ++i) outer[i] = i;
    pending.push_back(std::move(outer));
  }
  std::vector<std::array<std::int64_t, 3>> relabeled;
  while (!pending.empty()) {
    const auto poly = std::move(pending.back());
    pending.pop_back();
    const VertexId p0 = poly[0];
    const VertexId p1 = poly[1];
    const auto& candidates = by_edge.at({std::min(p0, p1), std::max(p0, p1)});
    const auto it = std::find_if(candidates.begin(), candidates.end(), [&](std::size_t k) { return !used[k]; });
    if (it == candidates.end()) throw std::logic_error("canonical_code: peeling ran out of triangles");
    used[*it] = true;
    const auto& tri = tris[*it];
    VertexId apex = tri.v[0];
    for (VertexId x : tri.v) {
      if (x != p0 && x != p1) apex = x;
    }
    const auto pos = std::find(poly.begin(), poly.end(), apex);
    if (pos != poly.end()) {
      std::vector<VertexId> a(poly.begin() + 1, pos + 1);
      std::vector<VertexId> b(pos, poly.end());
      b.push_back(p0);
      if (b.size() >= 3) pending.push_back(std::move(b));
      if (a.size() >= 3) pending.push_back(std::move(a));
    } else {
      if (label[apex] >= 0) throw std::logic_error("canonical_code: interior vertex met twice");
      label[apex] = next_label++;
      std::vector<VertexId> grown{p0, apex};
      grown.insert(grown.end(), poly.begin() + 1, poly.end());
      pending.push_back(std::move(grown));
    }
    std::array<std::int64_t, 3> r{label[p0], label[p1], label[apex]};
    std::sort(r.begin(), r.end());
    relabeled.push_back(r);
  }
  std::sort(relabeled.begin(), relabeled.end());
  std::string code = std::to_string(n) + ":";
  for (const auto& r : relabeled) {
    code += std::to_string(r[0]) + "." + std::to_string(r[1]) + "." + std::to_string(r[2]) + ";";
  }
  return code;
}

bool is_isometric(const Triangulation& t) {
  const SkeletonGraph g(t);
  const std::uint32_t n = t.boundary_length();
  for (VertexId x = 0; x < n; ++x) {
    const auto d = bfs_distances(g, x);
    for (VertexId y = x + 1; y < n; ++y) {
      if (d[y] != cycle_distance(n, x, y)) return false;
    }
  }
  return true;
}

OracleResult min_isometric_vertices(std::uint32_t n, const EnumerationBudget& budget) {
  EnumerationBudget b = budget;
  b.n = n;
  b.check();
  OracleResult result;
  result.n = n;
  for (std::uint32_t k = 0; k <= b.max_interior; ++k) {
    if (n + 2 * k - 2 > b.max_triangles) {
      result.truncated = true;
      break;
    }
    std::uint64_t isometric = 0;
    const auto stats = enumerate_level(n, k, [&](const Triangulation& t, std::uint32_t) {
      if (!is_isometric(t)) return true;
      ++isometric;
      result.witness = t;
      return false;
    });
    result.fillings_per_level.push_back(stats.per_level[k]);
    result.isometric_per_level.push_back(isometric);
    if (isometric > 0) {
      result.min_vertices = n + k;
      break;
    }
  }
  return result;
}

}  // namespace ringfill
