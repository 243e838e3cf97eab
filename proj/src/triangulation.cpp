#include "ringfill/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ringfill {

Triangle::Triangle(VertexId a, VertexId b, VertexId c) : v{a, b, c} {
  // Rotate the smallest id to the front; cyclic order is unchanged.
  if (b < a && b <= c) {
    v = {b, c, a};
  } else if (c < a && c < b) {
    v = {c, a, b};
  }
}

std::array<VertexId, 3> Triangle::sorted() const {
  auto s = v;
  std::sort(s.begin(), s.end());
  return s;
}

Triangulation::Triangulation(std::uint32_t n, std::vector<VertexInfo> vertices,
                             std::vector<LayerInfo> layers, std::vector<Triangle> triangles)
    : n_(n), vertices_(std::move(vertices)), layers_(std::move(layers)), triangles_(std::move(triangles)) {
  if (n_ < 3) throw std::invalid_argument("boundary length must be at least 3");
  if (vertices_.size() < n_) throw std::invalid_argument("fewer vertices than boundary length");
  for (const auto& info : vertices_) {
    if (info.layer >= layers_.size()) throw std::invalid_argument("vertex refers to an unknown layer");
  }

  std::vector<std::pair<VertexId, VertexId>> half;
  half.reserve(triangles_.size() * 3);
  for (const auto& tri : triangles_) {
    if (tri.degenerate()) continue;
    for (int k = 0; k < 3; ++k) {
      VertexId a = tri.v[k];
      VertexId b = tri.v[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      half.emplace_back(a, b);
    }
  }
  std::sort(half.begin(), half.end());
  for (std::size_t i = 0; i < half.size();) {
    std::size_t j = i;
    while (j < half.size() && half[j] == half[i]) ++j;
    edges_.push_back({half[i].first, half[i].second, static_cast<std::uint32_t>(j - i)});
    i = j;
  }
}

std::optional<Rational> Triangulation::theta(VertexId v) const {
  const auto& info = vertices_.at(v);
  const auto& layer = layers_[info.layer];
  if (!layer.phase) return std::nullopt;
  const Rational n(n_);
  return mod(*layer.phase + n * info.index_in_layer / layer.size, n);
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  if (a.n_ != b.n_ || a.triangles_ != b.triangles_ || a.vertices_.size() != b.vertices_.size() ||
      a.layers_.size() != b.layers_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (a.vertices_[i].layer != b.vertices_[i].layer ||
        a.vertices_[i].index_in_layer != b.vertices_[i].index_in_layer) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.layers_.size(); ++i) {
    if (a.layers_[i].size != b.layers_[i].size || a.layers_[i].phase != b.layers_[i].phase) return false;
  }
  return true;
}

Triangulation single_triangle() { return unlayered(3, 3, {Triangle(0, 1, 2)}); }

Triangulation cone_over_cycle(std::uint32_t n) {
  std::vector<Triangle> tris;
  for (std::uint32_t i = 0; i < n; ++i) tris.emplace_back(n, i, (i + 1) % n);
  return unlayered(n, n + 1, std::move(tris));
}

Triangulation unlayered(std::uint32_t n, std::size_t vertex_count, std::vector<Triangle> triangles) {
  std::vector<VertexInfo> vertices(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    vertices[i] = i < n ? VertexInfo{0, static_cast<std::uint32_t>(i)}
                        : VertexInfo{1, static_cast<std::uint32_t>(i - n)};
  }
  std::vector<LayerInfo> layers{{n, Rational(0)}};
  if (vertex_count > n) layers.push_back({static_cast<std::uint32_t>(vertex_count - n), std::nullopt});
  return Triangulation(n, std::move(vertices), std::move(layers), std::move(triangles));
}

std::string_view to_string(DiskDefect d) {
  switch (d) {
    case DiskDefect::empty: return "empty";
    case DiskDefect::vertex_out_of_range: return "vertex_out_of_range";
    case DiskDefect::degenerate_triangle: return "degenerate_triangle";
    case DiskDefect::repeated_triangle: return "repeated_triangle";
    case DiskDefect::edge_overused: return "edge_overused";
    case DiskDefect::stray_boundary_edge: return "stray_boundary_edge";
    case DiskDefect::missing_boundary_edge: return "missing_boundary_edge";
    case DiskDefect::isolated_vertex: return "isolated_vertex";
    case DiskDefect::disconnected: return "disconnected";
    case DiskDefect::euler_characteristic: return "euler_characteristic";
    case DiskDefect::bad_link: return "bad_link";
  }
  return "unknown";
}

bool ValidationReport::has(DiskDefect kind) const {
  return std::any_of(issues.begin(), issues.end(), [&](const DiskIssue& i) { return i.kind == kind; });
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::string edge_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Link of a vertex: path if on the boundary, cycle otherwise.
std::optional<std::string> check_link(VertexId v, bool on_boundary,
                                      std::vector<std::pair<VertexId, VertexId>>& link) {
  std::vector<VertexId> verts;
  for (auto [a, b] : link) {
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const auto local = [&](VertexId x) {
    return static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  std::vector<int> degree(verts.size(), 0);
  UnionFind uf(verts.size());
  std::size_t components = verts.size();
  for (auto [a, b] : link) {
    const auto la = local(a);
    const auto lb = local(b);
    ++degree[la];
    ++degree[lb];
    if (uf.unite(la, lb)) --components;
  }
  const auto ends = std::count(degree.begin(), degree.end(), 1);
  const bool degrees_ok = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 1 || d == 2; });
  if (components != 1 || !degrees_ok) {
    return "link of vertex " + std::to_string(v) + " is not a single path or cycle";
  }
  if (on_boundary && ends != 2) return "link of boundary vertex " + std::to_string(v) + " is not a path";
  if (!on_boundary && ends != 0) return "link of interior vertex " + std::to_string(v) + " is not a cycle";
  return std::nullopt;
}

}  // namespace

ValidationReport validate_disk(const Triangulation& t) {
  ValidationReport report;
  const auto add = [&](DiskDefect kind, std::vector<std::int64_t> witness, std::string message) {
    report.issues.push_back({kind, std::move(witness), std::move(message)});
  };
  const auto tris = t.triangles();
  const std::size_t V = t.vertex_count();
  const std::uint32_t n = t.boundary_length();

  if (tris.empty()) {
    add(DiskDefect::empty, {}, "no triangles");
    return report;
  }
  bool ids_ok = true;
  for (const auto& tri : tris) {
    for (VertexId x : tri.v) {
      if (x >= V) {
        add(DiskDefect::vertex_out_of_range, {x}, "vertex id " + std::to_string(x) + " out of range");
        ids_ok = false;
      }
    }
  }
  if (!ids_ok) return report;

  std::vector<std::array<VertexId, 3>> keys;
  keys.reserve(tris.size());
  for (const auto& tri : tris) {
    if (tri.degenerate()) {
      add(DiskDefect::degenerate_triangle, {tri.v[0], tri.v[1], tri.v[2]}, "degenerate triangle");
    } else {
      keys.push_back(tri.sorted());
    }
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i] == keys[i - 1] && (i == 1 || keys[i - 1] != keys[i - 2])) {
      add(DiskDefect::repeated_triangle, {keys[i][0], keys[i][1], keys[i][2]}, "triangle occurs more than once");
    }
  }

  UnionFind components(V);
  std::size_t component_count = V;
  for (const auto& e : t.edges()) {
    if (components.unite(e.u, e.v)) --component_count;
    if (e.incidence >= 3) {
      add(DiskDefect::edge_overused, {e.u, e.v},
          "edge " + edge_text(e.u, e.v) + " lies in " + std::to_string(e.incidence) + " triangles");
    } else if (e.incidence == 2) {
      ++report.interior_edges;
    } else {
      ++report.boundary_edges;
      const bool on_cycle = e.v < n && (e.v == e.u + 1 || (e.u == 0 && e.v == n - 1));
      if (!on_cycle) {
        add(DiskDefect::stray_boundary_edge, {e.u, e.v},
            "edge " + edge_text(e.u, e.v) + " has one incident triangle but is not on C_n");
      }
    }
  }
  const auto edges = t.edges();
  for (VertexId i = 0; i < n; ++i) {
    VertexId a = i;
    VertexId b = (i + 1) % n;
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                               [](const Edge& e, const std::pair<VertexId, VertexId>& k) {
                                 return std::pair{e.u, e.v} < k;
                               });
    if (it == edges.end() || it->u != a || it->v != b || it->incidence != 1) {
      add(DiskDefect::missing_boundary_edge, {a, b},
          "cycle edge " + edge_text(a, b) + " is not a boundary edge of the complex");
    }
  }

  // Vertex -> incident triangles.
  std::vector<std::uint32_t> offsets(V + 1, 0);
  for (const auto& tri : tris) {
    if (tri.degenerate()) continue;
    for (VertexId x : tri.v) ++offsets[x + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::uint32_t> incident(offsets.back());
  {
    auto cursor = offsets;
    for (std::uint32_t k = 0; k < tris.size(); ++k) {
      if (tris[k].degenerate()) continue;
      for (VertexId x : tris[k].v) incident[cursor[x]++] = k;
    }
  }

  bool isolated = false;
  std::vector<std::pair<VertexId, VertexId>> link;
  for (VertexId v = 0; v < V; ++v) {
    if (offsets[v] == offsets[v + 1]) {
      add(DiskDefect::isolated_vertex, {v}, "vertex " + std::to_string(v) + " lies in no triangle");
      isolated = true;
      continue;
    }
    link.clear();
    for (auto k = offsets[v]; k < offsets[v + 1]; ++k) {
      const auto& tri = tris[incident[k]];
      std::array<VertexId, 2> opp{};
      int j = 0;
      for (VertexId x : tri.v) {
        if (x != v) opp[j++] = x;
      }
      link.emplace_back(opp[0], opp[1]);
    }
    if (auto problem = check_link(v, v < n, link)) add(DiskDefect::bad_link, {v}, *problem);
  }

  if (component_count != 1 && !isolated) {
    add(DiskDefect::disconnected, {}, std::to_string(component_count) + " connected components");
  }
  report.euler_characteristic = static_cast<std::int64_t>(V) - static_cast<std::int64_t>(t.edge_count()) +
                                static_cast<std::int64_t>(tris.size());
  if (report.euler_characteristic != 1) {
    add(DiskDefect::euler_characteristic, {report.euler_characteristic},
        "V - E + F = " + std::to_string(report.euler_characteristic) + ", expected 1");
  }
  return report;
}

std::vector<VertexId> boundary_cycle(const Triangulation& t) {
  const std::uint32_t n = t.boundary_length();
  std::vector<std::vector<VertexId>> next(t.vertex_count());
  std::size_t boundary_edges = 0;
  for (const auto& e : t.edges()) {
    if (e.incidence != 1) continue;
    next[e.u].push_back(e.v);
    next[e.v].push_back(e.u);
    ++boundary_edges;
  }
  for (const auto& nb : next) {
    if (!nb.empty() && nb.size() != 2) throw std::runtime_error("boundary is not a single cycle: branching vertex");
  }
  if (next[0].size() != 2) throw std::runtime_error("boundary is not a single cycle: vertex 0 not on boundary");
  std::vector<VertexId> cycle{0};
  VertexId prev = 0;
  VertexId cur = std::find(next[0].begin(), next[0].end(), 1u) != next[0].end()
                     ? 1u
                     : std::min(next[0][0], next[0][1]);
  while (cur != 0) {
    cycle.push_back(cur);
    const VertexId step = next[cur][0] == prev ? next[cur][1] : next[cur][0];
    prev = cur;
    cur = step;
    if (cycle.size() > boundary_edges) break;
  }
  if (cycle.size() != boundary_edges || cycle.size() != n) {
    throw std::runtime_error("boundary is not a single cycle of length " + std::to_string(n));
  }
  return cycle;
}

SkeletonGraph::SkeletonGraph(const Triangulation& t) : offsets_(t.vertex_count() + 1, 0) {
  for (const auto& e : t.edges()) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(offsets_.back());
  auto cursor = offsets_;
  for (const auto& e : t.edges()) {
    targets_[cursor[e.u]++] = e.v;
    targets_[cursor[e.v]++] = e.u;
  }
}

}  // namespace ringfill
