#include "ringfill/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "ringfill/profile.hpp"

namespace ringfill {

unsigned resolve_jobs(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("RINGFILL_JOBS")) {
    const int value = std::atoi(env);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void bfs_into(const SkeletonGraph& g, VertexId source, std::vector<std::uint32_t>& dist,
              std::vector<VertexId>& queue) {
  dist.assign(g.vertex_count(), kUnreachable);
  queue.resize(g.vertex_count());
  std::size_t head = 0;
  std::size_t tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const VertexId u = queue[head++];
    const std::uint32_t next = dist[u] + 1;
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = next;
        queue[tail++] = v;
      }
    }
  }
  if (tail != g.vertex_count()) {
    throw std::runtime_error("skeleton is disconnected: " + std::to_string(g.vertex_count() - tail) +
                             " vertices unreachable from " + std::to_string(source));
  }
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const SkeletonGraph& g, VertexId source) {
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  bfs_into(g, source, dist, queue);
  return dist;
}

std::vector<VertexId> shortest_path(const SkeletonGraph& g, VertexId from, VertexId to) {
  const auto dist = bfs_distances(g, to);
  std::vector<VertexId> path{from};
  VertexId cur = from;
  while (cur != to) {
    for (VertexId v : g.neighbors(cur)) {
      if (dist[v] + 1 == dist[cur]) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

BoundaryDistances::BoundaryDistances(const SkeletonGraph& g, std::uint32_t n, unsigned jobs)
    : n_(n), d_(std::size_t{n} * n) {
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto work = [&] {
    std::vector<std::uint32_t> dist;
    std::vector<VertexId> queue;
    try {
      for (std::uint32_t x = next++; x < n && !failed; x = next++) {
        bfs_into(g, x, dist, queue);
        std::copy_n(dist.begin(), n, d_.begin() + std::size_t{x} * n);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  jobs = std::clamp(jobs, 1u, n);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

VerificationReport summarize(const Triangulation& t, const SkeletonGraph& g, const BoundaryDistances& d) {
  const std::uint32_t n = t.boundary_length();
  VerificationReport report;
  report.n = n;
  report.worst_pair = {0, 1, d(0, 1), 1};
  std::int64_t best_num = d(0, 1);
  std::int64_t best_den = 1;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const std::int64_t dk = d(x, y);
      const std::int64_t dc = cycle_distance(n, x, y);
      if (dk * best_den < best_num * dc) {
        best_num = dk;
        best_den = dc;
        report.worst_pair = {x, y, static_cast<std::uint32_t>(dk), static_cast<std::uint32_t>(dc)};
      }
    }
  }
  const std::int64_t g_common = std::gcd(best_num, best_den);
  report.delta_num = best_num / g_common;
  report.delta_den = best_den / g_common;
  report.is_isometric = report.delta_num >= report.delta_den;
  if (!report.is_isometric) report.witness = shortest_path(g, report.worst_pair.x, report.worst_pair.y);
  return report;
}

VerificationReport verify_filling(const Triangulation& t, const VerifyOptions& options) {
  const auto validation = validate_disk(t);
  if (!validation.ok()) {
    throw std::invalid_argument("not a triangulated disk: " + validation.issues.front().message);
  }
  const SkeletonGraph g(t);
  const BoundaryDistances d(g, t.boundary_length(), options.jobs);
  return summarize(t, g, d);
}

DriftAudit drift_audit(const BuildResult& b) {
  const auto& t = b.complex;
  const auto& ledger = b.ledger;
  const auto layers = t.layers();
  const std::uint32_t n = t.boundary_length();
  const Rational circumference(n);
  const std::uint32_t cycles = static_cast<std::uint32_t>(ledger.size());

  // Within annulus r every displacement is a multiple of 1/D, D = 2 m m',
  // once the phase offset between the two cycles is known: track them as
  // exact integers scaled by D.
  struct Scaled {
    std::int64_t D = 0;
    std::int64_t offset = 0;  // (alpha_{r+1} - alpha_r mod n) * D
    std::int64_t max = 0;
    std::int64_t min = 0;
  };
  DriftAudit audit;
  audit.annuli.resize(cycles - 1);
  std::vector<Scaled> scaled(cycles - 1);
  for (std::uint32_t r = 0; r + 1 < cycles; ++r) {
    auto& a = audit.annuli[r];
    a.r = r;
    a.kind = ledger[r].kind;
    a.bound = *ledger[r].drift_bound;
    const std::int64_t m = layers[r].size;
    const std::int64_t inner = layers[r + 1].size;
    const Rational offset = mod(*layers[r + 1].phase - *layers[r].phase, circumference) * (2 * m * inner);
    if (offset.get_den() != 1 || 2 * m * inner > (std::int64_t{1} << 40) || n > (1u << 21)) {
      throw std::logic_error("drift audit: annulus " + std::to_string(r) + " phases off the 1/(2 m m') grid");
    }
    scaled[r].D = 2 * m * inner;
    scaled[r].offset = to_int64(offset.get_num());
  }

  for (const auto& e : t.edges()) {
    const auto& vu = t.vertex(e.u);
    const auto& vv = t.vertex(e.v);
    if (vu.layer == vv.layer || vu.layer >= cycles || vv.layer >= cycles) continue;  // horizontal or cone edge
    if ((vu.layer > vv.layer ? vu.layer - vv.layer : vv.layer - vu.layer) != 1) {
      throw std::logic_error("edge skips a layer: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    const auto& outer = vu.layer < vv.layer ? vu : vv;
    const auto& inner = vu.layer < vv.layer ? vv : vu;
    const std::uint32_t r = outer.layer;
    auto& s = scaled[r];
    const std::int64_t m = layers[r].size;
    const std::int64_t m2 = layers[r + 1].size;
    // D (theta_inner - theta_outer) = offset + 2 n (j m - i m'), reduced mod n D.
    const std::int64_t period = std::int64_t{n} * s.D;
    std::int64_t x = (s.offset + 2 * std::int64_t{n} * (inner.index_in_layer * m - outer.index_in_layer * m2)) % period;
    if (x < 0) x += period;
    const std::int64_t disp = std::min(x, period - x);
    auto& a = audit.annuli[r];
    if (a.slanted_edges == 0 || disp > s.max) s.max = disp;
    if (a.slanted_edges == 0 || disp < s.min) s.min = disp;
    ++a.slanted_edges;
  }
  for (std::uint32_t r = 0; r + 1 < cycles; ++r) {
    auto& a = audit.annuli[r];
    a.max_displacement = Rational(scaled[r].max, scaled[r].D);
    a.min_displacement = Rational(scaled[r].min, scaled[r].D);
    a.max_displacement.canonicalize();
    a.min_displacement.canonicalize();
    const bool equal_length = a.kind != AnnulusKind::shrink;
    a.ok = a.slanted_edges > 0 && a.max_displacement <= a.bound &&
           (!equal_length || a.min_displacement == a.bound);
    if (!a.ok) ++audit.violations;
  }
  return audit;
}

DriftLowerBound::DriftLowerBound(const BuildResult& b) : n_(b.schedule.n) {
  const auto& ledger = b.ledger;
  Rational acc = 0;
  for (std::size_t h = 0; h < ledger.size(); ++h) {
    accumulated_.push_back(acc);
    lengths_.push_back(ledger[h].length);
    if (ledger[h].drift_bound) acc += 2 * *ledger[h].drift_bound;
  }
  std::int64_t block_total = 0;
  for (auto L : b.schedule.block_layers) block_total += L;
  cone_bound_ = 2 * Rational(b.schedule.collar_width) + 2 * Rational(block_total);
  for (std::uint32_t L = 0; L <= n_ / 2; ++L) by_separation_.push_back(to_int64(ceil(exact(L))));
}

Rational DriftLowerBound::exact(std::uint32_t L) const {
  Rational best = cone_bound_;
  const Rational sep(L);
  for (std::size_t h = 0; h < accumulated_.size(); ++h) {
    Rational slack = sep - accumulated_[h];
    if (sgn(slack) < 0) slack = 0;
    Rational value = 2 * Rational(h) + Rational(lengths_[h]) / n_ * slack;
    if (value < best) best = std::move(value);
  }
  return best;
}

UniformEstimates uniform_estimates(const BuildResult& b) {
  const auto& ledger = b.ledger;
  const double n = b.schedule.n;
  const double rho = to_double(b.schedule.rho);
  const std::uint32_t w = b.schedule.collar_width;

  UniformEstimates out;
  Rational acc = ledger.accumulated_drift(w);
  std::uint64_t equal_passed = 0;
  for (std::uint32_t h = w; h < ledger.size(); ++h) {
    if (h > w) {
      const auto& prev = ledger[h - 1];
      acc += 2 * *prev.drift_bound;
      if (prev.kind == AnnulusKind::equal) ++equal_passed;
    }
    const double tau = static_cast<double>(equal_passed) / n;
    const double depth = std::abs(2.0 * h - 2.0 * rho * n - 2.0 * tau * n) / n;
    const double length = std::abs(ledger[h].length / n - profile::q(tau));
    const double drift = std::abs(acc.get_d() - rho * n - n * profile::I(tau)) / n;
    const double worst = std::max({depth, length, drift});
    out.depth_term = std::max(out.depth_term, depth);
    out.length_term = std::max(out.length_term, length);
    out.drift_term = std::max(out.drift_term, drift);
    if (worst > out.eps_n) {
      out.eps_n = worst;
      out.worst_layer = h;
    }
  }
  return out;
}

}  // namespace ringfill
