#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ringfill/annulus.hpp"
#include "ringfill/filling.hpp"
#include "ringfill/rational.hpp"
#include "ringfill/triangulation.hpp"

namespace ringfill {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Worker count: explicit value if positive, else $RINGFILL_JOBS, else the
/// hardware concurrency.
unsigned resolve_jobs(int requested);

/// Unweighted shortest-path distances from `source`.
/// Throws std::runtime_error if some vertex is unreachable.
std::vector<std::uint32_t> bfs_distances(const SkeletonGraph& g, VertexId source);

/// Shortest path from `from` to `to` as a vertex list (both ends included).
std::vector<VertexId> shortest_path(const SkeletonGraph& g, VertexId from, VertexId to);

/// Row-major n x n table of d_K between boundary vertices.
class BoundaryDistances {
 public:
  BoundaryDistances(const SkeletonGraph& g, std::uint32_t n, unsigned jobs);

  std::uint32_t n() const { return n_; }
  std::uint32_t operator()(VertexId x, VertexId y) const { return d_[std::size_t{x} * n_ + y]; }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> d_;
};

struct BoundaryPair {
  VertexId x = 0;
  VertexId y = 0;
  std::uint32_t d_k = 0;
  std::uint32_t d_c = 0;
};

struct VerificationReport {
  std::uint32_t n = 0;
  /// delta = min over boundary pairs of d_K / d_C, reduced.
  std::int64_t delta_num = 1;
  std::int64_t delta_den = 1;
  bool is_isometric = true;
  /// First pair in (x, y) order attaining delta.
  BoundaryPair worst_pair;
  /// Shortest path realizing worst_pair when delta < 1.
  std::vector<VertexId> witness;
  std::optional<double> eps_n;

  double delta() const { return static_cast<double>(delta_num) / static_cast<double>(delta_den); }
};

struct VerifyOptions {
  unsigned jobs = 1;
};

/// Exact boundary metric check by BFS from every boundary vertex.
/// Throws std::invalid_argument if t is not a valid disk.
VerificationReport verify_filling(const Triangulation& t, const VerifyOptions& options = {});
/// Same, reusing a precomputed distance table.
VerificationReport summarize(const Triangulation& t, const SkeletonGraph& g, const BoundaryDistances& d);

struct AnnulusAudit {
  std::uint32_t r = 0;
  AnnulusKind kind = AnnulusKind::cone;
  Rational bound;           // b_r
  Rational max_displacement;
  Rational min_displacement;
  std::size_t slanted_edges = 0;
  bool ok = true;
};

/// Per-annulus slanted-edge displacement against b_r, in exact arithmetic.
/// Equal-length annuli (collar, equal, transition-equal) must attain b_r on
/// every slanted edge; shrinking annuli must stay at or below it.
struct DriftAudit {
  std::vector<AnnulusAudit> annuli;
  std::size_t violations = 0;
  bool ok() const { return violations == 0; }
};

DriftAudit drift_audit(const BuildResult& b);

/// Lower bound on d_K(x, y) from the path drift estimate: the minimum over
/// deepest layers h of 2h + (m_h/n)(L - A_h)_+, and over paths through the
/// apex of 2w + 2 sum_b L_b, rounded up.
class DriftLowerBound {
 public:
  explicit DriftLowerBound(const BuildResult& b);

  std::int64_t operator()(VertexId x, VertexId y) const { return by_separation_.at(cycle_distance(n_, x, y)); }
  std::int64_t for_separation(std::uint32_t L) const { return by_separation_.at(L); }
  /// Exact (unrounded) bound for boundary separation L.
  Rational exact(std::uint32_t L) const;

 private:
  std::uint32_t n_;
  std::vector<Rational> accumulated_;  // A_h
  std::vector<std::uint32_t> lengths_;  // m_h
  Rational cone_bound_;
  std::vector<std::int64_t> by_separation_;
};

/// Empirical size of the uniform step-profile discrepancies over the layers
/// of the main region (collar exit through innermost cycle).
struct UniformEstimates {
  double eps_n = 0;
  double depth_term = 0;   // max |2h - 2 rho n - 2 tau_h n| / n
  double length_term = 0;  // max |m_h / n - q(tau_h)|
  double drift_term = 0;   // max |A_h - rho n - n I(tau_h)| / n
  std::uint32_t worst_layer = 0;
};

UniformEstimates uniform_estimates(const BuildResult& b);

}  // namespace ringfill
