#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ringfill/filling.hpp"

using namespace ringfill;

TEST(Schedule, HundredAtEtaHalf) {
  const auto s = compute_schedule(Params::from_text(100, "0.3", "0.5"));
  EXPECT_EQ(s.t_eta, Rational(3, 16));
  EXPECT_EQ(s.block_count, 10u);
  EXPECT_EQ(s.block_width, Rational(3, 160));
  EXPECT_EQ(s.block_layers, std::vector<std::uint32_t>(10, 1));
  EXPECT_EQ(s.cycle_length[0], 100u);
  EXPECT_EQ(s.cycle_length[1], 97u);  // ceil(100 sqrt 0.925) = ceil(96.17)
  EXPECT_EQ(s.cycle_length.back(), 50u);
}

TEST(Schedule, CollarWidth) {
  EXPECT_EQ(compute_schedule(Params::from_text(100, "0.1", "0.25")).collar_width, 10u);
  EXPECT_EQ(compute_schedule(Params::from_text(101, "0.1", "0.25")).collar_width, 11u);
}

TEST(Schedule, LastCycleIsCeilNEta) {
  for (std::uint32_t n : {50u, 64u, 99u, 128u, 300u, 1000u}) {
    for (const char* eta : {"0.2", "0.25", "0.3", "0.45"}) {
      const auto p = Params::from_text(n, "0.25", eta);
      const auto s = compute_schedule(p);
      EXPECT_EQ(s.cycle_length.back(), ceil(Rational(p.eta * n)).get_ui())
          << "n=" << n << " eta=" << eta;
    }
  }
}

TEST(Schedule, Rejections) {
  EXPECT_THROW(compute_schedule(Params::from_text(100, "0.01", "0.2")), ScheduleError);
  EXPECT_THROW(compute_schedule(Params::from_text(10, "0.001", "0.01")), ScheduleError);
  EXPECT_THROW(compute_schedule(Params::from_text(100, "0", "0.2")), ScheduleError);
  EXPECT_THROW(compute_schedule(Params::from_text(100, "0.5", "1")), ScheduleError);
  try {
    compute_schedule(Params::from_text(100, "0.01", "0.2"));
  } catch (const ScheduleError& e) {
    EXPECT_NE(std::string(e.what()).find("eta^2 < rho"), std::string::npos);
  }
  try {
    compute_schedule(Params::from_text(10, "0.5", "0.1"));
    FAIL() << "n=10 should have too few layers per block";
  } catch (const ScheduleError& e) {
    EXPECT_NE(std::string(e.what()).find("L_b >= 1"), std::string::npos);
  }
}

TEST(Schedule, CycleLengthsAreExactCeilings) {
  // Floating oracle with a guard band; cases inside the band are skipped.
  const auto s = compute_schedule(Params::from_text(777, "0.1", "0.25"));
  for (std::size_t b = 0; b < s.cycle_length.size(); ++b) {
    const double x = 777.0 * std::sqrt(1.0 - 4.0 * s.block_start[b].get_d());
    if (std::abs(x - std::round(x)) < 1e-9) continue;
    EXPECT_EQ(s.cycle_length[b], static_cast<std::uint32_t>(std::ceil(x))) << "b=" << b;
  }
}

namespace {

// Independent tally from the schedule alone: cycles and annuli layer by layer.
std::pair<std::int64_t, std::int64_t> per_layer_counts(const Schedule& s) {
  std::vector<std::uint32_t> cycles{s.n};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> annuli;
  for (std::uint32_t i = 0; i < s.collar_width; ++i) {
    annuli.emplace_back(s.n, s.n);
    cycles.push_back(s.n);
  }
  for (std::uint32_t b = 0; b < s.block_count; ++b) {
    for (std::uint32_t i = 0; i < s.block_layers[b]; ++i) {
      annuli.emplace_back(s.cycle_length[b], s.cycle_length[b]);
      cycles.push_back(s.cycle_length[b]);
    }
    annuli.emplace_back(s.cycle_length[b], s.cycle_length[b + 1]);
    cycles.push_back(s.cycle_length[b + 1]);
  }
  std::int64_t v = 1;
  for (auto m : cycles) v += m;
  std::int64_t f = cycles.back();
  for (auto [m, M] : annuli) f += m + M;  // 2m when equal, m + M when shrinking
  return {v, f};
}

}  // namespace

TEST(BuildFilling, CountsMatchIndependentTally) {
  for (std::uint32_t n : {64u, 100u, 128u, 200u}) {
    const auto b = build_filling(Params::from_text(n, "0.1", "0.25"));
    const auto [v, f] = per_layer_counts(b.schedule);
    EXPECT_EQ(static_cast<std::int64_t>(b.complex.vertex_count()), v);
    EXPECT_EQ(static_cast<std::int64_t>(b.complex.triangle_count()), f);
    EXPECT_EQ(b.predicted_vertex_count, v);
    EXPECT_EQ(b.predicted_triangle_count, f);
    EXPECT_EQ(b.apex, b.complex.vertex_count() - 1);
  }
}

TEST(BuildFilling, LedgerFollowsPhaseRecursion) {
  const auto b = build_filling(Params::from_text(128, "0.1", "0.25"));
  const auto& layers = b.ledger.layers();
  const Rational n(128);
  EXPECT_EQ(layers[0].phase.value(), Rational(0));
  for (std::size_t r = 0; r + 1 < layers.size(); ++r) {
    const auto& cur = layers[r];
    const auto& next = layers[r + 1];
    if (cur.kind == AnnulusKind::shrink) {
      EXPECT_EQ(next.phase, cur.phase);
      EXPECT_EQ(*cur.drift_bound, n / next.length);
    } else {
      EXPECT_EQ(next.phase, Phase(cur.phase.value() + n / (2 * cur.length), n));
      EXPECT_EQ(*cur.drift_bound, n / (2 * cur.length));
    }
  }
  EXPECT_EQ(layers.back().kind, AnnulusKind::cone);
  EXPECT_EQ(b.ledger.size(), 1 + b.schedule.collar_width + b.schedule.block_count * (1 + b.schedule.block_layers[0]));
}

// Property: random admissible parameters build disks bounded by C_n.
TEST(BuildFillingProperty, RandomParametersGiveDisks) {
  std::mt19937 rng(4242);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(16, 260)(rng);
    const int eta_pct = std::uniform_int_distribution<int>(5, 60)(rng);
    const int rho_pct = std::uniform_int_distribution<int>(1, 50)(rng);
    const Params p{n, Rational(rho_pct, 100), Rational(eta_pct, 100)};
    Schedule s;
    try {
      s = compute_schedule(p);
    } catch (const ScheduleError&) {
      continue;
    }
    const auto b = build_filling(p);
    ++built;
    const auto report = validate_disk(b.complex);
    ASSERT_TRUE(report.ok()) << "n=" << n << ": " << report.issues.front().message;
    const auto cycle = boundary_cycle(b.complex);
    for (VertexId i = 0; i < n; ++i) ASSERT_EQ(cycle[i], i);
    EXPECT_EQ(static_cast<std::int64_t>(b.complex.vertex_count()), b.predicted_vertex_count);
    EXPECT_EQ(static_cast<std::int64_t>(b.complex.triangle_count()), b.predicted_triangle_count);
    // Cycle lengths never increase toward the centre.
    for (std::size_t r = 0; r + 1 < b.ledger.size(); ++r) {
      EXPECT_GE(b.ledger[r].length, b.ledger[r + 1].length);
    }
  }
  EXPECT_GT(built, 20);
}

TEST(PredictDensity, BoundAndFiniteCount) {
  const auto d0 = predict_density(Params::from_text(200, "0.1", "0.25"));
  EXPECT_EQ(d0.main_region_term, Rational(1 - Rational(1, 64)) / 6);
  EXPECT_EQ(d0.asymptotic_bound, Rational(1, 10) + d0.main_region_term);
  ASSERT_TRUE(d0.finite_vertex_count);
  EXPECT_EQ(*d0.finite_vertex_count, build_filling(Params::from_text(200, "0.1", "0.25")).predicted_vertex_count);

  // eta -> 0 limit of the bound is rho + 1/6.
  const auto limit = predict_density(Params{100, Rational(1, 10), Rational(0)});
  EXPECT_EQ(limit.asymptotic_bound, Rational(1, 10) + Rational(1, 6));
  EXPECT_TRUE(limit.schedule_error);
  EXPECT_FALSE(limit.finite_vertex_count);
}
