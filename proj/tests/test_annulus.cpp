#include <gtest/gtest.h>

#include <random>

#include "ringfill/annulus.hpp"

using namespace ringfill;

TEST(CircDist, ShorterArc) {
  const Rational n(8);
  EXPECT_EQ(circ_dist(Rational(1), Rational(7), n), Rational(2));
  EXPECT_EQ(circ_dist(Rational(3), Rational(3), n), Rational(0));
  EXPECT_EQ(circ_dist(Rational(0), Rational(4), n), Rational(4));
  EXPECT_EQ(circ_dist(Phase(Rational(-1, 2), n), Phase(Rational(1, 2), n), n), Rational(1));
}

TEST(EqualAnnulus, SixCycleCounts) {
  ComplexBuilder builder(6);
  const auto res = build_equal_annulus(builder, builder.boundary());
  EXPECT_EQ(res.triangle_count, 12u);
  EXPECT_EQ(builder.vertex_count(), 12u);
  EXPECT_EQ(builder.ledger()[1].length, 6u);
}

TEST(EqualAnnulus, InnerPhasesAreHalfStepped) {
  ComplexBuilder builder(4);
  const auto res = build_equal_annulus(builder, builder.boundary());
  builder.add_cone_cap(res.inner);
  const auto t = builder.finish();
  std::vector<Rational> thetas;
  for (VertexId v = 4; v < 8; ++v) thetas.push_back(*t.theta(v));
  EXPECT_EQ(thetas, (std::vector<Rational>{Rational(1, 2), Rational(3, 2), Rational(5, 2), Rational(7, 2)}));
  EXPECT_FALSE(t.theta(8).has_value());
}

TEST(EqualAnnulus, RejectsShortCycles) {
  EXPECT_THROW(ComplexBuilder(2), std::invalid_argument);
}

TEST(Staircase, Indices) {
  EXPECT_EQ(staircase_steps(5, 3), (std::vector<std::uint32_t>{0, 0, 1, 1, 2, 3}));
  EXPECT_EQ(staircase_steps(4, 4), (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
}

TEST(ShrinkingAnnulus, TriangleCountIsMPlusM) {
  ComplexBuilder builder(6);
  const auto res = build_shrinking_annulus(builder, builder.boundary(), 3);
  EXPECT_EQ(res.triangle_count, 9u);
  EXPECT_EQ(builder.ledger()[1].length, 3u);
  EXPECT_EQ(builder.ledger()[1].phase, builder.ledger()[0].phase);
  EXPECT_EQ(*builder.ledger()[0].drift_bound, Rational(2));  // n / M
}

TEST(ShrinkingAnnulus, DegenerateShrinkMatchesEqualAnnulusCount) {
  for (std::uint32_t m = 3; m <= 12; ++m) {
    ComplexBuilder a(m);
    ComplexBuilder b(m);
    const auto shrink = build_shrinking_annulus(a, a.boundary(), m);
    const auto equal = build_equal_annulus(b, b.boundary());
    EXPECT_EQ(shrink.triangle_count, equal.triangle_count) << "m=" << m;
    EXPECT_EQ(shrink.triangle_count, 2u * m);
    // Phases differ: shrinking keeps alpha, equal shifts by n/(2m).
    EXPECT_NE(a.ledger()[1].phase, b.ledger()[1].phase);
  }
}

TEST(ShrinkingAnnulus, RejectsBadTargets) {
  ComplexBuilder builder(6);
  EXPECT_THROW(build_shrinking_annulus(builder, builder.boundary(), 2), std::invalid_argument);
  EXPECT_THROW(build_shrinking_annulus(builder, builder.boundary(), 7), std::invalid_argument);
}

TEST(ComplexBuilder, OnlyInnermostCycleAcceptsAnnuli) {
  ComplexBuilder builder(5);
  build_equal_annulus(builder, builder.boundary());
  EXPECT_THROW(build_equal_annulus(builder, builder.boundary()), std::logic_error);
  builder.add_cone_cap(builder.innermost());
  EXPECT_THROW(build_equal_annulus(builder, builder.innermost()), std::logic_error);
}

// Property: random stacks of equal and shrinking annuli closed by a cone are
// disks bounded by C_n with 2m or m+M triangles per annulus.
TEST(AnnulusProperty, RandomStacksGlueIntoDisks) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = std::uniform_int_distribution<std::uint32_t>(3, 40)(rng);
    ComplexBuilder builder(n);
    std::size_t expected_triangles = 0;
    std::size_t expected_vertices = n;
    std::uint32_t m = n;
    const int depth = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int d = 0; d < depth; ++d) {
      const auto inner = builder.innermost();
      if (rng() % 2 == 0) {
        const auto res = build_equal_annulus(builder, inner);
        EXPECT_EQ(res.triangle_count, 2u * m);
        expected_triangles += 2 * m;
      } else {
        const std::uint32_t M = std::uniform_int_distribution<std::uint32_t>(3, m)(rng);
        const auto res = build_shrinking_annulus(builder, inner, M);
        EXPECT_EQ(res.triangle_count, m + M);
        expected_triangles += m + M;
        m = M;
      }
      expected_vertices += m;
    }
    builder.add_cone_cap(builder.innermost());
    expected_triangles += m;
    expected_vertices += 1;
    const auto t = builder.finish();
    ASSERT_EQ(t.triangle_count(), expected_triangles);
    ASSERT_EQ(t.vertex_count(), expected_vertices);
    const auto report = validate_disk(t);
    ASSERT_TRUE(report.ok()) << "n=" << n << " trial=" << trial << ": " << report.issues.front().message;
    std::vector<VertexId> cycle(n);
    for (VertexId i = 0; i < n; ++i) cycle[i] = i;
    EXPECT_EQ(boundary_cycle(t), cycle);
  }
}

// Property: every staircase is non-decreasing, starts at 0, ends at M and
// never steps by more than one.
TEST(AnnulusProperty, StaircaseShape) {
  for (std::uint32_t m = 3; m <= 60; ++m) {
    for (std::uint32_t M = 3; M <= m; ++M) {
      const auto k = staircase_steps(m, M);
      ASSERT_EQ(k.size(), m + 1);
      EXPECT_EQ(k.front(), 0u);
      EXPECT_EQ(k.back(), M);
      std::uint32_t steps = 0;
      for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        ASSERT_LE(k[i + 1] - k[i], 1u);
        steps += k[i + 1] - k[i];
      }
      EXPECT_EQ(steps, M);
    }
  }
}
