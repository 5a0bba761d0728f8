#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "gerst/enumerate.hpp"
#include "gerst/floorplan.hpp"

using namespace gerst;
using fx::cell3;
using fx::skew3;

namespace {

std::string clause_of(const FloorPlan& p) {
  try {
    validate_plan(p);
  } catch (const Error& e) {
    return e.clause();
  }
  return "";
}

FloorPlan stacked(std::vector<Point> b) {
  std::vector<SkewShape> nu(b.size(), cell3());
  return {nu, b, b};
}

// Connected, but its projection {(0,0),(0,1),(1,1)} is not convex.
SkewShape hook() { return skew3({{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0}}); }

FloorPlan random_plan(std::mt19937& rng, const std::vector<std::vector<SkewShape>>& shapes,
                      int max_len) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  FloorPlan p;
  for (int j = pick(1, max_len); j > 0; --j) {
    const auto& level = shapes[static_cast<std::size_t>(pick(1, static_cast<int>(shapes.size()) - 1))];
    p.nu.push_back(level[static_cast<std::size_t>(pick(0, static_cast<int>(level.size()) - 1))]);
    p.b.push_back(Point{pick(0, 4), pick(0, 4)});
    p.c.push_back(Point{pick(0, 4), pick(0, 4)});
  }
  return p;
}

}  // namespace

TEST(Project, DropsThirdCoordinate) {
  EXPECT_EQ(project(fx::sigma4().cells()),
            fx::cells(2, {{2, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}));
  EXPECT_EQ(project(hook().cells()), fx::cells(2, {{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Validate, Clauses) {
  EXPECT_EQ(clause_of(fx::three_piece_plan()), "");
  EXPECT_EQ(clause_of(fx::reduction_plan()), "");
  EXPECT_EQ(clause_of(stacked({{0, 0}, {0, 0}})), "projection-overlap");
  EXPECT_EQ(clause_of(FloorPlan{{skew3({{1, 0, 0}})}, {{0, 0}}, {{0, 0}}}), "abstract");
  EXPECT_EQ(clause_of(FloorPlan{{skew3({{1, 0, 0}, {0, 1, 0}})}, {{0, 0}}, {{0, 0}}}),
            "connected");
  EXPECT_EQ(clause_of(FloorPlan{{cell3()}, {{0, 0}}, {}}), "dimension");
  EXPECT_EQ(clause_of(FloorPlan{{fx::skew2({{0, 0}})}, {{0, 0}}, {{0, 0}}}), "dimension");
  EXPECT_EQ(clause_of(FloorPlan{{cell3()}, {{-1, 0}}, {{0, 0}}}), "nonnegative");
  auto lifted = fx::three_piece_plan();
  lifted.c[2] = Point{0, 0, 0};
  EXPECT_EQ(clause_of(lifted), "dimension");
}

TEST(Validate, NonConvexProjectionGivesCycle) {
  // the cell at (1,0) lies above (0,0) and below (1,1) of the hook
  const FloorPlan p{{hook(), cell3()}, {{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}};
  EXPECT_TRUE(leq_b(p, 0, 1));
  EXPECT_TRUE(leq_b(p, 1, 0));
  EXPECT_FALSE(is_acyclic(p, Side::B));
  EXPECT_TRUE(is_acyclic(p, Side::C));
  EXPECT_EQ(clause_of(p), "acyclic");
  EXPECT_THROW(hb_all(p), Error);
  // no choice of heights realizes it
  for (int z0 = 0; z0 < 4; ++z0)
    for (int z1 = 0; z1 < 4; ++z1) EXPECT_FALSE(is_side_realization(p, Side::B, {z0, z1}));
}

TEST(Order, LeqAndPairWeights) {
  const auto p = stacked({{0, 0}, {1, 1}});
  EXPECT_TRUE(leq_b(p, 0, 1));
  EXPECT_FALSE(leq_b(p, 1, 0));
  EXPECT_EQ(hb_pair(p, 0, 1), 1);
  try {
    hb_pair(p, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.clause(), "unrelated");
  }
  EXPECT_THROW(leq_b(p, 0, 2), Error);
  EXPECT_FALSE(leq_b(stacked({{1, 0}, {0, 1}}), 0, 1));
}

TEST(Order, ChainHeights) {
  EXPECT_EQ(hb_all(stacked({{0, 0}, {1, 1}})), (std::vector<int>{1, 0}));
  EXPECT_EQ(hb_all(stacked({{0, 0}, {1, 1}, {2, 2}})), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(hb(stacked({{0, 0}, {1, 1}, {2, 2}}), 0), 2);
  EXPECT_EQ(hb_all(stacked({{1, 0}, {0, 1}})), (std::vector<int>{0, 0}));
  EXPECT_EQ(hb_all(fx::three_piece_plan()), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(hb_all(fx::three_piece_plan(), Side::C), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(hb_all(fx::lpluss()), (std::vector<int>{0, 0}));
  EXPECT_EQ(hb_all(fx::reduction_plan()), (std::vector<int>{0, 1}));
}

TEST(Order, WeightCanBeNegative) {
  // nu_1 sits at height 2 over (0,0), the cell above it has upper height 1
  EXPECT_EQ(hb_pair(fx::three_piece_plan(), 0, 1), -1);
  EXPECT_EQ(hb_pair(fx::three_piece_plan(), 1, 2), 1);
}

TEST(Realization, Canonical) {
  const auto r = canonical_realization(fx::three_piece_plan());
  EXPECT_EQ(r.bz, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(r.cz, r.bz);
  EXPECT_EQ(r.b3()[1], (Point{0, 2, 1}));
  EXPECT_TRUE(is_realization(fx::three_piece_plan(), r.bz, r.cz));
  EXPECT_FALSE(is_realization(fx::three_piece_plan(), {0, 0, 0}, {0, 0, 0}));
  EXPECT_TRUE(validate_gluing(assemble(r)).ok);
}

TEST(Realization, LiftsAndMinimality) {
  const auto p = fx::lpluss();
  EXPECT_TRUE(is_realization(p, {0, 0}, {0, 0}));
  EXPECT_TRUE(is_realization(p, {1, 1}, {1, 1}));
  EXPECT_FALSE(is_realization(p, {-1, 0}, {0, 0}));
  EXPECT_THROW(is_realization(p, {0}, {0, 0}), Error);
  const auto s = stacked({{0, 0}, {1, 1}});
  EXPECT_TRUE(is_realization(s, {1, 0}, {1, 0}));
  EXPECT_FALSE(is_realization(s, {0, 0}, {1, 0}));
  EXPECT_FALSE(is_side_realization(s, Side::B, {0, 0}));
  EXPECT_TRUE(is_side_realization(s, Side::B, {1, 0}));
  EXPECT_TRUE(is_side_realization(s, Side::B, {2, 0}));
}

TEST(Realization, ReductionPlan) {
  const auto r = canonical_realization(fx::reduction_plan());
  EXPECT_EQ(r.bz, (std::vector<int>{0, 1}));
  EXPECT_TRUE(is_realization(fx::reduction_plan(), r.bz, r.cz));
}

TEST(UpperHeight, MatchesAssembledClosure) {
  for (const auto& plan : {fx::three_piece_plan(), fx::lpluss(), fx::reduction_plan(), stacked({{0, 0}, {1, 1}, {2, 2}})}) {
    const auto g = assemble(canonical_realization(plan));
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        int h = 0;
        while (g.lambda.contains(Point{x, y, h})) ++h;
        EXPECT_EQ(upper_height_lambda(plan, Point{x, y}), h) << x << "," << y;
      }
  }
}

TEST(RightFree, Examples) {
  EXPECT_TRUE(is_right_free(fx::lpluss()));
  EXPECT_FALSE(is_right_free(fx::three_piece_plan()));
  EXPECT_FALSE(is_right_free(fx::reduction_plan()));
  EXPECT_TRUE(is_right_free(stacked({{2, 0}, {1, 1}, {0, 2}})));
}

TEST(ChainDp, AgreesWithExplicitChains) {
  std::mt19937 rng(11);
  const auto shapes = connected_shapes_upto(3, 3);
  int checked = 0;
  for (int t = 0; t < 3000; ++t) {
    const auto p = random_plan(rng, shapes, 5);
    if (!clause_of(p).empty()) continue;
    ++checked;
    for (Side side : {Side::B, Side::C})
      ASSERT_EQ(hb_all(p, side), brute::hb_by_chains(p, side)) << t;
  }
  EXPECT_GT(checked, 300);
}

TEST(ChainDp, ValidPlansAreAntisymmetric) {
  std::mt19937 rng(12);
  const auto shapes = connected_shapes_upto(3, 4);
  for (int t = 0; t < 3000; ++t) {
    const auto p = random_plan(rng, shapes, 4);
    if (!clause_of(p).empty()) continue;
    for (std::size_t i = 0; i < p.components(); ++i)
      for (std::size_t j = 0; j < p.components(); ++j)
        if (i != j) ASSERT_FALSE(leq_b(p, i, j) && leq_b(p, j, i)) << t;
  }
}

TEST(ChainDp, CanonicalIsRealization) {
  std::mt19937 rng(13);
  const auto shapes = connected_shapes_upto(3, 3);
  for (int t = 0; t < 1500; ++t) {
    const auto p = random_plan(rng, shapes, 4);
    if (!clause_of(p).empty()) continue;
    const auto r = canonical_realization(p);
    ASSERT_TRUE(is_realization(p, r.bz, r.cz)) << t;
    ASSERT_TRUE(brute::gluing_valid(assemble(r))) << t;
  }
}
