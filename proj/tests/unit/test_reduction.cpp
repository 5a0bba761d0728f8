#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gerst/enumerate.hpp"
#include "gerst/reduction.hpp"

using namespace gerst;
using fx::cell3;
using fx::skew3;

namespace {

std::size_t inter(const FloorPlan& p) {
  if (p.nu.empty()) return 0;
  const auto g = assemble(canonical_realization(p));
  return set_intersection(g.lambda.cells(), g.mu.cells()).size();
}

std::vector<FloorPlan> random_valid_plans(std::uint32_t seed, int count) {
  std::mt19937 rng(seed);
  const auto shapes = connected_shapes_upto(3, 4);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<FloorPlan> out;
  while (static_cast<int>(out.size()) < count) {
    FloorPlan p;
    for (int j = pick(1, 4); j > 0; --j) {
      const auto& level = shapes[static_cast<std::size_t>(pick(1, 4))];
      p.nu.push_back(level[static_cast<std::size_t>(pick(0, static_cast<int>(level.size()) - 1))]);
      p.b.push_back(Point{pick(0, 4), pick(0, 4)});
      p.c.push_back(Point{pick(0, 4), pick(0, 4)});
    }
    try {
      validate_plan(p);
    } catch (const Error&) {
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST(BottomSlice, Sigma) {
  const auto bs = bottom_slice(fx::sigma4());
  EXPECT_EQ(bs.slice, fx::cells(3, {{2, 0, 0}, {2, 1, 0}, {1, 2, 0}, {2, 2, 0}}));
  ASSERT_EQ(bs.remainder.size(), 2u);
  EXPECT_EQ(bs.remainder[0].anchor, (Point{2, 0, 1}));
  EXPECT_EQ(bs.remainder[0].shape, cell3());
  EXPECT_EQ(bs.remainder[1].anchor, (Point{0, 2, 1}));
  EXPECT_EQ(bs.remainder[1].shape, skew3({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}}));
}

TEST(BottomSlice, FlatAndColumn) {
  const auto flat = bottom_slice(skew3({{0, 0, 0}, {1, 0, 0}}));
  EXPECT_EQ(flat.slice.size(), 2u);
  EXPECT_TRUE(flat.remainder.empty());
  const auto col = bottom_slice(skew3({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}}));
  EXPECT_EQ(col.slice, fx::cells(3, {{0, 0, 0}}));
  ASSERT_EQ(col.remainder.size(), 1u);
  EXPECT_EQ(col.remainder[0].shape, skew3({{0, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(col.remainder[0].anchor, (Point{0, 0, 1}));
}

TEST(Reduction, WorkedPlan) {
  const auto r = bottom_slice_reduction(fx::reduction_plan());
  EXPECT_EQ(r.star.b, (std::vector<Point>{{1, 0}, {0, 1}}));
  EXPECT_EQ(r.star.c, r.star.b);
  EXPECT_EQ(r.eta, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.meets, (std::vector<Point>{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(r.star.nu, (std::vector<SkewShape>{skew3({{0, 0, 0}, {1, 0, 0}}),
                                               skew3({{0, 0, 0}, {0, 1, 0}})}));
  EXPECT_EQ(r.star.cells(), fx::reduction_plan().cells() - 6);
  const auto chain = reduce_to_fixpoint(fx::reduction_plan());
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[1], r.star);
  EXPECT_TRUE(chain[2].nu.empty());
}

TEST(Reduction, FlatPlanVanishes) {
  const FloorPlan p{{skew3({{0, 0, 0}, {1, 0, 0}}), cell3()}, {{0, 0}, {0, 1}}, {{1, 0}, {0, 0}}};
  const auto r = bottom_slice_reduction(p);
  EXPECT_TRUE(r.star.nu.empty());
  EXPECT_TRUE(r.eta.empty());
  EXPECT_EQ(reduce_to_fixpoint(p).size(), 2u);
}

TEST(Reduction, ColumnPeelsOneLayerPerStep) {
  const FloorPlan p{{skew3({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}})}, {{1, 1}}, {{0, 2}}};
  const auto chain = reduce_to_fixpoint(p);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_EQ(chain[1].nu[0].size(), 2u);
  EXPECT_EQ(chain[1].b[0], (Point{1, 1}));
  EXPECT_EQ(chain[2].c[0], (Point{0, 2}));
  EXPECT_TRUE(chain[3].nu.empty());
}

TEST(Reduction, EmptyPlanIsFixpoint) {
  EXPECT_EQ(reduce_to_fixpoint(FloorPlan{}).size(), 1u);
  EXPECT_TRUE(bottom_slice_reduction(FloorPlan{}).star.nu.empty());
}

TEST(Reduction, WorkedExamplesDropHeight) {
  for (const auto& p : {fx::three_piece_plan(), fx::lpluss(), fx::reduction_plan()}) {
    EXPECT_TRUE(verify_height_drop(p));
    EXPECT_TRUE(prop_main_condition(p));
  }
}

TEST(Reduction, BottomSupportIsClosure) {
  const auto p = fx::three_piece_plan();
  Cells placed;
  for (std::size_t j = 0; j < p.components(); ++j)
    placed = set_union(placed, translate(project(p.nu[j].cells()), p.b[j]));
  EXPECT_EQ(bottom_support(p, Side::B), closure_leq(placed));
}

TEST(Reduction, RandomPlans) {
  for (const auto& p : random_valid_plans(21, 1500)) {
    const auto r = bottom_slice_reduction(p);
    std::size_t sliced = 0;
    for (const auto& s : p.nu) sliced += bottom_slice(s).slice.size();
    ASSERT_EQ(r.star.cells(), p.cells() - sliced);
    ASSERT_EQ(r.eta.size(), r.star.components());
    for (std::size_t j = 0; j < r.eta.size(); ++j) {
      ASSERT_LT(r.eta[j], p.components());
      // the piece sits inside its parent above the bottom layer
      const Cells placed = translate(r.star.nu[j].cells(), r.meets[j]);
      ASSERT_TRUE(subset(placed, p.nu[r.eta[j]].cells()));
      ASSERT_GE(r.meets[j][2], 1);
      ASSERT_EQ(r.star.b[j], p.b[r.eta[j]] + r.meets[j].project());
      if (j) ASSERT_LE(r.eta[j - 1], r.eta[j]);
    }
    validate_plan(r.star);
    ASSERT_TRUE(verify_height_drop(p));
    const auto chain = reduce_to_fixpoint(p);
    ASSERT_TRUE(chain.back().nu.empty());
    // the bottom layers do not overlap what is left
    const std::size_t bottom =
        set_intersection(bottom_support(p, Side::B), bottom_support(p, Side::C)).size();
    ASSERT_LE(inter(r.star) + bottom, inter(p));
    if (is_right_free(p)) {
      ASSERT_TRUE(r.star.nu.empty() || is_right_free(r.star));
      ASSERT_TRUE(prop_main_condition(p));
    }
  }
}
