#include <gtest/gtest.h>

#include "brute.hpp"
#include "gerst/enumerate.hpp"
#include "gerst/search.hpp"

using namespace gerst;

namespace {

SearchBounds small(int comps, int cells, int w, int h) {
  SearchBounds b;
  b.max_components = comps;
  b.max_cells = cells;
  b.w = w;
  b.h = h;
  return b;
}

brute::S proj(const brute::S& s) {
  brute::S out;
  for (const auto& v : s) out.insert({v[0], v[1]});
  return out;
}

struct HalfCount {
  std::uint64_t acyclic = 0, cyclic = 0, squares = 0;
};

// Placements of at most two shapes, counted straight from the definitions.
// Shapes come from the reference enumeration up to 4 cells and from the
// library beyond that (where the reference is too slow).
HalfCount count_halves(int max_cells, int w, int h) {
  std::vector<brute::S> shapes;
  std::vector<std::size_t> sizes;
  for (int k = 1; k <= max_cells; ++k) {
    std::vector<brute::S> level;
    if (k <= 4) {
      level = brute::connected_shapes(3, k);
    } else {
      for (const auto& s : enumerate_connected_shapes(3, k)) level.push_back(brute::from_cells(s.cells()));
    }
    for (const auto& s : level) {
      shapes.push_back(proj(s));
      sizes.push_back(s.size());
    }
  }
  auto fits = [&](const brute::S& p, int x, int y, brute::S& out) {
    out.clear();
    for (const auto& v : p) {
      if (v[0] + x >= w || v[1] + y >= h) return false;
      out.insert({v[0] + x, v[1] + y});
    }
    return true;
  };
  auto below = [](const brute::S& a, const brute::S& b) {
    for (const auto& v : a)
      for (const auto& u : b)
        if (brute::leq(v, u)) return true;
    return false;
  };
  HalfCount out;
  brute::S pa, pb;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    std::uint64_t n = 0;
    for (int x = 0; x < w; ++x)
      for (int y = 0; y < h; ++y) n += fits(shapes[i], x, y, pa);
    out.acyclic += n;
    out.squares += n * n;
  }
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i; j < shapes.size(); ++j) {
      if (static_cast<int>(sizes[i] + sizes[j]) > max_cells) continue;
      std::uint64_t n = 0;
      for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) {
          if (!fits(shapes[i], x, y, pa)) continue;
          for (int u = 0; u < w; ++u)
            for (int v = 0; v < h; ++v) {
              if (!fits(shapes[j], u, v, pb)) continue;
              bool overlap = false;
              for (const auto& c : pa) overlap = overlap || pb.count(c);
              if (overlap) continue;
              if (below(pa, pb) && below(pb, pa))
                ++out.cyclic;
              else
                ++n;
            }
        }
      out.acyclic += n;
      out.squares += n * n;
    }
  return out;
}

}  // namespace

TEST(Tuples, NondecreasingWithinBudget) {
  const auto t = shape_tuples({1, 2, 2}, 2, 3);
  EXPECT_EQ(t, (std::vector<std::vector<int>>{{0}, {0, 0}, {0, 1}, {0, 2}, {1}, {2}}));
  EXPECT_TRUE(shape_tuples({4}, 3, 3).empty());
}

TEST(Placements, Counts) {
  const SkewShape cell(2, {Point{0, 0}});
  int n = 0;
  for_each_planar_placement({&cell}, 2, 2, [&](const std::vector<Point>&) { ++n; });
  EXPECT_EQ(n, 4);
  n = 0;
  for_each_planar_placement({&cell, &cell}, 2, 1, [&](const std::vector<Point>& a) {
    EXPECT_NE(a[0], a[1]);
    ++n;
  });
  EXPECT_EQ(n, 2);
  const SkewShape bar(2, {Point{0, 0}, Point{1, 0}});
  n = 0;
  for_each_planar_placement({&bar}, 1, 3, [&](const std::vector<Point>&) { ++n; });
  EXPECT_EQ(n, 0);
}

TEST(Campaigns, NamesAndBounds) {
  EXPECT_EQ(campaign_names().size(), 5u);
  EXPECT_EQ(default_bounds("no-small-intersection").max_cells, 7);
  EXPECT_EQ(default_bounds("oracle-bridge").depth, 4);
  EXPECT_EQ(default_bounds("height-drop").w, 3);
  try {
    default_bounds("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.clause(), "campaign");
  }
  SearchBounds bad;
  bad.w = 0;
  try {
    run_campaign("height-drop", bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.clause(), "bounds");
  }
  bad = SearchBounds{};
  bad.max_third_offset = -1;
  EXPECT_THROW(bad.check(), Error);
}

TEST(Campaigns, HalfPlanCountsMatchReference) {
  const auto ref = count_halves(3, 3, 3);
  for (const char* name : {"canonical-minimality", "height-drop"}) {
    const auto r = run_campaign(name, small(2, 3, 3, 3));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.instances_checked, ref.acyclic) << name;
    EXPECT_EQ(r.counter("half_plans"), ref.acyclic) << name;
    EXPECT_EQ(r.counter("plans_covered"), ref.squares) << name;
    EXPECT_EQ(r.counter("cyclic_skipped"), ref.cyclic) << name;
  }
  const auto rf = run_campaign("rightfree-not-counterexample", small(2, 3, 3, 3));
  EXPECT_TRUE(rf.ok());
  EXPECT_EQ(rf.counter("half_plans"), ref.acyclic);
  EXPECT_EQ(rf.counter("cyclic_skipped"), ref.cyclic);
  EXPECT_LE(rf.counter("oracle_runs"), rf.instances_checked);
}

TEST(Campaigns, CyclesAppearWithFiveCells) {
  // a 4-cell hook with a non-convex projection plus one cell
  const auto ref = count_halves(5, 3, 3);
  EXPECT_GT(ref.cyclic, 0u);
  const auto r = run_campaign("height-drop", small(2, 5, 3, 3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.counter("cyclic_skipped"), ref.cyclic);
  EXPECT_EQ(r.instances_checked, ref.acyclic);
}

TEST(Campaigns, JobsDoNotChangeCounts) {
  const auto one = run_campaign("canonical-minimality", small(2, 3, 3, 3), 1);
  const auto two = run_campaign("canonical-minimality", small(2, 3, 3, 3), 2);
  EXPECT_EQ(one.instances_checked, two.instances_checked);
  EXPECT_EQ(one.counters, two.counters);
}

TEST(Campaigns, SmallIntersectionCampaign) {
  const auto r = run_campaign("no-small-intersection", small(2, 4, 4, 4));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances_checked, search_small_intersection(2, 4, 4, 4).candidates_examined);
}

TEST(Campaigns, OracleOnGluingData) {
  auto b = small(1, 2, 2, 2);
  b.depth = 2;
  const auto r = run_campaign("oracle-bridge", b);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.instances_checked, 0u);
  b.w = b.h = b.depth = 5;
  EXPECT_THROW(run_campaign("oracle-bridge", b), Error);
}
