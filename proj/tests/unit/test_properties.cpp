#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const props::Result& r, std::size_t min_cases) {
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_GE(r.cases, min_cases);
}

}  // namespace

TEST(Properties, HeightRoundTrip) { expect_ok(props::height_round_trip(6), 500); }

TEST(Properties, HeightPairsInSmallSquare) { expect_ok(props::height_pairs_exhaustive(), 100); }

TEST(Properties, ClosureIdempotent) { expect_ok(props::closure_idempotence(1000, 1), 1000); }

TEST(Properties, RectangleContainment) { expect_ok(props::rectangle_containment(1000, 2), 1000); }

TEST(Properties, PathsCross) { expect_ok(props::path_crossing(1000, 3), 1000); }

TEST(Properties, ComponentsDeterministic) { expect_ok(props::component_determinism(1000, 4), 500); }
