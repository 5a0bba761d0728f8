#pragma once

// The worked examples, built in code.

#include <initializer_list>
#include <vector>

#include "gerst/floorplan.hpp"
#include "gerst/gluing.hpp"
#include "gerst/rightfree.hpp"

namespace fx {

using gerst::Point;
using gerst::SkewShape;

inline std::vector<Point> pts(std::initializer_list<Point> l) { return std::vector<Point>(l); }

inline SkewShape skew2(std::initializer_list<Point> l) { return SkewShape(2, pts(l)); }
inline SkewShape skew3(std::initializer_list<Point> l) { return SkewShape(3, pts(l)); }
inline gerst::Cells cells(int dim, std::initializer_list<Point> l) {
  return gerst::make_cells(dim, pts(l));
}

inline SkewShape cell3() { return skew3({{0, 0, 0}}); }

// I, J, K = L of the two-variable gluing, as exponent vectors.
inline gerst::Generators ideal_i() { return {{4, 0}, {3, 1}, {2, 2}, {0, 4}}; }
inline gerst::Generators ideal_j() { return {{4, 0}, {3, 1}, {1, 3}, {0, 4}}; }
inline gerst::Generators ideal_k() { return {{3, 0}, {2, 1}, {1, 2}, {0, 3}}; }

// Three-piece plan with hb = (0, 1, 0).
inline gerst::FloorPlan three_piece_plan() {
  std::vector<SkewShape> nu{skew3({{0, 0, 2}, {1, 0, 0}, {1, 0, 1}, {1, 0, 2}}), cell3(), cell3()};
  std::vector<Point> b{{0, 0}, {0, 2}, {0, 3}};
  return {nu, b, b};
}

// Two-component example whose minimum realization is flat.
inline gerst::FloorPlan lpluss() {
  std::vector<SkewShape> nu{skew3({{0, 0, 1}, {1, 0, 0}, {1, 0, 1}}), cell3()};
  std::vector<Point> b{{0, 0}, {0, 2}};
  return {nu, b, b};
}

// The shape sigma used for bottom slices.
inline SkewShape sigma4() {
  return skew3({{2, 0, 0}, {2, 0, 1}, {2, 1, 0}, {0, 2, 1}, {0, 2, 2}, {1, 2, 0}, {1, 2, 1}, {2, 2, 0}});
}

// Bottom-slice reduction example; nu_2 carries the extra cell (1,1,0) that
// makes it connected.
inline gerst::FloorPlan reduction_plan() {
  std::vector<SkewShape> nu{
      cell3(), skew3({{1, 0, 0}, {1, 0, 1}, {2, 0, 0}, {2, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 2, 0},
                      {0, 2, 1}, {1, 1, 0}})};
  std::vector<Point> b{{2, 2}, {0, 0}};
  return {nu, b, b};
}

// Planar right-free configuration, c_1 = (0,2).
inline gerst::RightFreeConfig planar_config() {
  return {{skew2({{0, 1}, {1, 1}, {1, 0}}), skew2({{0, 0}, {1, 0}, {0, 1}}), skew2({{0, 0}})},
          {{0, 4}, {2, 2}, {4, 0}},
          {{0, 2}, {0, 1}, {0, 0}}};
}

inline gerst::RightFreeConfig planar_config_shifted() {
  auto cfg = planar_config();
  cfg.b = {{0, 3}, {2, 1}, {4, 0}};
  return cfg;
}

// lambda = {0, e1, e2}, mu = {0, e3, e4}, e1 ~ e3 and e2 ~ e4.
inline gerst::GluingData n4_counterexample() {
  const SkewShape one(4, pts({{0, 0, 0, 0}}));
  return {gerst::StandardShape(4, pts({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}})),
          gerst::StandardShape(4, pts({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
          {one, one},
          {{1, 0, 0, 0}, {0, 1, 0, 0}},
          {{0, 0, 1, 0}, {0, 0, 0, 1}}};
}

}  // namespace fx
