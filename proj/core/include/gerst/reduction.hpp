#pragma once

// Bottom slices of 3-D shapes and the reduction that strips them from a
// floor plan.

#include <vector>

#include "gerst/floorplan.hpp"
#include "gerst/gluing.hpp"

namespace gerst {

struct BottomSlice {
  Cells slice;                     // cells of sigma with a3 = 0
  std::vector<Summand> remainder;  // components of sigma minus slice, normalized
};

/// Remainder components are ordered colexicographically by their meets.
BottomSlice bottom_slice(const SkewShape& sigma);

struct SliceReduction {
  FloorPlan star;
  std::vector<std::size_t> eta;  // 0-based parent component of each star component
  std::vector<Point> meets;      // meet of tau_j inside nu_eta(j)
};

/// Components ordered by (eta, colex meet).
SliceReduction bottom_slice_reduction(const FloorPlan& plan);

/// Support of the upper height function on one side: the closure of the
/// placed projections.
Cells bottom_support(const FloorPlan& plan, Side side);

/// For every a in the support of the star plan's upper height function,
/// p_lambda(a) >= p_lambda*(a) + 1, on both sides.
bool verify_height_drop(const FloorPlan& plan);

/// sum |slice(nu_j)| <= |lambda° ∩ mu°|.
bool prop_main_condition(const FloorPlan& plan);

/// plan, plan*, plan**, ... ending with the empty plan.
std::vector<FloorPlan> reduce_to_fixpoint(const FloorPlan& plan);

}  // namespace gerst
