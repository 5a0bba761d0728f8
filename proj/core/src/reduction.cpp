#include "gerst/reduction.hpp"

#include <algorithm>

namespace gerst {

BottomSlice bottom_slice(const SkewShape& sigma) {
  if (sigma.dim() != 3) throw Error("bottom slices need a 3-D shape", "dimension");
  BottomSlice out;
  std::vector<Point> upper;
  for (const auto& c : sigma.cells()) (c[2] == 0 ? out.slice : upper).push_back(c);
  if (upper.empty()) return out;
  for (const auto& comp : connected_components(SkewShape(3, std::move(upper))))
    out.remainder.push_back({normalize(comp), meet(comp)});
  std::stable_sort(out.remainder.begin(), out.remainder.end(),
                   [](const Summand& a, const Summand& b) { return colex_less(a.anchor, b.anchor); });
  return out;
}

SliceReduction bottom_slice_reduction(const FloorPlan& plan) {
  validate_plan(plan);
  SliceReduction r;
  for (std::size_t j = 0; j < plan.nu.size(); ++j) {
    for (auto& part : bottom_slice(plan.nu[j]).remainder) {
      const Point shift = part.anchor.project();
      r.star.nu.push_back(std::move(part.shape));
      r.star.b.push_back(plan.b[j] + shift);
      r.star.c.push_back(plan.c[j] + shift);
      r.eta.push_back(j);
      r.meets.push_back(part.anchor);
    }
  }
  return r;
}

Cells bottom_support(const FloorPlan& plan, Side side) {
  std::vector<Point> placed;
  for (std::size_t j = 0; j < plan.nu.size(); ++j)
    for (const auto& v : project(plan.nu[j].cells())) placed.push_back(v + anchors(plan, side)[j]);
  return closure_leq(make_cells(2, std::move(placed)));
}

bool verify_height_drop(const FloorPlan& plan) {
  const FloorPlan star = bottom_slice_reduction(plan).star;
  for (Side side : {Side::B, Side::C}) {
    for (const auto& a : bottom_support(star, side)) {
      if (upper_height_lambda(plan, a, side) < upper_height_lambda(star, a, side) + 1)
        return false;
    }
  }
  return true;
}

bool prop_main_condition(const FloorPlan& plan) {
  validate_plan(plan);
  std::size_t slice = 0;
  for (const auto& s : plan.nu) slice += bottom_slice(s).slice.size();
  const auto both = set_intersection(bottom_support(plan, Side::B), bottom_support(plan, Side::C));
  return slice <= both.size();
}

std::vector<FloorPlan> reduce_to_fixpoint(const FloorPlan& plan) {
  std::vector<FloorPlan> chain{plan};
  while (!chain.back().nu.empty()) {
    FloorPlan next = bottom_slice_reduction(chain.back()).star;
    if (next.cells() >= chain.back().cells())
      throw Error("bottom-slice reduction did not shrink the plan", "internal");
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace gerst
