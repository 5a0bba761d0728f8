#pragma once

// Floor plans: connected abstract 3-D shapes with planar anchors on the
// lambda side (b) and the mu side (c), and their lifts back to 3-D.

#include <vector>

#include "gerst/gluing.hpp"
#include "gerst/shapes.hpp"

namespace gerst {

struct FloorPlan {
  std::vector<SkewShape> nu;  // 3-D, connected, abstract
  std::vector<Point> b;       // 2-D
  std::vector<Point> c;       // 2-D

  std::size_t components() const noexcept { return nu.size(); }
  std::size_t cells() const;
  friend bool operator==(const FloorPlan&, const FloorPlan&) = default;
};

enum class Side { B, C };

inline const std::vector<Point>& anchors(const FloorPlan& p, Side s) {
  return s == Side::B ? p.b : p.c;
}

/// Projection of a 3-D cell set to its first two coordinates.
Cells project(const Cells& cells);

/// Throws Error naming the failed condition: "dimension", "connected",
/// "abstract", "nonnegative", "projection-overlap" or "acyclic".
/// Projections of 3-D skew shapes need not be convex, so disjoint placements
/// can still be mutually comparable; such plans have no realization.
void validate_plan(const FloorPlan& plan);

/// No cycle in <=_b (or <=_c). Assumes the other plan conditions hold.
bool is_acyclic(const FloorPlan& plan, Side side);

/// Some v in pi(nu_i)+b_i and w in pi(nu_j)+b_j with v <= w.
bool leq_b(const FloorPlan& plan, std::size_t i, std::size_t j, Side side = Side::B);

/// Maximum over witnesses v <= w of upper_j(w - b_j) - lower_i(v - b_i).
/// Throws (clause "unrelated") when nu_i is not <=_b nu_j.
int hb_pair(const FloorPlan& plan, std::size_t i, std::size_t j, Side side = Side::B);

/// Longest weighted chain starting at j in the <=_b order, at least 0.
int hb(const FloorPlan& plan, std::size_t j, Side side = Side::B);
std::vector<int> hb_all(const FloorPlan& plan, Side side = Side::B);

struct Realization {
  FloorPlan plan;
  std::vector<int> bz;
  std::vector<int> cz;

  std::vector<Point> b3() const;
  std::vector<Point> c3() const;
};

/// bz = hb, cz = hc.
Realization canonical_realization(const FloorPlan& plan);

/// The scaffolded gluing data built from the lifted anchors.
GluingData assemble(const Realization& r);

/// True iff the assembled gluing data is valid.
bool is_realization(const FloorPlan& plan, const std::vector<int>& bz, const std::vector<int>& cz);

/// Validity of one side only: the lifted copies on that side are disjoint and
/// closed under >= in the closure of their union. A realization is valid iff
/// both sides are.
bool is_side_realization(const FloorPlan& plan, Side side, const std::vector<int>& z);

/// Upper height function of lambda (or mu) of the canonical realization,
/// computed from the floor plan alone.
int upper_height_lambda(const FloorPlan& plan, const Point& a, Side side = Side::B);

/// hb(j) == 0 for every j.
bool is_right_free(const FloorPlan& plan);

}  // namespace gerst
