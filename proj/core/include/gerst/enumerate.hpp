#pragma once

// Exhaustive generation of connected abstract skew shapes and of their
// placements.

#include <cstdint>
#include <functional>
#include <vector>

#include "gerst/shapes.hpp"

namespace gerst {

/// All connected abstract skew shapes in N^dim with exactly `cells` cells,
/// sorted by SkewShape::operator<.
std::vector<SkewShape> enumerate_connected_shapes(int dim, int cells);

/// out[k] = enumerate_connected_shapes(dim, k) for 1 <= k <= max_cells;
/// out[0] is empty.
std::vector<std::vector<SkewShape>> connected_shapes_upto(int dim, int max_cells);

/// Nondecreasing index tuples (length 1..max_len) into `sizes` whose sizes sum
/// to at most `max_total`, in lexicographic order.
std::vector<std::vector<int>> shape_tuples(const std::vector<int>& sizes, int max_len,
                                           int max_total);

/// Calls f(anchors) for every choice of anchors, one per shape, putting each
/// placed projection inside [0,w) x [0,h) with pairwise disjoint projections.
/// Shapes may be 2-D or 3-D; anchors are 2-D.
void for_each_planar_placement(const std::vector<const SkewShape*>& shapes, int w, int h,
                               const std::function<void(const std::vector<Point>&)>& f);

}  // namespace gerst
