#pragma once

// Slow reference implementations written straight from the definitions. They
// share no code with the library beyond the data types used at the boundary.

#include <cstdint>
#include <set>
#include <vector>

#include "gerst/floorplan.hpp"
#include "gerst/gluing.hpp"

namespace brute {

using V = std::vector<int>;
using S = std::set<V>;

S from_cells(const gerst::Cells& cells);
gerst::Cells to_cells(int dim, const S& s);

bool leq(const V& a, const V& b);
S down_closure(const S& s);
bool is_down_closed(const S& s);
bool is_skew(const S& s);
bool is_connected(const S& s);
std::vector<S> components(const S& s);
V meet(const S& s);
S shift(const S& s, const V& by);
S normalized(const S& s);

/// Connected skew shapes with `k` cells and meet at the origin, found among
/// k-subsets of the box [0,k)^dim.
std::vector<S> connected_shapes(int dim, int k);
/// Abstract (not necessarily connected) skew shapes with `k` cells inside
/// [0,side)^dim.
std::vector<S> abstract_shapes(int dim, int k, int side);

/// Column counts: upper = 1 + max a3, lower = min a3, over cells of the column.
int upper(const S& shape, int x, int y);
int lower(const S& shape, int x, int y);

/// Longest chain weights by listing every chain explicitly.
std::vector<int> hb_by_chains(const gerst::FloorPlan& plan, gerst::Side side);

/// Direct check of the gluing conditions.
bool gluing_valid(const gerst::GluingData& g);

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// Action matrices of x_1..x_n on lambda ⊔ (mu minus glued cells).
std::vector<Matrix> module_matrices(const gerst::GluingData& g, std::uint64_t p);

/// Span of all monomials in the matrices of total degree <= size, by Gaussian
/// elimination mod p.
std::size_t algebra_dimension(const std::vector<Matrix>& mats, std::uint64_t p);

/// Number of bijections between components of zeta and xi that pair
/// translation-equivalent components.
std::size_t iso_count(const S& zeta, const S& xi);

}  // namespace brute
