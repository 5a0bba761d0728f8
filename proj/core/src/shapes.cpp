#include "gerst/shapes.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace gerst {

namespace {

void require_nonnegative(const Cells& cells) {
  for (const auto& c : cells)
    if (!c.nonnegative())
      throw Error("cell " + c.str() + " has a negative coordinate", "nonnegative");
}

// Calls f on every point q with 0 <= q <= p.
template <class F>
void for_each_below(const Point& p, F&& f) {
  Point q(p.dim());
  while (true) {
    f(q);
    int i = 0;
    for (; i < p.dim(); ++i) {
      if (q[i] < p[i]) {
        ++q[i];
        break;
      }
      q[i] = 0;
    }
    if (i == p.dim()) return;
  }
}

}  // namespace

Cells closure_leq(const Cells& cells) {
  if (cells.empty()) return {};
  std::vector<Point> out;
  for (const auto& c : cells) for_each_below(c, [&](const Point& q) { out.push_back(q); });
  return make_cells(cells.front().dim(), std::move(out));
}

bool is_downward_closed(const Cells& cells) {
  for (const auto& c : cells) {
    for (int i = 0; i < c.dim(); ++i) {
      if (c[i] == 0) continue;
      Point q = c;
      --q[i];
      if (!contains(cells, q)) return false;
    }
  }
  return true;
}

bool is_skew_shape(const Cells& cells) {
  return is_downward_closed(set_difference(closure_leq(cells), cells));
}

// -- StandardShape ----------------------------------------------------------

StandardShape::StandardShape(int dim, std::vector<Point> cells)
    : dim_(dim), cells_(make_cells(dim, std::move(cells))) {
  require_nonnegative(cells_);
  if (!is_downward_closed(cells_))
    throw Error("cell set is not closed under <=", "downward-closed");
}

StandardShape StandardShape::closure_of(int dim, const Cells& cells) {
  for (const auto& c : cells)
    if (c.dim() != dim) throw Error("dimension mismatch", "dimension");
  require_nonnegative(cells);
  return StandardShape(Trusted{}, dim, closure_leq(cells));
}

// -- SkewShape --------------------------------------------------------------

SkewShape::SkewShape(int dim, std::vector<Point> cells)
    : dim_(dim), cells_(make_cells(dim, std::move(cells))), outer_(dim), inner_(dim) {
  require_nonnegative(cells_);
  outer_ = StandardShape::closure_of(dim, cells_);
  Cells in = set_difference(outer_.cells(), cells_);
  if (!is_downward_closed(in))
    throw Error("cells do not form a skew shape: closure minus cells is not closed under <=",
                "skew");
  inner_ = StandardShape(dim, std::move(in));
}

SkewShape::SkewShape(const StandardShape& s)
    : dim_(s.dim()), cells_(s.cells()), outer_(s), inner_(s.dim()) {}

bool SkewShape::is_abstract() const { return !empty() && gerst::meet(cells_).is_origin(); }

bool SkewShape::is_connected() const { return connected_components(*this).size() <= 1; }

Point meet(const SkewShape& s) { return meet(s.cells()); }

SkewShape normalize(const SkewShape& s) {
  Point m = meet(s);
  Point neg(s.dim());
  for (int i = 0; i < s.dim(); ++i) neg[i] = -m[i];
  return translate(s, neg);
}

SkewShape translate(const SkewShape& s, const Point& v) {
  if (v.dim() != s.dim()) throw Error("translation dimension mismatch", "dimension");
  return SkewShape(s.dim(), translate(s.cells(), v));
}

std::vector<SkewShape> connected_components(const SkewShape& s) {
  const Cells& cells = s.cells();
  const std::size_t n = cells.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Point>> groups;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::deque<std::size_t> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      const std::size_t k = queue.front();
      queue.pop_front();
      groups.back().push_back(cells[k]);
      for (int axis = 0; axis < s.dim(); ++axis) {
        for (int step : {-1, 1}) {
          Point q = cells[k];
          q[axis] += step;
          auto it = std::lower_bound(cells.begin(), cells.end(), q);
          if (it == cells.end() || *it != q) continue;
          const auto idx = static_cast<std::size_t>(it - cells.begin());
          if (comp[idx] < 0) {
            comp[idx] = id;
            queue.push_back(idx);
          }
        }
      }
    }
  }
  std::vector<SkewShape> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.emplace_back(s.dim(), std::move(g));
  std::sort(out.begin(), out.end(),
            [](const SkewShape& a, const SkewShape& b) { return meet(a) < meet(b); });
  return out;
}

bool translation_equivalent(const SkewShape& s, const SkewShape& t) {
  if (s.empty() || t.empty()) return s.empty() && t.empty();
  if (s.dim() != t.dim() || s.size() != t.size()) return false;
  return normalize(s) == normalize(t);
}

// -- HeightPair -------------------------------------------------------------

HeightPair::HeightPair(Map upper, Map lower) {
  for (auto& [a, v] : upper) set_upper(a, v);
  for (auto& [a, v] : lower) set_lower(a, v);
}

int HeightPair::upper(const Point& a) const {
  auto it = upper_.find(a);
  return it == upper_.end() ? 0 : it->second;
}

int HeightPair::lower(const Point& a) const {
  auto it = lower_.find(a);
  return it == lower_.end() ? 0 : it->second;
}

void HeightPair::set_upper(const Point& a, int v) {
  if (a.dim() != 2 || !a.nonnegative()) throw Error("height argument must lie in N^2", "dimension");
  if (v < 0) throw Error("heights are natural numbers", "nonnegative");
  if (v == 0) upper_.erase(a);
  else upper_[a] = v;
}

void HeightPair::set_lower(const Point& a, int v) {
  if (a.dim() != 2 || !a.nonnegative()) throw Error("height argument must lie in N^2", "dimension");
  if (v < 0) throw Error("heights are natural numbers", "nonnegative");
  if (v == 0) lower_.erase(a);
  else lower_[a] = v;
}

std::optional<std::string> HeightPair::violation(bool allow_empty) const {
  if (!allow_empty && upper_.empty()) return "(i) upper nonzero";
  for (const auto& [a, v] : lower_)
    if (upper(a) < v) return "(iii) upper >= lower";
  auto nonincreasing = [](const Map& m, auto value) {
    for (const auto& [a, v] : m) {
      for (int i = 0; i < 2; ++i) {
        if (a[i] == 0) continue;
        Point q = a;
        --q[i];
        if (value(q) < v) return false;
      }
    }
    return true;
  };
  if (!nonincreasing(upper_, [&](const Point& q) { return upper(q); }) ||
      !nonincreasing(lower_, [&](const Point& q) { return lower(q); }))
    return "(iv) nonincreasing";
  for (const auto& [a, v] : lower_) {
    if (upper(a) != v) continue;
    bool covered = false;
    for (const auto& [b, w] : upper_) {
      if (b != a && a.leq(b) && w == v && lower(b) < w) {
        covered = true;
        break;
      }
    }
    if (!covered) return "(v) flat columns covered";
  }
  return std::nullopt;
}

HeightPair height_functions(const SkewShape& s) {
  if (s.dim() != 3) throw Error("height functions need a 3-D shape", "dimension");
  // Columns of a standard shape are intervals [0, h), so counting cells gives the height.
  std::map<Point, int> up;
  std::map<Point, int> low;
  for (const auto& c : s.outer().cells()) ++up[c.project()];
  for (const auto& c : s.inner().cells()) ++low[c.project()];
  return HeightPair(std::move(up), std::move(low));
}

SkewShape shape_from_heights(const HeightPair& hp) {
  if (auto v = hp.violation(/*allow_empty=*/true))
    throw Error("height pair violates condition " + *v, *v);
  std::vector<Point> cells;
  for (const auto& [a, top] : hp.upper_map())
    for (int z = hp.lower(a); z < top; ++z) cells.push_back(a.lift(z));
  SkewShape s(3, std::move(cells));
  if (!s.empty() && !s.is_abstract())
    throw Error("height pair describes a skew shape whose meet " + meet(s).str() +
                    " is not the origin",
                "abstract");
  return s;
}

bool contains_cell(const HeightPair& hp, const Point& a, int a3) {
  return hp.lower(a) <= a3 && a3 < hp.upper(a);
}

// -- paths ------------------------------------------------------------------

Cells rectangle(const Point& r, const Point& s) {
  if (r.dim() != 2 || s.dim() != 2) throw Error("rectangles live in N^2", "dimension");
  std::vector<Point> out;
  for (int x = std::min(r[0], s[0]); x <= std::max(r[0], s[0]); ++x)
    for (int y = std::min(r[1], s[1]); y <= std::max(r[1], s[1]); ++y) out.push_back({x, y});
  return make_cells(2, std::move(out));
}

bool is_path(const Path& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Point d = path[i] - path[i - 1];
    int l1 = 0;
    for (int k = 0; k < d.dim(); ++k) l1 += std::abs(d[k]);
    if (l1 != 1) return false;
  }
  return true;
}

namespace {

std::array<Point, 2> steps_for(Direction dir) {
  switch (dir) {
    case Direction::NorthEast: return {Point{1, 0}, Point{0, 1}};
    case Direction::NorthWest: return {Point{-1, 0}, Point{0, 1}};
    case Direction::SouthEast: return {Point{1, 0}, Point{0, -1}};
    case Direction::SouthWest: return {Point{-1, 0}, Point{0, -1}};
  }
  return {Point{1, 0}, Point{0, 1}};
}

}  // namespace

bool is_unidirectional(const Path& path, Direction* dir) {
  if (!is_path(path)) return false;
  for (Direction d : {Direction::NorthEast, Direction::NorthWest, Direction::SouthEast,
                      Direction::SouthWest}) {
    const auto steps = steps_for(d);
    bool ok = true;
    for (std::size_t i = 1; i < path.size() && ok; ++i) {
      const Point step = path[i] - path[i - 1];
      ok = step == steps[0] || step == steps[1];
    }
    if (ok) {
      if (dir) *dir = d;
      return true;
    }
  }
  return false;
}

Path find_unidirectional_path(const SkewShape& sigma, const Point& r, const Point& s) {
  if (sigma.dim() != 2) throw Error("unidirectional paths are defined in N^2", "dimension");
  if (!sigma.contains(r)) throw Error("start " + r.str() + " is not in the shape", "endpoint");
  if (!sigma.contains(s)) throw Error("end " + s.str() + " is not in the shape", "endpoint");
  if (!sigma.is_connected()) throw Error("shape is not connected", "connected");

  const bool east = s[0] >= r[0];
  const bool north = s[1] >= r[1];
  const Direction dir = north ? (east ? Direction::NorthEast : Direction::NorthWest)
                              : (east ? Direction::SouthEast : Direction::SouthWest);
  const auto steps = steps_for(dir);

  // Breadth-first search over monotone steps; every reachable point stays in the rectangle.
  const Cells rect = rectangle(r, s);
  std::map<Point, Point> parent;
  std::deque<Point> queue{r};
  parent.emplace(r, r);
  while (!queue.empty()) {
    const Point v = queue.front();
    queue.pop_front();
    if (v == s) break;
    for (const auto& st : steps) {
      const Point w = v + st;
      if (!contains(rect, w) || !sigma.contains(w) || parent.count(w)) continue;
      parent.emplace(w, v);
      queue.push_back(w);
    }
  }
  if (!parent.count(s))
    throw Error("no unidirectional path from " + r.str() + " to " + s.str() +
                    " (input is not a connected skew shape)",
                "internal");
  Path path{s};
  while (path.back() != r) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

// -- ideals -----------------------------------------------------------------

StandardShape ideal_to_shape(int dim, const Generators& gens) {
  if (dim < 1 || dim > kMaxDim) throw Error("dimension out of range", "dimension");
  for (const auto& g : gens) {
    if (g.dim() != dim) throw Error("generator " + g.str() + " has wrong dimension", "dimension");
    if (!g.nonnegative()) throw Error("generator " + g.str() + " has a negative exponent", "nonnegative");
  }
  Point bound(dim);
  for (int axis = 0; axis < dim; ++axis) {
    int best = -1;
    for (const auto& g : gens) {
      bool pure = true;
      for (int k = 0; k < dim; ++k)
        if (k != axis && g[k] != 0) pure = false;
      if (pure && (best < 0 || g[axis] < best)) best = g[axis];
    }
    if (best < 0)
      throw Error("ideal has infinite colength: no pure power of x" + std::to_string(axis + 1),
                  "finite-colength");
    if (best == 0) return StandardShape(dim);  // unit ideal
    bound[axis] = best - 1;
  }
  std::vector<Point> cells;
  for_each_below(bound, [&](const Point& q) {
    for (const auto& g : gens)
      if (g.leq(q)) return;
    cells.push_back(q);
  });
  return StandardShape(dim, std::move(cells));
}

Generators shape_to_ideal(const StandardShape& shape) {
  const int dim = shape.dim();
  if (shape.empty()) return {Point(dim)};
  std::vector<Point> out;
  for (const auto& c : shape.cells()) {
    for (int i = 0; i < dim; ++i) {
      Point q = c;
      ++q[i];
      if (shape.contains(q)) continue;
      bool minimal = true;
      for (int k = 0; k < dim && minimal; ++k) {
        if (q[k] == 0) continue;
        Point r = q;
        --r[k];
        minimal = shape.contains(r);
      }
      if (minimal) out.push_back(q);
    }
  }
  return make_cells(dim, std::move(out));
}

}  // namespace gerst
