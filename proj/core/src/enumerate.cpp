#include "gerst/enumerate.hpp"

#include <algorithm>
#include <set>

namespace gerst {

namespace {

std::vector<Cells> grow(const std::vector<Cells>& prev, int dim) {
  std::set<Cells> out;
  for (const auto& s : prev) {
    for (const auto& c : s) {
      for (int axis = 0; axis < dim; ++axis) {
        for (int step : {-1, 1}) {
          Point nb = c;
          nb[axis] += step;
          if (contains(s, nb)) continue;
          std::vector<Point> next(s.begin(), s.end());
          next.push_back(nb);
          if (nb[axis] < 0) next = translate(next, Point::unit(dim, axis));
          Cells cand = make_cells(dim, std::move(next));
          if (is_skew_shape(cand)) out.insert(std::move(cand));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<std::vector<SkewShape>> connected_shapes_upto(int dim, int max_cells) {
  if (dim < 1 || dim > kMaxDim) throw Error("dimension out of range", "dimension");
  std::vector<std::vector<SkewShape>> out(static_cast<std::size_t>(std::max(max_cells, 0) + 1));
  if (max_cells < 1) return out;
  // Every connected skew shape with k+1 cells arises from one with k cells by
  // adding a neighbour; the tests confirm this against brute force.
  std::vector<Cells> level{Cells{Point(dim)}};
  for (int k = 1; k <= max_cells; ++k) {
    if (k > 1) level = grow(level, dim);
    auto& dst = out[static_cast<std::size_t>(k)];
    for (const auto& cells : level) dst.emplace_back(dim, cells);
    std::sort(dst.begin(), dst.end());
  }
  return out;
}

std::vector<SkewShape> enumerate_connected_shapes(int dim, int cells) {
  if (cells < 1) return {};
  return std::move(connected_shapes_upto(dim, cells).back());
}

std::vector<std::vector<int>> shape_tuples(const std::vector<int>& sizes, int max_len,
                                           int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int total) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int i = start; i < static_cast<int>(sizes.size()); ++i) {
      if (total + sizes[static_cast<std::size_t>(i)] > max_total) continue;
      cur.push_back(i);
      self(self, i, total + sizes[static_cast<std::size_t>(i)]);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_planar_placement(const std::vector<const SkewShape*>& shapes, int w, int h,
                               const std::function<void(const std::vector<Point>&)>& f) {
  if (w * h > 64) throw Error("placement box larger than 64 cells", "box");
  struct Option {
    Point anchor;
    std::uint64_t mask;
  };
  std::vector<std::vector<Option>> options;
  for (const SkewShape* s : shapes) {
    Cells proj;
    for (const auto& c : s->cells()) {
      Point p(2);
      p[0] = c[0];
      p[1] = c[1];
      proj.push_back(p);
    }
    std::vector<Option> opts;
    for (int x = 0; x < w; ++x) {
      for (int y = 0; y < h; ++y) {
        std::uint64_t m = 0;
        bool inside = true;
        for (const auto& p : proj) {
          const int px = p[0] + x, py = p[1] + y;
          if (px >= w || py >= h) {
            inside = false;
            break;
          }
          m |= std::uint64_t{1} << (px * h + py);
        }
        if (inside) opts.push_back({Point{x, y}, m});
      }
    }
    options.push_back(std::move(opts));
  }
  std::vector<Point> cur(shapes.size());
  auto rec = [&](auto&& self, std::size_t j, std::uint64_t used) -> void {
    if (j == shapes.size()) {
      f(cur);
      return;
    }
    for (const auto& o : options[j]) {
      if (o.mask & used) continue;
      cur[j] = o.anchor;
      self(self, j + 1, used | o.mask);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace gerst
