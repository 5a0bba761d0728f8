#include "gerst/floorplan.hpp"

#include <algorithm>
#include <climits>
#include <optional>

namespace gerst {

std::size_t FloorPlan::cells() const {
  std::size_t n = 0;
  for (const auto& s : nu) n += s.size();
  return n;
}

Cells project(const Cells& cells) {
  std::vector<Point> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(c.project());
  if (out.empty()) return out;
  const int dim = out.front().dim();
  return make_cells(dim, std::move(out));
}

void validate_plan(const FloorPlan& plan) {
  if (plan.b.size() != plan.nu.size() || plan.c.size() != plan.nu.size())
    throw Error("nu, b and c must have the same length", "dimension");
  for (std::size_t j = 0; j < plan.nu.size(); ++j) {
    const auto& s = plan.nu[j];
    const std::string which = "component " + std::to_string(j + 1);
    if (s.dim() != 3) throw Error(which + " is not 3-dimensional", "dimension");
    if (plan.b[j].dim() != 2 || plan.c[j].dim() != 2)
      throw Error(which + " needs planar anchors", "dimension");
    if (!plan.b[j].nonnegative() || !plan.c[j].nonnegative())
      throw Error(which + " has a negative anchor", "nonnegative");
    if (!s.is_abstract()) throw Error(which + " is not abstract", "abstract");
    if (!s.is_connected()) throw Error(which + " is not connected", "connected");
  }
  for (Side side : {Side::B, Side::C}) {
    Cells seen;
    for (std::size_t j = 0; j < plan.nu.size(); ++j) {
      Cells p = translate(project(plan.nu[j].cells()), anchors(plan, side)[j]);
      if (!disjoint(seen, p))
        throw Error(std::string("projections overlap on the ") + (side == Side::B ? "b" : "c") +
                        " side at component " + std::to_string(j + 1),
                    "projection-overlap");
      seen = set_union(seen, p);
    }
  }
  for (Side side : {Side::B, Side::C}) hb_all(plan, side);
}

namespace {

struct Piece {
  Cells proj;  // placed projection
  HeightPair heights;
  Point anchor;
};

std::vector<Piece> pieces(const FloorPlan& plan, Side side) {
  std::vector<Piece> out;
  out.reserve(plan.nu.size());
  for (std::size_t j = 0; j < plan.nu.size(); ++j) {
    const Point& a = anchors(plan, side)[j];
    out.push_back({translate(project(plan.nu[j].cells()), a), height_functions(plan.nu[j]), a});
  }
  return out;
}

// Best witness weight for i below j, or nothing when unrelated.
std::optional<int> pair_weight(const Piece& pi, const Piece& pj) {
  std::optional<int> best;
  for (const auto& v : pi.proj) {
    const int low = pi.heights.lower(v - pi.anchor);
    for (const auto& w : pj.proj) {
      if (!v.leq(w)) continue;
      const int val = pj.heights.upper(w - pj.anchor) - low;
      if (!best || val > *best) best = val;
    }
  }
  return best;
}

void check_index(const FloorPlan& plan, std::size_t i) {
  if (i >= plan.nu.size()) throw Error("component index out of range", "index");
}

std::vector<int> longest_chains(const std::vector<Piece>& ps) {
  const std::size_t n = ps.size();
  std::vector<std::vector<std::optional<int>>> w(n, std::vector<std::optional<int>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) w[i][j] = pair_weight(ps[i], ps[j]);

  enum Mark : char { Fresh, Active, Done };
  std::vector<Mark> mark(n, Fresh);
  std::vector<int> f(n, 0);
  auto visit = [&](auto&& self, std::size_t j) -> void {
    mark[j] = Active;
    int best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!w[j][k]) continue;
      if (mark[k] == Active) throw Error("the comparability relation has a cycle", "acyclic");
      if (mark[k] == Fresh) self(self, k);
      best = std::max(best, *w[j][k] + f[k]);
    }
    f[j] = best;
    mark[j] = Done;
  };
  for (std::size_t j = 0; j < n; ++j)
    if (mark[j] == Fresh) visit(visit, j);
  return f;
}

}  // namespace

bool leq_b(const FloorPlan& plan, std::size_t i, std::size_t j, Side side) {
  check_index(plan, i);
  check_index(plan, j);
  const Point& bi = anchors(plan, side)[i];
  const Point& bj = anchors(plan, side)[j];
  const Cells pi = translate(project(plan.nu[i].cells()), bi);
  const Cells pj = translate(project(plan.nu[j].cells()), bj);
  for (const auto& v : pi)
    for (const auto& w : pj)
      if (v.leq(w)) return true;
  return false;
}

bool is_acyclic(const FloorPlan& plan, Side side) {
  try {
    hb_all(plan, side);
  } catch (const Error& e) {
    if (e.clause() != "acyclic") throw;
    return false;
  }
  return true;
}

int hb_pair(const FloorPlan& plan, std::size_t i, std::size_t j, Side side) {
  check_index(plan, i);
  check_index(plan, j);
  const auto ps = pieces(plan, side);
  auto w = pair_weight(ps[i], ps[j]);
  if (!w)
    throw Error("component " + std::to_string(i + 1) + " is not below component " +
                    std::to_string(j + 1),
                "unrelated");
  return *w;
}

std::vector<int> hb_all(const FloorPlan& plan, Side side) {
  return longest_chains(pieces(plan, side));
}

int hb(const FloorPlan& plan, std::size_t j, Side side) {
  check_index(plan, j);
  return hb_all(plan, side)[j];
}

std::vector<Point> Realization::b3() const {
  std::vector<Point> out;
  for (std::size_t j = 0; j < plan.b.size(); ++j) out.push_back(plan.b[j].lift(bz.at(j)));
  return out;
}

std::vector<Point> Realization::c3() const {
  std::vector<Point> out;
  for (std::size_t j = 0; j < plan.c.size(); ++j) out.push_back(plan.c[j].lift(cz.at(j)));
  return out;
}

Realization canonical_realization(const FloorPlan& plan) {
  validate_plan(plan);
  return {plan, hb_all(plan, Side::B), hb_all(plan, Side::C)};
}

GluingData assemble(const Realization& r) {
  if (r.bz.size() != r.plan.nu.size() || r.cz.size() != r.plan.nu.size())
    throw Error("third coordinates do not match the number of components", "dimension");
  GluingData g{StandardShape(3), StandardShape(3), r.plan.nu, r.b3(), r.c3()};
  g.lambda = StandardShape::closure_of(3, g.placed_b());
  g.mu = StandardShape::closure_of(3, g.placed_c());
  return g;
}

bool is_realization(const FloorPlan& plan, const std::vector<int>& bz,
                    const std::vector<int>& cz) {
  if (bz.size() != plan.nu.size() || cz.size() != plan.nu.size())
    throw Error("third coordinates do not match the number of components", "dimension");
  for (int z : bz)
    if (z < 0) return false;
  for (int z : cz)
    if (z < 0) return false;
  return validate_gluing(assemble({plan, bz, cz})).ok;
}

bool is_side_realization(const FloorPlan& plan, Side side, const std::vector<int>& z) {
  if (z.size() != plan.nu.size())
    throw Error("third coordinates do not match the number of components", "dimension");
  std::vector<Point> placed;
  std::vector<Cells> pieces_;
  for (std::size_t j = 0; j < plan.nu.size(); ++j) {
    if (z[j] < 0) return false;
    pieces_.push_back(translate(plan.nu[j].cells(), anchors(plan, side)[j].lift(z[j])));
    placed.insert(placed.end(), pieces_.back().begin(), pieces_.back().end());
  }
  const std::size_t total = placed.size();
  Cells all = make_cells(3, std::move(placed));
  if (all.size() != total) return false;  // overlap
  const Cells big = closure_leq(all);
  for (const auto& piece : pieces_) {
    for (const auto& v : piece) {
      for (int i = 0; i < 3; ++i) {
        Point w = v;
        ++w[i];
        if (contains(big, w) && !contains(piece, w)) return false;
      }
    }
  }
  return true;
}

int upper_height_lambda(const FloorPlan& plan, const Point& a, Side side) {
  const auto ps = pieces(plan, side);
  const auto h = longest_chains(ps);
  int best = 0;
  for (std::size_t j = 0; j < ps.size(); ++j)
    for (const auto& v : ps[j].proj)
      if (a.leq(v)) best = std::max(best, h[j] + ps[j].heights.upper(v - ps[j].anchor));
  return best;
}

bool is_right_free(const FloorPlan& plan) {
  for (int h : hb_all(plan, Side::B))
    if (h != 0) return false;
  return true;
}

}  // namespace gerst
