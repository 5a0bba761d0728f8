#include "gerst/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "gerst/enumerate.hpp"
#include "gerst/floorplan.hpp"
#include "gerst/io.hpp"
#include "gerst/oracle.hpp"
#include "gerst/reduction.hpp"

namespace gerst {

void SearchBounds::check() const {
  if (max_components < 1 || max_cells < 1 || w < 1 || h < 1 || depth < 1)
    throw Error("search bounds must be positive", "bounds");
  if (max_third_offset < 0) throw Error("max_third_offset must be nonnegative", "bounds");
}

std::uint64_t CampaignReport::counter(const std::string& key) const {
  for (const auto& [k, v] : counters)
    if (k == key) return v;
  return 0;
}

int default_jobs() {
  if (const char* env = std::getenv("GERST_JOBS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Dynamic scheduling over items; fn(i) must only touch slot i.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = n;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

struct Tally {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;

  explicit Tally(std::size_t ncounts = 0) : counts(ncounts, 0) {}

  void violate(const json& what) {
    ++violations;
    if (samples.size() < kMaxStoredViolations) samples.push_back(what.dump());
  }
};

CampaignReport merge(std::string name, const SearchBounds& bounds,
                     const std::vector<std::string>& counter_names, const std::vector<Tally>& parts,
                     Clock::time_point t0) {
  CampaignReport r;
  r.name = std::move(name);
  r.bounds = bounds;
  std::vector<std::uint64_t> sums(counter_names.size(), 0);
  for (const auto& t : parts) {
    r.instances_checked += t.checked;
    for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += t.counts[k];
    r.violation_count += t.violations;
    for (const auto& s : t.samples)
      if (r.violations.size() < kMaxStoredViolations) r.violations.push_back(s);
  }
  for (std::size_t k = 0; k < sums.size(); ++k) r.counters.emplace_back(counter_names[k], sums[k]);
  r.wall_time = seconds_since(t0);
  return r;
}

struct Catalog {
  std::vector<SkewShape> shapes;
  std::vector<int> sizes;
  std::vector<std::vector<int>> tuples;
};

Catalog catalog(int dim, int max_components, int max_cells) {
  Catalog c;
  for (auto& level : connected_shapes_upto(dim, max_cells))
    for (auto& s : level) {
      c.sizes.push_back(static_cast<int>(s.size()));
      c.shapes.push_back(std::move(s));
    }
  c.tuples = shape_tuples(c.sizes, max_components, max_cells);
  return c;
}

std::vector<SkewShape> pick(const Catalog& c, const std::vector<int>& t) {
  std::vector<SkewShape> out;
  for (int i : t) out.push_back(c.shapes[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<const SkewShape*> pointers(const std::vector<SkewShape>& v) {
  std::vector<const SkewShape*> out;
  for (const auto& s : v) out.push_back(&s);
  return out;
}

// -- floor-plan campaigns ----------------------------------------------------

CampaignReport canonical_minimality(const SearchBounds& b, int jobs) {
  const auto t0 = Clock::now();
  const Catalog cat = catalog(3, b.max_components, b.max_cells);
  const std::vector<std::string> names{"half_plans", "plans_covered", "realizations_tested",
                                       "valid_realizations", "cyclic_skipped"};
  std::vector<Tally> parts(cat.tuples.size(), Tally(names.size()));
  parallel_for(cat.tuples.size(), jobs, [&](std::size_t item) {
    Tally& t = parts[item];
    const auto nu = pick(cat, cat.tuples[item]);
    std::uint64_t halves = 0;
    for_each_planar_placement(pointers(nu), b.w, b.h, [&](const std::vector<Point>& anchors) {
      const FloorPlan plan{nu, anchors, anchors};
      if (!is_acyclic(plan, Side::B)) {
        ++t.counts[4];
        return;
      }
      ++halves;
      ++t.checked;
      const auto hb = hb_all(plan, Side::B);
      if (!is_side_realization(plan, Side::B, hb)) {
        t.violate({{"kind", "canonical-invalid"}, {"plan", to_json(plan)}, {"bz", hb}});
        return;
      }
      std::vector<int> z(nu.size(), 0);
      while (true) {
        ++t.counts[2];
        if (is_side_realization(plan, Side::B, z)) {
          ++t.counts[3];
          for (std::size_t j = 0; j < z.size(); ++j) {
            if (z[j] < hb[j]) {
              t.violate({{"kind", "below-canonical"}, {"plan", to_json(plan)}, {"bz", z},
                         {"canonical", hb}});
              break;
            }
          }
        }
        std::size_t j = 0;
        for (; j < z.size(); ++j) {
          if (z[j] < hb[j] + b.max_third_offset) {
            ++z[j];
            break;
          }
          z[j] = 0;
        }
        if (j == z.size()) break;
      }
    });
    t.counts[0] = halves;
    t.counts[1] = halves * halves;
  });
  return merge("canonical-minimality", b, names, parts, t0);
}

CampaignReport height_drop(const SearchBounds& b, int jobs) {
  const auto t0 = Clock::now();
  const Catalog cat = catalog(3, b.max_components, b.max_cells);
  const std::vector<std::string> names{"half_plans", "plans_covered", "reduction_steps",
                                       "cyclic_skipped"};
  std::vector<Tally> parts(cat.tuples.size(), Tally(names.size()));
  parallel_for(cat.tuples.size(), jobs, [&](std::size_t item) {
    Tally& t = parts[item];
    const auto nu = pick(cat, cat.tuples[item]);
    std::uint64_t halves = 0;
    for_each_planar_placement(pointers(nu), b.w, b.h, [&](const std::vector<Point>& anchors) {
      const FloorPlan plan{nu, anchors, anchors};
      if (!is_acyclic(plan, Side::B)) {
        ++t.counts[3];
        return;
      }
      ++halves;
      ++t.checked;
      // Each side only sees its own anchors, so c = b covers both sides.
      std::vector<FloorPlan> chain;
      try {
        chain = reduce_to_fixpoint(plan);
      } catch (const Error& e) {
        t.violate({{"kind", "reduction-failed"}, {"plan", to_json(plan)}, {"error", e.what()}});
        return;
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (chain[k + 1].nu.empty()) continue;
        ++t.counts[2];
        if (!verify_height_drop(chain[k]))
          t.violate({{"kind", "height-drop"}, {"plan", to_json(chain[k])}, {"step", k}});
      }
    });
    t.counts[0] = halves;
    t.counts[1] = halves * halves;
  });
  return merge("height-drop", b, names, parts, t0);
}

CampaignReport rightfree_not_counterexample(const SearchBounds& b, int jobs) {
  const auto t0 = Clock::now();
  const Catalog cat = catalog(3, b.max_components, b.max_cells);
  const std::vector<std::string> names{"half_plans", "right_free_halves", "oracle_runs",
                                       "cyclic_skipped"};
  std::vector<Tally> parts(cat.tuples.size(), Tally(names.size()));
  struct Half {
    std::vector<Point> anchors;
    std::vector<Point> lifted;
    StandardShape closure;
    bool right_free;
  };
  parallel_for(cat.tuples.size(), jobs, [&](std::size_t item) {
    Tally& t = parts[item];
    const auto nu = pick(cat, cat.tuples[item]);
    std::vector<Half> halves;
    for_each_planar_placement(pointers(nu), b.w, b.h, [&](const std::vector<Point>& anchors) {
      const FloorPlan plan{nu, anchors, anchors};
      if (!is_acyclic(plan, Side::B)) {
        ++t.counts[3];
        return;
      }
      const auto hb = hb_all(plan, Side::B);
      Realization r{plan, hb, hb};
      const bool rf = std::all_of(hb.begin(), hb.end(), [](int x) { return x == 0; });
      halves.push_back({anchors, r.b3(), StandardShape::closure_of(3, assemble(r).placed_b()), rf});
    });
    t.counts[0] = halves.size();
    std::size_t glued = 0;
    for (const auto& s : nu) glued += s.size();
    for (const auto& x : halves) {
      if (!x.right_free) continue;
      ++t.counts[1];
      for (const auto& y : halves) {
        ++t.checked;
        const GluingData g{x.closure, y.closure, nu, x.lifted, y.lifted};
        const FloorPlan plan{nu, x.anchors, y.anchors};
        const std::size_t meet_size = set_intersection(g.lambda.cells(), g.mu.cells()).size();
        if (glued > meet_size) {
          t.violate({{"kind", "counterexample"}, {"plan", to_json(plan)}});
          continue;
        }
        ++t.counts[2];
        const auto res = verify_gq(g);
        if (!res.holds || !res.matches_union)
          t.violate({{"kind", "oracle"}, {"plan", to_json(plan)}, {"result", to_json(res)}});
      }
    }
  });
  return merge("rightfree-not-counterexample", b, names, parts, t0);
}

// -- gluing data with the oracle ----------------------------------------------

struct Box3 {
  int w, h, d;
  int index(const Point& p) const { return (p[0] * h + p[1]) * d + p[2]; }
  Point point(int k) const { return Point{k / (h * d), (k / d) % h, k % d}; }
  bool inside(const Point& p) const {
    return p[0] >= 0 && p[1] >= 0 && p[2] >= 0 && p[0] < w && p[1] < h && p[2] < d;
  }
  int cells() const { return w * h * d; }
};

struct Placement {
  int anchor;           // box index of the anchor
  std::uint64_t mask;   // placed cells
  std::uint64_t down;   // their closure
  std::uint64_t up;     // cells one step above a placed cell
};

CampaignReport oracle_bridge(const SearchBounds& bnd, int jobs) {
  const auto t0 = Clock::now();
  const Box3 box{bnd.w, bnd.h, bnd.depth};
  if (box.cells() > 64) throw Error("oracle-bridge needs a box of at most 64 cells", "bounds");
  const Catalog cat = catalog(3, bnd.max_components, bnd.max_cells);
  const std::size_t nshapes = cat.shapes.size();

  // Coordinate permutations that preserve the box.
  const std::array<std::array<int, 3>, 6> all_perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const std::array<int, 3> dims{box.w, box.h, box.d};
  std::vector<std::array<int, 3>> perms;
  for (const auto& p : all_perms)
    if (dims[p[0]] == dims[0] && dims[p[1]] == dims[1] && dims[p[2]] == dims[2]) perms.push_back(p);
  auto permute = [](const Point& a, const std::array<int, 3>& p) {
    return Point{a[p[0]], a[p[1]], a[p[2]]};
  };
  std::map<Cells, int> id_of;
  for (std::size_t s = 0; s < nshapes; ++s) id_of[cat.shapes[s].cells()] = static_cast<int>(s);
  std::vector<std::vector<int>> shape_perm(perms.size(), std::vector<int>(nshapes));
  for (std::size_t g = 0; g < perms.size(); ++g)
    for (std::size_t s = 0; s < nshapes; ++s) {
      std::vector<Point> moved;
      for (const auto& c : cat.shapes[s].cells()) moved.push_back(permute(c, perms[g]));
      shape_perm[g][s] = id_of.at(make_cells(3, std::move(moved)));
    }
  std::vector<std::vector<int>> point_perm(perms.size(), std::vector<int>(static_cast<std::size_t>(box.cells())));
  for (std::size_t g = 0; g < perms.size(); ++g)
    for (int k = 0; k < box.cells(); ++k)
      point_perm[g][static_cast<std::size_t>(k)] = box.index(permute(box.point(k), perms[g]));

  // Closure and upper neighbours inside the box, per cell.
  std::vector<std::uint64_t> down_of(static_cast<std::size_t>(box.cells()), 0);
  std::vector<std::uint64_t> up_of(static_cast<std::size_t>(box.cells()), 0);
  for (int k = 0; k < box.cells(); ++k) {
    const Point p = box.point(k);
    for (int j = 0; j < box.cells(); ++j)
      if (box.point(j).leq(p)) down_of[static_cast<std::size_t>(k)] |= std::uint64_t{1} << j;
    for (int i = 0; i < 3; ++i) {
      Point q = p;
      ++q[i];
      if (box.inside(q)) up_of[static_cast<std::size_t>(k)] |= std::uint64_t{1} << box.index(q);
    }
  }
  std::vector<std::vector<Placement>> places(nshapes);
  for (std::size_t s = 0; s < nshapes; ++s) {
    for (int k = 0; k < box.cells(); ++k) {
      const Point a = box.point(k);
      Placement pl{k, 0, 0, 0};
      bool inside = true;
      for (const auto& c : cat.shapes[s].cells()) {
        const Point q = c + a;
        if (!box.inside(q)) {
          inside = false;
          break;
        }
        const auto qi = static_cast<std::size_t>(box.index(q));
        pl.mask |= std::uint64_t{1} << qi;
        pl.down |= down_of[qi];
        pl.up |= up_of[qi];
      }
      if (inside) places[s].push_back(pl);
    }
  }
  auto cells_of = [&](std::uint64_t m) {
    std::vector<Point> out;
    for (; m; m &= m - 1) out.push_back(box.point(std::countr_zero(m)));
    return make_cells(3, std::move(out));
  };

  const std::vector<std::string> names{"instances_total", "instances_covered", "counterexamples",
                                       "oracle_runs"};
  std::vector<Tally> parts(cat.tuples.size(), Tally(names.size()));
  parallel_for(cat.tuples.size(), jobs, [&](std::size_t item) {
    Tally& t = parts[item];
    const auto& tuple = cat.tuples[item];
    const std::size_t l = tuple.size();
    // Valid one-sided placements, as index tuples into places[].
    std::vector<std::vector<const Placement*>> halves;
    std::vector<const Placement*> cur(l);
    auto rec = [&](auto&& self, std::size_t j, std::uint64_t used, std::uint64_t down) -> void {
      if (j == l) {
        for (std::size_t i = 0; i < l; ++i)
          if (cur[i]->up & down & ~cur[i]->mask) return;
        halves.push_back(cur);
        return;
      }
      for (const auto& pl : places[static_cast<std::size_t>(tuple[j])]) {
        if (pl.mask & used) continue;
        cur[j] = &pl;
        self(self, j + 1, used | pl.mask, down | pl.down);
      }
    };
    rec(rec, 0, 0, 0);
    std::uint64_t orderings = 1;
    for (std::size_t i = 1; i <= l; ++i) orderings *= i;
    std::uint64_t dup = 1;
    for (std::size_t i = 0, run = 1; i < l; ++i) {
      run = (i > 0 && tuple[i] == tuple[i - 1]) ? run + 1 : 1;
      dup *= run;
    }
    const std::uint64_t nh = halves.size();
    t.counts[0] = nh * nh * (orderings / dup);

    std::vector<SkewShape> nu = pick(cat, tuple);
    using Comp = std::uint32_t;  // shape, b index, c index
    auto pack = [](int s, int bi, int ci) {
      return static_cast<Comp>((s << 16) | (bi << 8) | ci);
    };
    std::vector<Comp> base(l), img(l);
    std::vector<std::vector<Comp>> images;
    for (const auto& hb : halves) {
      for (const auto& hc : halves) {
        for (std::size_t j = 0; j < l; ++j) base[j] = pack(tuple[j], hb[j]->anchor, hc[j]->anchor);
        if (!std::is_sorted(base.begin(), base.end()) ||
            std::adjacent_find(base.begin(), base.end()) != base.end())
          continue;
        images.clear();
        bool canonical = true;
        for (int swap = 0; swap < 2 && canonical; ++swap) {
          for (std::size_t g = 0; g < perms.size(); ++g) {
            for (std::size_t j = 0; j < l; ++j) {
              const int s = shape_perm[g][static_cast<std::size_t>(tuple[j])];
              const int bi = point_perm[g][static_cast<std::size_t>(swap ? hc[j]->anchor : hb[j]->anchor)];
              const int ci = point_perm[g][static_cast<std::size_t>(swap ? hb[j]->anchor : hc[j]->anchor)];
              img[j] = pack(s, bi, ci);
            }
            std::sort(img.begin(), img.end());
            if (img < base) {
              canonical = false;
              break;
            }
            images.push_back(img);
          }
        }
        if (!canonical) continue;
        std::sort(images.begin(), images.end());
        const auto distinct =
            static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
        const std::uint64_t weight = distinct * orderings;
        ++t.checked;
        t.counts[1] += weight;

        std::uint64_t lam = 0, mu = 0;
        std::vector<Point> bs, cs;
        for (std::size_t j = 0; j < l; ++j) {
          lam |= hb[j]->down;
          mu |= hc[j]->down;
          bs.push_back(box.point(hb[j]->anchor));
          cs.push_back(box.point(hc[j]->anchor));
        }
        const GluingData g{StandardShape(3, cells_of(lam)), StandardShape(3, cells_of(mu)), nu, bs,
                           cs};
        const bool cex = is_counterexample(g);
        if (cex) t.counts[2] += weight;
        std::size_t dims_seen = 0;
        for (std::uint32_t p : {kDefaultPrime, kCheckPrime}) {
          ++t.counts[3];
          const auto r = verify_gq(g, p);
          if (cex != (r.dim_alg > r.dim_n) || !r.matches_union)
            t.violate({{"kind", "oracle-bridge"}, {"gluing", to_json(g)}, {"result", to_json(r)}});
          if (dims_seen == 0) dims_seen = r.dim_alg;
          else if (dims_seen != r.dim_alg)
            t.violate({{"kind", "prime-dependence"}, {"gluing", to_json(g)}});
        }
      }
    }
  });
  auto report = merge("oracle-bridge", bnd, names, parts, t0);
  if (report.counter("instances_total") != report.counter("instances_covered")) {
    ++report.violation_count;
    report.violations.push_back(json{{"kind", "orbit-coverage"}}.dump());
  }
  return report;
}

// -- planar right-free configurations ------------------------------------------

struct PlanarPlacement {
  Point anchor;
  std::uint64_t mask;
  std::uint64_t down;
  std::uint64_t up;  // cells >= some placed cell, inside the box
};

std::vector<PlanarPlacement> planar_places(const SkewShape& s, int w, int h) {
  std::vector<PlanarPlacement> out;
  auto bit = [h](int x, int y) { return std::uint64_t{1} << (x * h + y); };
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < h; ++y) {
      PlanarPlacement pl{Point{x, y}, 0, 0, 0};
      bool inside = true;
      for (const auto& c : s.cells()) {
        const int px = c[0] + x, py = c[1] + y;
        if (px >= w || py >= h) {
          inside = false;
          break;
        }
        pl.mask |= bit(px, py);
        for (int u = 0; u < w; ++u)
          for (int v = 0; v < h; ++v) {
            if (u <= px && v <= py) pl.down |= bit(u, v);
            if (u >= px && v >= py) pl.up |= bit(u, v);
          }
      }
      if (inside) out.push_back(pl);
    }
  return out;
}

// Keeps the masks with no proper submask in the set.
std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint64_t> out;
  for (auto m : v) {
    bool dominated = false;
    for (auto k : out)
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace

SmallIntersectionReport search_small_intersection(int max_components, int max_cells, int w,
                                                  int h, int shards, int shard, int jobs) {
  const auto t0 = Clock::now();
  if (max_components < 1 || max_cells < 1 || w < 1 || h < 1)
    throw Error("search bounds must be positive", "bounds");
  if (w * h > 64) throw Error("box larger than 64 cells", "bounds");
  if (shards < 1 || shard < 0 || shard >= shards) throw Error("bad shard selection", "bounds");
  SmallIntersectionReport rep;
  rep.max_components = max_components;
  rep.max_cells = max_cells;
  rep.w = w;
  rep.h = h;
  rep.shards = shards;
  rep.shard = shard;

  const Catalog cat = catalog(2, max_components, max_cells);
  std::vector<std::vector<PlanarPlacement>> places;
  for (const auto& s : cat.shapes) places.push_back(planar_places(s, w, h));
  std::vector<std::size_t> mine;
  for (std::size_t i = 0; i < cat.tuples.size(); ++i)
    if (cat.tuples[i].front() % shards == shard) mine.push_back(i);

  struct Part {
    std::uint64_t candidates = 0;
    std::vector<RightFreeConfig> witnesses;
  };
  std::vector<Part> parts(mine.size());
  parallel_for(mine.size(), jobs, [&](std::size_t item) {
    const auto& tuple = cat.tuples[mine[item]];
    const std::size_t l = tuple.size();
    int total = 0;
    for (int i : tuple) total += cat.sizes[static_cast<std::size_t>(i)];

    // First placement reaching each closure mask, per side.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> lam_seen, mu_seen;
    std::uint64_t nb = 0, nc = 0;
    std::vector<std::size_t> cur(l);
    auto rec_b = [&](auto&& self, std::size_t j, std::uint64_t below, std::uint64_t above,
                     std::uint64_t down) -> void {
      if (j == l) {
        ++nb;
        lam_seen.try_emplace(down, cur);
        return;
      }
      const auto& opts = places[static_cast<std::size_t>(tuple[j])];
      for (std::size_t k = 0; k < opts.size(); ++k) {
        const auto& pl = opts[k];
        // Incomparable with every earlier piece, in both directions.
        if (pl.mask & (below | above)) continue;
        cur[j] = k;
        self(self, j + 1, below | pl.down, above | pl.up, down | pl.down);
      }
    };
    auto rec_c = [&](auto&& self, std::size_t j, std::uint64_t used, std::uint64_t down) -> void {
      if (j == l) {
        ++nc;
        mu_seen.try_emplace(down, cur);
        return;
      }
      const auto& opts = places[static_cast<std::size_t>(tuple[j])];
      for (std::size_t k = 0; k < opts.size(); ++k) {
        const auto& pl = opts[k];
        if (pl.mask & used) continue;
        cur[j] = k;
        self(self, j + 1, used | pl.mask, down | pl.down);
      }
    };
    rec_b(rec_b, 0, 0, 0, 0);
    rec_c(rec_c, 0, 0, 0);
    parts[item].candidates = nb * nc;

    std::vector<std::uint64_t> lams, mus;
    for (const auto& [m, _] : lam_seen) lams.push_back(m);
    for (const auto& [m, _] : mu_seen) mus.push_back(m);
    // |lambda° ∩ mu°| only grows with either side.
    lams = minimal_masks(std::move(lams));
    mus = minimal_masks(std::move(mus));
    for (auto lm : lams)
      for (auto mm : mus) {
        if (std::popcount(lm & mm) >= total) continue;
        RightFreeConfig cfg;
        const auto& bi = lam_seen.at(lm);
        const auto& ci = mu_seen.at(mm);
        for (std::size_t j = 0; j < l; ++j) {
          const auto s = static_cast<std::size_t>(tuple[j]);
          cfg.nu0.push_back(cat.shapes[s]);
          cfg.b.push_back(places[s][bi[j]].anchor);
          cfg.c.push_back(places[s][ci[j]].anchor);
        }
        parts[item].witnesses.push_back(canonical_form(cfg));
      }
  });
  for (auto& p : parts) {
    rep.candidates_examined += p.candidates;
    for (auto& wit : p.witnesses) rep.witnesses.push_back(std::move(wit));
  }
  rep.shape_tuples = mine.size();
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const RightFreeConfig& a, const RightFreeConfig& b) {
              return std::tie(a.nu0, a.b, a.c) < std::tie(b.nu0, b.b, b.c);
            });
  rep.witnesses.erase(std::unique(rep.witnesses.begin(), rep.witnesses.end()), rep.witnesses.end());
  rep.wall_time = seconds_since(t0);
  return rep;
}

namespace {

CampaignReport no_small_intersection(const SearchBounds& b, int jobs) {
  const auto t0 = Clock::now();
  const auto r = search_small_intersection(b.max_components, b.max_cells, b.w, b.h, 1, 0, jobs);
  CampaignReport rep;
  rep.name = "no-small-intersection";
  rep.bounds = b;
  rep.instances_checked = r.candidates_examined;
  rep.counters = {{"shape_tuples", r.shape_tuples}, {"candidates_examined", r.candidates_examined}};
  rep.violation_count = r.witnesses.size();
  for (const auto& w : r.witnesses)
    if (rep.violations.size() < kMaxStoredViolations) rep.violations.push_back(to_json(w).dump());
  rep.wall_time = seconds_since(t0);
  return rep;
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"canonical-minimality", "height-drop",
                                              "rightfree-not-counterexample",
                                              "no-small-intersection", "oracle-bridge"};
  return names;
}

SearchBounds default_bounds(const std::string& name) {
  SearchBounds b;
  if (name == "no-small-intersection") {
    b.max_cells = 7;
    b.w = b.h = 7;
  } else if (name == "oracle-bridge") {
    b.max_components = 2;
    b.max_cells = 4;
    b.w = b.h = b.depth = 4;
  } else if (std::find(campaign_names().begin(), campaign_names().end(), name) ==
             campaign_names().end()) {
    throw Error("unknown campaign \"" + name + "\"", "campaign");
  }
  return b;
}

CampaignReport run_campaign(const std::string& name, const SearchBounds& bounds, int jobs) {
  bounds.check();
  if (name == "canonical-minimality") return canonical_minimality(bounds, jobs);
  if (name == "height-drop") return height_drop(bounds, jobs);
  if (name == "rightfree-not-counterexample") return rightfree_not_counterexample(bounds, jobs);
  if (name == "no-small-intersection") return no_small_intersection(bounds, jobs);
  if (name == "oracle-bridge") return oracle_bridge(bounds, jobs);
  throw Error("unknown campaign \"" + name + "\"", "campaign");
}

}  // namespace gerst
