#include "gerst/rightfree.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "gerst/reduction.hpp"

namespace gerst {

std::size_t RightFreeConfig::cells() const {
  std::size_t n = 0;
  for (const auto& s : nu0) n += s.size();
  return n;
}

namespace {

Cells placed(const std::vector<SkewShape>& nu, const std::vector<Point>& at) {
  std::vector<Point> out;
  for (std::size_t j = 0; j < nu.size(); ++j)
    for (const auto& v : nu[j].cells()) out.push_back(v + at[j]);
  return make_cells(2, std::move(out));
}

}  // namespace

void validate_config(const RightFreeConfig& cfg) {
  if (cfg.b.size() != cfg.nu0.size() || cfg.c.size() != cfg.nu0.size())
    throw Error("nu, b and c must have the same length", "dimension");
  for (std::size_t j = 0; j < cfg.nu0.size(); ++j) {
    const std::string which = "component " + std::to_string(j + 1);
    if (cfg.nu0[j].dim() != 2 || cfg.b[j].dim() != 2 || cfg.c[j].dim() != 2)
      throw Error(which + " is not planar", "dimension");
    if (!cfg.b[j].nonnegative() || !cfg.c[j].nonnegative())
      throw Error(which + " has a negative anchor", "nonnegative");
    if (!cfg.nu0[j].is_abstract()) throw Error(which + " is not abstract", "abstract");
    if (!cfg.nu0[j].is_connected()) throw Error(which + " is not connected", "connected");
  }
  const std::size_t n = cfg.nu0.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Cells pi = translate(cfg.nu0[i].cells(), cfg.b[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Cells pj = translate(cfg.nu0[j].cells(), cfg.b[j]);
      for (const auto& v : pi)
        for (const auto& w : pj)
          if (v.leq(w))
            throw Error("components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " are comparable on the b side",
                        "comparable");
    }
  }
  std::size_t total = 0;
  for (const auto& s : cfg.nu0) total += s.size();
  if (placed_y(cfg).size() != total) throw Error("components overlap on the c side", "overlap");
}

Cells placed_x(const RightFreeConfig& cfg) { return placed(cfg.nu0, cfg.b); }
Cells placed_y(const RightFreeConfig& cfg) { return placed(cfg.nu0, cfg.c); }
Cells lambda0(const RightFreeConfig& cfg) { return closure_leq(placed_x(cfg)); }
Cells mu0(const RightFreeConfig& cfg) { return closure_leq(placed_y(cfg)); }

Cells socle(const Cells& sigma) {
  Cells out;
  for (const auto& v : sigma) {
    bool top = true;
    for (int i = 0; i < v.dim() && top; ++i) {
      Point w = v;
      ++w[i];
      top = !contains(sigma, w);
    }
    if (top) out.push_back(v);
  }
  return out;
}

std::map<int, Cells> rows(const Cells& sigma) {
  std::map<int, Cells> out;
  for (const auto& v : sigma) {
    if (v.dim() != 2) throw Error("rows are defined for planar cell sets", "dimension");
    out[v[1]].push_back(v);
  }
  return out;
}

Cells row(const Cells& sigma, int i) {
  Cells out;
  for (const auto& v : sigma)
    if (v[1] == i) out.push_back(v);
  return out;
}

int height(const Cells& sigma) {
  int h = -1;
  for (const auto& v : sigma)
    if (v[0] == 0) h = std::max(h, v[1]);
  if (h < 0) throw Error("height is undefined: no cell in column 0", "column");
  return h;
}

std::size_t row_count(const Cells& sigma) { return rows(sigma).size(); }

bool has_small_intersection(const RightFreeConfig& cfg) {
  validate_config(cfg);
  return set_intersection(lambda0(cfg), mu0(cfg)).size() < cfg.cells();
}

bool config_leq(const RightFreeConfig& x, const RightFreeConfig& y) {
  validate_config(x);
  validate_config(y);
  const Cells lx = lambda0(x), ly = lambda0(y), mx = mu0(x), my = mu0(y);
  if (!subset(lx, ly) || !subset(mx, my)) return false;
  if (x.cells() > y.cells()) return false;
  const auto deficit = [](const Cells& l, const Cells& m, std::size_t nu) {
    return static_cast<long>(set_intersection(l, m).size()) - static_cast<long>(nu);
  };
  return deficit(lx, mx, x.cells()) <= deficit(ly, my, y.cells());
}

RightFreeConfig bottom_config(const FloorPlan& plan) {
  validate_plan(plan);
  if (!is_right_free(plan)) throw Error("floor plan is not right-free", "right-free");
  RightFreeConfig cfg;
  for (std::size_t j = 0; j < plan.nu.size(); ++j) {
    const Cells slice = project(bottom_slice(plan.nu[j]).slice);
    for (const auto& comp : connected_components(SkewShape(2, slice))) {
      const Point m = meet(comp);
      cfg.nu0.push_back(normalize(comp));
      cfg.b.push_back(plan.b[j] + m);
      cfg.c.push_back(plan.c[j] + m);
    }
  }
  validate_config(cfg);
  return cfg;
}

LemmaReport check_minimal_config_lemmas(const RightFreeConfig& cfg) {
  validate_config(cfg);
  LemmaReport r;
  if (cfg.nu0.empty()) return r;
  const Cells lam = lambda0(cfg), mu = mu0(cfg), x = placed_x(cfg), y = placed_y(cfg);
  r.socle_lambda_disjoint = disjoint(socle(lam), mu);
  r.socle_mu_disjoint = disjoint(socle(mu), lam);
  r.height_lambda = height(lam);
  r.height_mu = height(mu);
  const auto rx = rows(x), ry = rows(y);
  for (int i = 0; i <= r.height_lambda; ++i) r.rows_x_covered = r.rows_x_covered && rx.count(i);
  for (int i = 0; i <= r.height_mu; ++i) r.rows_y_covered = r.rows_y_covered && ry.count(i);
  r.rows_lambda = row_count(lam);
  for (const auto& s : cfg.nu0) r.rows_nu_sum += row_count(s.cells());
  r.height_sum = r.rows_lambda == r.rows_nu_sum;
  r.height_mu_below = r.height_mu <= r.height_lambda;
  r.top_row_contained = subset(row(lam, r.height_mu), row(mu, r.height_mu));
  return r;
}

RightFreeConfig canonical_form(const RightFreeConfig& cfg) {
  std::vector<std::size_t> order(cfg.nu0.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::tie(cfg.nu0[i], cfg.b[i], cfg.c[i]) < std::tie(cfg.nu0[j], cfg.b[j], cfg.c[j]);
  });
  RightFreeConfig out;
  for (auto k : order) {
    out.nu0.push_back(cfg.nu0[k]);
    out.b.push_back(cfg.b[k]);
    out.c.push_back(cfg.c[k]);
  }
  return out;
}

}  // namespace gerst
