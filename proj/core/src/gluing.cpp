#include "gerst/gluing.hpp"

#include <algorithm>
#include <numeric>

namespace gerst {

std::size_t GluingData::glued_cells() const {
  std::size_t n = 0;
  for (const auto& s : nu) n += s.size();
  return n;
}

namespace {

Cells placed(const std::vector<SkewShape>& nu, const std::vector<Point>& anchors) {
  std::vector<Point> out;
  for (std::size_t j = 0; j < nu.size() && j < anchors.size(); ++j)
    for (const auto& c : nu[j].cells()) out.push_back(c + anchors[j]);
  std::sort(out.begin(), out.end());
  return out;  // duplicates kept so overlap stays visible to the validator
}

GluingReport fail(std::string clause, std::string side, std::string detail, Cells witness) {
  return {false, std::move(clause), std::move(side), std::move(detail), std::move(witness)};
}

std::optional<GluingReport> check_side(const StandardShape& big, const std::vector<SkewShape>& nu,
                                       const std::vector<Point>& anchors, const char* side) {
  Cells all;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (!anchors[j].nonnegative())
      return fail("nonnegative", side, "anchor " + anchors[j].str() + " is negative",
                  {anchors[j]});
    Cells piece = translate(nu[j].cells(), anchors[j]);
    if (!disjoint(all, piece))
      return fail("disjointness", side,
                  "component " + std::to_string(j + 1) + " overlaps an earlier one",
                  set_intersection(all, piece));
    for (const auto& v : piece)
      if (!big.contains(v))
        return fail("containment", side,
                    "cell " + v.str() + " of component " + std::to_string(j + 1) +
                        " lies outside " + side,
                    {v});
    for (const auto& v : piece) {
      for (int i = 0; i < v.dim(); ++i) {
        Point w = v;
        ++w[i];
        if (big.contains(w) && !contains(piece, w))
          return fail("upward-closed", side,
                      "component " + std::to_string(j + 1) + " is not closed under >= in " +
                          side + ": " + v.str() + " -> " + w.str(),
                      {v, w});
      }
    }
    all = set_union(all, piece);
  }
  return std::nullopt;
}

}  // namespace

Cells GluingData::placed_b() const { return placed(nu, b); }
Cells GluingData::placed_c() const { return placed(nu, c); }

GluingReport validate_gluing(const GluingData& g) {
  const int n = g.lambda.dim();
  if (g.mu.dim() != n) throw Error("lambda and mu have different dimensions", "dimension");
  if (g.b.size() != g.nu.size() || g.c.size() != g.nu.size())
    throw Error("nu, b and c must have the same length", "dimension");
  for (std::size_t j = 0; j < g.nu.size(); ++j) {
    if (g.nu[j].dim() != n || g.b[j].dim() != n || g.c[j].dim() != n)
      throw Error("component " + std::to_string(j + 1) + " has the wrong dimension", "dimension");
  }
  for (std::size_t j = 0; j < g.nu.size(); ++j) {
    const auto& s = g.nu[j];
    if (!s.is_abstract())
      return fail("abstract", "", "component " + std::to_string(j + 1) + " is not abstract", {});
    if (!s.is_connected())
      return fail("connected", "", "component " + std::to_string(j + 1) + " is not connected",
                  {});
  }
  if (auto r = check_side(g.lambda, g.nu, g.b, "lambda")) return *r;
  if (auto r = check_side(g.mu, g.nu, g.c, "mu")) return *r;
  return {};
}

void require_valid(const GluingData& g) {
  auto r = validate_gluing(g);
  if (!r.ok) throw Error("invalid gluing data: " + r.detail, r.clause);
}

std::size_t module_dimension(const GluingData& g) {
  require_valid(g);
  return g.lambda.size() + g.mu.size() - g.glued_cells();
}

bool is_counterexample(const GluingData& g) {
  require_valid(g);
  return g.glued_cells() > set_intersection(g.lambda.cells(), g.mu.cells()).size();
}

GluingData scaffold(const GluingData& g) {
  require_valid(g);
  GluingData out = g;
  const int n = g.dim();
  out.lambda = StandardShape::closure_of(n, g.placed_b());
  out.mu = StandardShape::closure_of(n, g.placed_c());
  return out;
}

std::vector<IsoMatching> enumerate_monomial_isos(const SkewShape& zeta, const SkewShape& xi) {
  const auto zc = connected_components(zeta);
  const auto xc = connected_components(xi);
  if (zc.size() != xc.size()) return {};
  std::vector<SkewShape> zn, xn;
  for (const auto& s : zc) zn.push_back(normalize(s));
  for (const auto& s : xc) xn.push_back(normalize(s));

  std::vector<IsoMatching> out;
  std::vector<int> target(zc.size(), -1);
  std::vector<bool> used(xc.size(), false);
  // Backtracking; classes are small so the product of factorials stays tiny.
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == zc.size()) {
      IsoMatching m;
      m.target = target;
      for (std::size_t k = 0; k < zc.size(); ++k) {
        m.anchors.push_back(meet(xc[static_cast<std::size_t>(target[k])]));
        m.shifts.push_back(m.anchors.back() - meet(zc[k]));
      }
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t t = 0; t < xc.size(); ++t) {
      if (used[t] || !(zn[j] == xn[t])) continue;
      used[t] = true;
      target[j] = static_cast<int>(t);
      self(self, j + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const IsoMatching& a, const IsoMatching& b) { return a.target < b.target; });
  return out;
}

std::vector<Summand> indecomposable_decomposition(const SkewShape& k_over_i) {
  std::vector<Summand> out;
  for (const auto& comp : connected_components(k_over_i))
    out.push_back({normalize(comp), meet(comp)});
  return out;
}

bool summand_in_x3(const GluingData& g, std::size_t j) {
  if (g.dim() != 3) throw Error("summand_in_x3 needs n = 3", "dimension");
  if (j >= g.nu.size()) throw Error("component index out of range", "index");
  require_valid(g);
  for (const auto& c : g.nu[j].cells())
    if (c[2] + g.b[j][2] < 1) return false;
  return true;
}

SkewShape quotient_cells(int dim, const Generators& i, const Generators& k) {
  const auto si = ideal_to_shape(dim, i);
  const auto sk = ideal_to_shape(dim, k);
  if (!subset(sk.cells(), si.cells())) throw Error("I is not contained in K", "containment");
  return SkewShape(dim, set_difference(si.cells(), sk.cells()));
}

GluingData gluing_from_ideals(int dim, const Generators& i, const Generators& j,
                              const Generators& k, const Generators& l,
                              const IsoMatching& matching) {
  const auto zeta = quotient_cells(dim, i, k);
  const auto xi = quotient_cells(dim, j, l);
  const auto zc = connected_components(zeta);
  if (matching.target.size() != zc.size() || matching.anchors.size() != zc.size())
    throw Error("matching does not cover every component of K/I", "matching");
  GluingData g{ideal_to_shape(dim, i), ideal_to_shape(dim, j), {}, {}, {}};
  for (std::size_t t = 0; t < zc.size(); ++t) {
    g.nu.push_back(normalize(zc[t]));
    g.b.push_back(meet(zc[t]));
    g.c.push_back(matching.anchors[t]);
  }
  if (!subset(g.placed_c(), xi.cells()))
    throw Error("matched components do not land on L/J", "matching");
  require_valid(g);
  return g;
}

}  // namespace gerst
