#include "gerst/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gerst {

void Where::fail(const std::string& what, const std::string& clause) const {
  throw ParseError(what, clause, file, pointer.empty() ? "/" : pointer);
}

void check_keys(const json& j, const Where& at, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
  if (!j.is_object()) at.fail("expected an object", "type");
  for (const char* k : required)
    if (!j.contains(k)) at.fail(std::string("missing field \"") + k + "\"", "missing-field");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) (at / key).fail("unknown field \"" + key + "\"", "unknown-field");
  }
}

int parse_int(const json& j, const Where& at) {
  if (!j.is_number_integer()) at.fail("expected an integer", "type");
  return j.get<int>();
}

std::vector<int> parse_ints(const json& j, const Where& at) {
  if (!j.is_array()) at.fail("expected an array", "type");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_int(j[i], at / i));
  return out;
}

namespace {

int parse_dim(const json& j, const Where& at) {
  const int n = parse_int(j, at);
  if (n < 1 || n > kMaxDim) at.fail("dimension must be between 1 and 4", "dimension");
  return n;
}

// Runs f, turning library errors into parse errors located at `at`.
template <class F>
auto located(const Where& at, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    at.fail(e.what(), e.clause());
  }
}

}  // namespace

json parse_document(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "syntax", name, "byte " + std::to_string(e.byte));
  }
  const Where at{name, ""};
  if (!doc.is_object()) at.fail("document must be a JSON object", "type");
  if (!doc.contains("schema")) at.fail("missing field \"schema\"", "schema");
  if (doc["schema"] != kSchemaVersion)
    (at / "schema").fail("unsupported schema version", "schema");
  return doc;
}

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", "io", path, "/");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_document(text, path);
}

json body(const json& doc) {
  json out = doc;
  out.erase("schema");
  return out;
}

json document(json b) {
  json out;
  out["schema"] = kSchemaVersion;
  for (auto& [k, v] : b.items()) out[k] = v;
  return out;
}

json to_json(const Point& p) { return p.coords(); }

json cells_to_json(int dim, const Cells& cells) {
  json arr = json::array();
  for (const auto& c : cells) arr.push_back(to_json(c));
  return {{"n", dim}, {"cells", arr}};
}

json to_json(const StandardShape& s) { return cells_to_json(s.dim(), s.cells()); }
json to_json(const SkewShape& s) { return cells_to_json(s.dim(), s.cells()); }

json ideal_to_json(int dim, const Generators& gens) {
  json arr = json::array();
  for (const auto& g : gens) arr.push_back(to_json(g));
  return {{"n", dim}, {"gens", arr}};
}

namespace {

json points(const std::vector<Point>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

json shapes(const std::vector<SkewShape>& ss) {
  json arr = json::array();
  for (const auto& s : ss) arr.push_back(to_json(s));
  return arr;
}

}  // namespace

json to_json(const GluingData& g) {
  return {{"lambda", to_json(g.lambda)}, {"mu", to_json(g.mu)}, {"nu", shapes(g.nu)},
          {"b", points(g.b)},            {"c", points(g.c)}};
}

json to_json(const FloorPlan& p) {
  return {{"nu", shapes(p.nu)}, {"b", points(p.b)}, {"c", points(p.c)}};
}

json to_json(const Realization& r) {
  json j = to_json(r.plan);
  j["bz"] = r.bz;
  j["cz"] = r.cz;
  return j;
}

json to_json(const RightFreeConfig& c) {
  return {{"nu0", shapes(c.nu0)}, {"b", points(c.b)}, {"c", points(c.c)}};
}

json to_json(const SliceReduction& r) {
  std::vector<std::size_t> eta;
  for (auto e : r.eta) eta.push_back(e + 1);
  return {{"plan", to_json(r.star)}, {"eta", eta}, {"meets", points(r.meets)}};
}

json to_json(const IsoMatching& m) {
  std::vector<int> target;
  for (int t : m.target) target.push_back(t + 1);
  return {{"target", target}, {"anchors", points(m.anchors)}, {"shifts", points(m.shifts)}};
}

json to_json(const GqResult& r) {
  return {{"dimN", r.dim_n},           {"dimAlg", r.dim_alg},
          {"holds", r.holds},          {"prime", r.prime},
          {"unionSize", r.union_size}, {"matchesUnion", r.matches_union}};
}

json to_json(const LemmaReport& r) {
  return {{"socleLambdaDisjoint", r.socle_lambda_disjoint},
          {"socleMuDisjoint", r.socle_mu_disjoint},
          {"rowsXCovered", r.rows_x_covered},
          {"rowsYCovered", r.rows_y_covered},
          {"heightLambda", r.height_lambda},
          {"heightMu", r.height_mu},
          {"rowsLambda", r.rows_lambda},
          {"rowsNuSum", r.rows_nu_sum},
          {"heightSum", r.height_sum},
          {"heightMuBelow", r.height_mu_below},
          {"topRowContained", r.top_row_contained},
          {"all", r.all()}};
}

json to_json(const GluingReport& r) {
  json j = {{"valid", r.ok}};
  if (!r.ok) {
    j["clause"] = r.clause;
    if (!r.side.empty()) j["side"] = r.side;
    j["detail"] = r.detail;
    j["witness"] = points(r.witness);
  }
  return j;
}

json to_json(const PrimeFieldMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SearchBounds& b) {
  return {{"max_components", b.max_components},
          {"max_cells", b.max_cells},
          {"box", {b.w, b.h, b.depth}},
          {"max_third_offset", b.max_third_offset}};
}

json to_json(const CampaignReport& r) {
  json counters = json::object();
  for (const auto& [k, v] : r.counters) counters[k] = v;
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back(json::parse(v));
  return {{"campaign", r.name},
          {"bounds", to_json(r.bounds)},
          {"instances_checked", r.instances_checked},
          {"counters", counters},
          {"violation_count", r.violation_count},
          {"violations", violations},
          {"wall_time", r.wall_time}};
}

json to_json(const SmallIntersectionReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"bounds",
           {{"max_components", r.max_components},
            {"max_cells", r.max_cells},
            {"box", {r.w, r.h}},
            {"shards", r.shards},
            {"shard", r.shard}}},
          {"shape_tuples", r.shape_tuples},
          {"candidates_examined", r.candidates_examined},
          {"witnesses", witnesses},
          {"wall_time", r.wall_time}};
}

Point parse_point(const json& j, int dim, const Where& at) {
  if (!j.is_array()) at.fail("expected a coordinate array", "type");
  if (dim >= 0 && static_cast<int>(j.size()) != dim)
    at.fail("expected " + std::to_string(dim) + " coordinates", "dimension");
  if (j.size() > static_cast<std::size_t>(kMaxDim)) at.fail("too many coordinates", "dimension");
  std::vector<int> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(parse_int(j[i], at / i));
  return Point(std::span<const int>(c));
}

std::vector<Point> parse_points(const json& j, int dim, const Where& at) {
  if (!j.is_array()) at.fail("expected an array of points", "type");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_point(j[i], dim, at / i));
    if (dim < 0) dim = out.back().dim();
  }
  return out;
}

namespace {

std::vector<Point> parse_cells(const json& j, const Where& at, int* dim) {
  check_keys(j, at, {"n", "cells"});
  *dim = parse_dim(j["n"], at / "n");
  auto pts = parse_points(j["cells"], *dim, at / "cells");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!pts[i].nonnegative()) (at / "cells" / i).fail("negative coordinate", "nonnegative");
  return pts;
}

std::vector<SkewShape> parse_shapes(const json& j, const Where& at) {
  if (!j.is_array()) at.fail("expected an array of shapes", "type");
  std::vector<SkewShape> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_skew(j[i], at / i));
  return out;
}

}  // namespace

StandardShape parse_standard(const json& j, const Where& at) {
  int dim = 0;
  auto pts = parse_cells(j, at, &dim);
  return located(at, [&] { return StandardShape(dim, std::move(pts)); });
}

SkewShape parse_skew(const json& j, const Where& at) {
  int dim = 0;
  auto pts = parse_cells(j, at, &dim);
  return located(at, [&] { return SkewShape(dim, std::move(pts)); });
}

Generators parse_ideal(const json& j, int* dim, const Where& at) {
  check_keys(j, at, {"n", "gens"});
  *dim = parse_dim(j["n"], at / "n");
  auto gens = parse_points(j["gens"], *dim, at / "gens");
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].nonnegative()) (at / "gens" / i).fail("negative exponent", "nonnegative");
  return gens;
}

GluingData parse_gluing(const json& j, const Where& at) {
  check_keys(j, at, {"lambda", "mu", "nu", "b", "c"});
  GluingData g{parse_standard(j["lambda"], at / "lambda"), parse_standard(j["mu"], at / "mu"),
               parse_shapes(j["nu"], at / "nu"), {}, {}};
  const int n = g.lambda.dim();
  if (g.mu.dim() != n) (at / "mu" / "n").fail("lambda and mu differ in dimension", "dimension");
  g.b = parse_points(j["b"], n, at / "b");
  g.c = parse_points(j["c"], n, at / "c");
  if (g.b.size() != g.nu.size()) (at / "b").fail("need one anchor per component", "dimension");
  if (g.c.size() != g.nu.size()) (at / "c").fail("need one anchor per component", "dimension");
  for (std::size_t i = 0; i < g.nu.size(); ++i)
    if (g.nu[i].dim() != n) (at / "nu" / i / "n").fail("component dimension differs", "dimension");
  return g;
}

PlanInput parse_plan(const json& j, const Where& at) {
  check_keys(j, at, {"nu", "b", "c"}, {"bz", "cz"});
  PlanInput in;
  in.plan.nu = parse_shapes(j["nu"], at / "nu");
  in.plan.b = parse_points(j["b"], 2, at / "b");
  in.plan.c = parse_points(j["c"], 2, at / "c");
  if (j.contains("bz") != j.contains("cz"))
    at.fail("bz and cz must be given together", "missing-field");
  if (j.contains("bz")) {
    in.bz = parse_ints(j["bz"], at / "bz");
    in.cz = parse_ints(j["cz"], at / "cz");
  }
  located(at, [&] {
    validate_plan(in.plan);
    return 0;
  });
  if (in.bz && (in.bz->size() != in.plan.nu.size() || in.cz->size() != in.plan.nu.size()))
    at.fail("bz and cz need one entry per component", "dimension");
  return in;
}

RightFreeConfig parse_config(const json& j, const Where& at) {
  check_keys(j, at, {"nu0", "b", "c"});
  RightFreeConfig cfg{parse_shapes(j["nu0"], at / "nu0"), parse_points(j["b"], 2, at / "b"),
                      parse_points(j["c"], 2, at / "c")};
  located(at, [&] {
    validate_config(cfg);
    return 0;
  });
  return cfg;
}

IdealGluing parse_ideal_gluing(const json& j, const Where& at) {
  check_keys(j, at, {"n", "I", "J", "K", "L"});
  IdealGluing g;
  g.n = parse_dim(j["n"], at / "n");
  g.i = parse_points(j["I"], g.n, at / "I");
  g.j = parse_points(j["J"], g.n, at / "J");
  g.k = parse_points(j["K"], g.n, at / "K");
  g.l = parse_points(j["L"], g.n, at / "L");
  return g;
}

SearchBounds parse_bounds(const json& j, const SearchBounds& base, const Where& at) {
  check_keys(j, at, {}, {"schema", "max_components", "max_cells", "box", "max_third_offset"});
  SearchBounds b = base;
  if (j.contains("max_components")) b.max_components = parse_int(j["max_components"], at / "max_components");
  if (j.contains("max_cells")) b.max_cells = parse_int(j["max_cells"], at / "max_cells");
  if (j.contains("max_third_offset"))
    b.max_third_offset = parse_int(j["max_third_offset"], at / "max_third_offset");
  if (j.contains("box")) {
    const auto box = parse_ints(j["box"], at / "box");
    if (box.size() != 2 && box.size() != 3) (at / "box").fail("box needs 2 or 3 extents", "bounds");
    b.w = box[0];
    b.h = box[1];
    if (box.size() == 3) b.depth = box[2];
  }
  located(at, [&] {
    b.check();
    return 0;
  });
  return b;
}

}  // namespace gerst
