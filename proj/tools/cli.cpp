#include "cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "gerst/io.hpp"
#include "gerst/render.hpp"
#include "gerst/search.hpp"

namespace gerst::cli {
namespace {

struct Ctx {
  std::ostream& out;
  bool pretty = false;
};

// Every {"n", "cells"} object in 2-D or 3-D, drawn layer by layer.
void draw_shapes(std::ostream& out, const json& j, const std::string& ptr) {
  if (j.is_object()) {
    const bool shape = j.contains("n") && j.contains("cells") && j["n"].is_number_integer() &&
                       j.size() == (j.contains("schema") ? 3u : 2u);
    if (shape) {
      const int n = j["n"].get<int>();
      if (n != 2 && n != 3) return;
      std::vector<Point> pts;
      for (const auto& c : j["cells"]) pts.push_back(Point(std::span<const int>(c.get<std::vector<int>>())));
      out << '\n' << (ptr.empty() ? "/" : ptr) << '\n' << render_layers(n, make_cells(n, std::move(pts)));
      return;
    }
    for (const auto& [k, v] : j.items()) draw_shapes(out, v, ptr + "/" + k);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) draw_shapes(out, j[i], ptr + "/" + std::to_string(i));
  }
}

void emit(const Ctx& c, const json& b) {
  const json doc = document(b);
  if (!c.pretty) {
    c.out << doc.dump() << '\n';
    return;
  }
  c.out << doc.dump(2) << '\n';
  draw_shapes(c.out, doc, "");
}

json error_doc(const std::string& message, const std::string& clause, const std::string& file = {},
               const std::string& location = {}) {
  json e = {{"message", message}, {"clause", clause}};
  if (!file.empty()) e["file"] = file;
  if (!location.empty()) e["location"] = location;
  return document({{"error", e}});
}

json shapes_json(const std::vector<SkewShape>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(to_json(s));
  return arr;
}

// -- shapes --------------------------------------------------------------------

int shapes_validate(const Ctx& c, const std::string& file, bool standard) {
  const json b = body(read_document(file));
  const Where at{file, ""};
  json r;
  try {
    if (standard) {
      const auto s = parse_standard(b, at);
      r = {{"valid", true}, {"kind", "standard"}, {"size", s.size()}};
    } else {
      const auto s = parse_skew(b, at);
      r = {{"valid", true},
           {"kind", "skew"},
           {"size", s.size()},
           {"abstract", s.is_abstract()},
           {"connected", s.is_connected()},
           {"components", connected_components(s).size()}};
    }
  } catch (const ParseError& e) {
    if (e.clause() != "skew" && e.clause() != "downward-closed") throw;
    r = {{"valid", false},
         {"kind", standard ? "standard" : "skew"},
         {"clause", e.clause()},
         {"detail", e.what()}};
  }
  emit(c, r);
  return r["valid"].get<bool>() ? 0 : 1;
}

int shapes_normalize(const Ctx& c, const std::string& file) {
  const auto s = parse_skew(body(read_document(file)), {file, ""});
  emit(c, to_json(normalize(s)));
  return 0;
}

int shapes_components(const Ctx& c, const std::string& file) {
  const auto s = parse_skew(body(read_document(file)), {file, ""});
  const auto comps = connected_components(s);
  json meets = json::array();
  for (const auto& k : comps) meets.push_back(to_json(meet(k)));
  emit(c, {{"components", shapes_json(comps)}, {"meets", meets}});
  return 0;
}

// -- glue ----------------------------------------------------------------------

int glue_isos(const Ctx& c, const std::string& file) {
  const json b = body(read_document(file));
  const Where at{file, ""};
  json r;
  if (b.is_object() && b.contains("zeta")) {
    check_keys(b, at, {"zeta", "xi"});
    const auto zeta = parse_skew(b["zeta"], at / "zeta");
    const auto xi = parse_skew(b["xi"], at / "xi");
    if (zeta.dim() != xi.dim()) (at / "xi" / "n").fail("zeta and xi differ in dimension", "dimension");
    json isos = json::array();
    const auto found = enumerate_monomial_isos(zeta, xi);
    for (const auto& m : found) isos.push_back(to_json(m));
    r = {{"count", found.size()}, {"isos", isos}};
  } else {
    const auto g = parse_ideal_gluing(b, at);
    SkewShape zeta(g.n), xi(g.n);
    try {
      zeta = quotient_cells(g.n, g.i, g.k);
      xi = quotient_cells(g.n, g.j, g.l);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      at.fail(e.what(), e.clause());
    }
    const auto found = enumerate_monomial_isos(zeta, xi);
    json isos = json::array(), gluings = json::array();
    for (const auto& m : found) {
      isos.push_back(to_json(m));
      gluings.push_back(to_json(gluing_from_ideals(g.n, g.i, g.j, g.k, g.l, m)));
    }
    r = {{"count", found.size()},
         {"zeta", to_json(zeta)},
         {"xi", to_json(xi)},
         {"isos", isos},
         {"gluings", gluings}};
  }
  emit(c, r);
  return 0;
}

int glue_check(const Ctx& c, const std::string& file) {
  const auto g = parse_gluing(body(read_document(file)), {file, ""});
  const auto rep = validate_gluing(g);
  json r = to_json(rep);
  bool bad = !rep.ok;
  if (rep.ok) {
    const bool cex = is_counterexample(g);
    r["moduleDimension"] = module_dimension(g);
    r["gluedCells"] = g.glued_cells();
    r["meetSize"] = set_intersection(g.lambda.cells(), g.mu.cells()).size();
    r["counterexample"] = cex;
    bad = cex;
  }
  emit(c, r);
  return bad ? 1 : 0;
}

int glue_scaffold(const Ctx& c, const std::string& file) {
  const Where at{file, ""};
  const auto g = parse_gluing(body(read_document(file)), at);
  const auto rep = validate_gluing(g);
  if (!rep.ok) at.fail(rep.detail, rep.clause);
  emit(c, to_json(scaffold(g)));
  return 0;
}

// -- plan ----------------------------------------------------------------------

int plan_canonical(const Ctx& c, const std::string& file) {
  const auto in = parse_plan(body(read_document(file)), {file, ""});
  emit(c, to_json(canonical_realization(in.plan)));
  return 0;
}

json check_one(const PlanInput& in, bool* bad) {
  const auto hb = hb_all(in.plan, Side::B);
  const auto hc = hb_all(in.plan, Side::C);
  json r = {{"valid", true},
            {"hb", hb},
            {"hc", hc},
            {"rightFree", std::all_of(hb.begin(), hb.end(), [](int h) { return h == 0; })}};
  if (in.bz) {
    const bool real = is_realization(in.plan, *in.bz, *in.cz);
    r["realization"] = real;
    r["canonical"] = *in.bz == hb && *in.cz == hc;
    *bad = !real;
  }
  return r;
}

int check_chain(const Ctx& c, const json& b, const Where& at) {
  check_keys(b, at, {"chain"}, {"steps"});
  if (!b["chain"].is_array()) (at / "chain").fail("expected an array of plans", "type");
  std::vector<FloorPlan> plans;
  for (std::size_t k = 0; k < b["chain"].size(); ++k) {
    auto in = parse_plan(b["chain"][k], at / "chain" / k);
    plans.push_back(std::move(in.plan));
  }
  if (b.contains("steps") && (!b["steps"].is_array() || b["steps"].size() + 1 != plans.size()))
    (at / "steps").fail("need one step per reduction", "dimension");
  json r = {{"length", plans.size()}};
  std::optional<std::size_t> broken;
  for (std::size_t k = 0; k + 1 < plans.size() && !broken; ++k) {
    const auto red = bottom_slice_reduction(plans[k]);
    bool ok = red.star == plans[k + 1];
    if (ok && b.contains("steps")) {
      const Where st = at / "steps" / k;
      const json& s = b["steps"][k];
      check_keys(s, st, {"eta", "meets"});
      std::vector<int> eta;
      for (auto e : red.eta) eta.push_back(static_cast<int>(e) + 1);
      ok = parse_ints(s["eta"], st / "eta") == eta &&
           parse_points(s["meets"], 3, st / "meets") == red.meets;
    }
    if (!ok) broken = k + 1;
  }
  const bool complete = !plans.empty() && plans.back().nu.empty();
  r["valid"] = !broken;
  r["complete"] = complete;
  if (broken) r["brokenAt"] = *broken;
  emit(c, r);
  return broken ? 1 : 0;
}

int plan_check(const Ctx& c, const std::string& file) {
  const json b = body(read_document(file));
  const Where at{file, ""};
  if (b.is_object() && b.contains("chain")) return check_chain(c, b, at);
  const auto in = parse_plan(b, at);
  bool bad = false;
  const json r = check_one(in, &bad);
  emit(c, r);
  return bad ? 1 : 0;
}

int plan_reduce(const Ctx& c, const std::string& file) {
  const auto in = parse_plan(body(read_document(file)), {file, ""});
  json chain = json::array(), steps = json::array();
  FloorPlan cur = in.plan;
  chain.push_back(to_json(cur));
  while (!cur.nu.empty()) {
    auto red = bottom_slice_reduction(cur);
    if (red.star.cells() >= cur.cells())
      throw Error("bottom-slice reduction did not shrink the plan", "internal");
    const json step = to_json(red);
    steps.push_back({{"eta", step["eta"]}, {"meets", step["meets"]}});
    cur = std::move(red.star);
    chain.push_back(to_json(cur));
  }
  emit(c, {{"chain", chain}, {"steps", steps}});
  return 0;
}

json config_report(const RightFreeConfig& cfg, bool* witness) {
  const bool small = has_small_intersection(cfg);
  *witness = small;
  return {{"config", to_json(cfg)},
          {"smallIntersection", small},
          {"lambda0Size", lambda0(cfg).size()},
          {"mu0Size", mu0(cfg).size()},
          {"meetSize", set_intersection(lambda0(cfg), mu0(cfg)).size()},
          {"lemmas", to_json(check_minimal_config_lemmas(cfg))}};
}

int plan_rightfree(const Ctx& c, const std::string& file) {
  const json b = body(read_document(file));
  const Where at{file, ""};
  bool witness = false;
  json r;
  if (b.is_object() && b.contains("nu0")) {
    r = config_report(parse_config(b, at), &witness);
  } else {
    const auto in = parse_plan(b, at);
    const auto hb = hb_all(in.plan, Side::B);
    const bool rf = is_right_free(in.plan);
    r = {{"rightFree", rf}, {"hb", hb}};
    if (rf) {
      const auto rest = config_report(bottom_config(in.plan), &witness);
      for (const auto& [k, v] : rest.items()) r[k] = v;
      const auto g = assemble(canonical_realization(in.plan));
      r["counterexample"] = is_counterexample(g);
      witness = witness || r["counterexample"].get<bool>();
    }
  }
  emit(c, r);
  return witness ? 1 : 0;
}

// -- search, oracle, campaign ----------------------------------------------------

std::pair<int, int> parse_box(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int w = std::stoi(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(s);
    const std::string rest = s.substr(x + 1);
    const int h = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {w, h};
  } catch (const std::logic_error&) {
    throw ParseError("box must look like WxH", "bounds", "--box", "/");
  }
}

struct SearchArgs {
  int max_components = 3;
  int max_cells = 5;
  std::string box = "3x3";
  int shards = 1;
  int shard = 0;
  int jobs = 1;
};

int search_rightfree(const Ctx& c, const SearchArgs& a) {
  const auto [w, h] = parse_box(a.box);
  const auto rep = search_small_intersection(a.max_components, a.max_cells, w, h, a.shards,
                                             a.shard, a.jobs);
  emit(c, to_json(rep));
  return rep.witnesses.empty() ? 0 : 1;
}

int oracle_dim(const Ctx& c, const std::string& file, std::uint32_t prime, bool matrices) {
  const Where at{file, ""};
  const auto g = parse_gluing(body(read_document(file)), at);
  const auto rep = validate_gluing(g);
  if (!rep.ok) at.fail(rep.detail, rep.clause);
  const auto res = verify_gq(g, prime);
  json r = to_json(res);
  if (matrices) {
    json ms = json::array();
    for (const auto& m : module_to_matrices(g, prime)) ms.push_back(to_json(m));
    r["matrices"] = ms;
  }
  emit(c, r);
  return res.holds ? 0 : 1;
}

SearchBounds read_bounds(const std::string& name, const std::string& spec) {
  const SearchBounds base = default_bounds(name);
  if (spec.empty()) return base;
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') {
    json j;
    try {
      j = json::parse(spec);
    } catch (const json::parse_error& e) {
      throw ParseError(e.what(), "syntax", "--bounds", "byte " + std::to_string(e.byte));
    }
    return parse_bounds(j, base, {"--bounds", ""});
  }
  return parse_bounds(read_document(spec), base, {spec, ""});
}

int campaign_run(const Ctx& c, const std::string& name, const std::string& bounds, int jobs,
                 const std::string& output) {
  const auto b = read_bounds(name, bounds);
  const auto rep = run_campaign(name, b, jobs);
  if (output.empty()) {
    emit(c, to_json(rep));
  } else {
    std::ofstream f(output);
    if (!f) throw ParseError("cannot write file", "io", output, "/");
    f << document(to_json(rep)).dump(2) << '\n';
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial modules, floor plans and right-free configurations."};
  app.name("gerst");
  app.fallthrough();
  app.require_subcommand(1);
  Ctx ctx{out};
  app.add_flag("--pretty", ctx.pretty, "Indented JSON followed by ASCII drawings of every shape");

  std::string file;
  bool standard = false;
  auto* shapes = app.add_subcommand("shapes", "Skew shapes in N^n")->require_subcommand(1);
  shapes->fallthrough();
  auto* sh_validate = shapes->add_subcommand("validate", "Check that cells form a skew shape");
  sh_validate->add_option("file", file, "Shape document")->required();
  sh_validate->add_flag("--standard", standard, "Require a downward-closed shape");
  auto* sh_normalize = shapes->add_subcommand("normalize", "Translate the meet to the origin");
  sh_normalize->add_option("file", file, "Shape document")->required();
  auto* sh_components = shapes->add_subcommand("components", "Connected components");
  sh_components->add_option("file", file, "Shape document")->required();

  auto* glue = app.add_subcommand("glue", "Gluing data")->require_subcommand(1);
  glue->fallthrough();
  auto* gl_isos = glue->add_subcommand("isos", "Monomial isomorphisms K/I -> L/J");
  gl_isos->add_option("file", file, "{n,I,J,K,L} or {zeta,xi} document")->required();
  auto* gl_check = glue->add_subcommand("check", "Validate gluing data, flag counterexamples");
  gl_check->add_option("file", file, "Gluing document")->required();
  auto* gl_scaffold = glue->add_subcommand("scaffold", "Replace lambda and mu by closures");
  gl_scaffold->add_option("file", file, "Gluing document")->required();

  auto* plan = app.add_subcommand("plan", "Floor plans")->require_subcommand(1);
  plan->fallthrough();
  auto* pl_canonical = plan->add_subcommand("canonical", "Canonical realization");
  pl_canonical->add_option("file", file, "Floor plan document")->required();
  auto* pl_check = plan->add_subcommand("check", "Check a plan, a realization or a reduction chain");
  pl_check->add_option("file", file, "Plan or chain document")->required();
  auto* pl_reduce = plan->add_subcommand("reduce", "Bottom-slice reductions down to the empty plan");
  pl_reduce->add_option("file", file, "Floor plan document")->required();
  auto* pl_rightfree = plan->add_subcommand("rightfree", "Right-free test and bottom configuration");
  pl_rightfree->add_option("file", file, "Floor plan or configuration document")->required();

  SearchArgs sa;
  sa.jobs = default_jobs();
  auto* search = app.add_subcommand("search", "Exhaustive searches")->require_subcommand(1);
  search->fallthrough();
  auto* se_rightfree = search->add_subcommand("rightfree", "Right-free configurations of small intersection");
  se_rightfree->add_option("--max-components", sa.max_components)->check(CLI::PositiveNumber);
  se_rightfree->add_option("--max-cells", sa.max_cells)->check(CLI::PositiveNumber);
  se_rightfree->add_option("--box", sa.box, "WxH");
  se_rightfree->add_option("--shards", sa.shards)->check(CLI::PositiveNumber);
  se_rightfree->add_option("--shard", sa.shard)->check(CLI::NonNegativeNumber);
  se_rightfree->add_option("--jobs", sa.jobs)->check(CLI::PositiveNumber);

  std::uint32_t prime = kDefaultPrime;
  bool matrices = false;
  auto* oracle = app.add_subcommand("oracle", "Linear-algebra oracle")->require_subcommand(1);
  oracle->fallthrough();
  auto* or_dim = oracle->add_subcommand("dim", "dim N versus dim of the generated algebra");
  or_dim->add_option("file", file, "Gluing document")->required();
  or_dim->add_option("--prime", prime, "Field characteristic");
  or_dim->add_flag("--matrices", matrices, "Include the action matrices");

  std::string name, bounds, output;
  int jobs = default_jobs();
  auto* campaign = app.add_subcommand("campaign", "Theorem-checking campaigns")->require_subcommand(1);
  campaign->fallthrough();
  auto* ca_run = campaign->add_subcommand("run", "Run one campaign");
  ca_run->add_option("name", name, "Campaign name")->required();
  ca_run->add_option("--bounds", bounds, "Inline JSON or a bounds file");
  ca_run->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  ca_run->add_option("--output", output, "Write the report here instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_doc(e.what(), "usage").dump() << '\n';
    return 2;
  }

  try {
    if (sh_validate->parsed()) return shapes_validate(ctx, file, standard);
    if (sh_normalize->parsed()) return shapes_normalize(ctx, file);
    if (sh_components->parsed()) return shapes_components(ctx, file);
    if (gl_isos->parsed()) return glue_isos(ctx, file);
    if (gl_check->parsed()) return glue_check(ctx, file);
    if (gl_scaffold->parsed()) return glue_scaffold(ctx, file);
    if (pl_canonical->parsed()) return plan_canonical(ctx, file);
    if (pl_check->parsed()) return plan_check(ctx, file);
    if (pl_reduce->parsed()) return plan_reduce(ctx, file);
    if (pl_rightfree->parsed()) return plan_rightfree(ctx, file);
    if (se_rightfree->parsed()) return search_rightfree(ctx, sa);
    if (or_dim->parsed()) return oracle_dim(ctx, file, prime, matrices);
    if (ca_run->parsed()) return campaign_run(ctx, name, bounds, jobs, output);
  } catch (const ParseError& e) {
    out << error_doc(e.what(), e.clause(), e.file(), e.location()).dump() << '\n';
    return 2;
  } catch (const Error& e) {
    out << error_doc(e.what(), e.clause()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << error_doc(e.what(), "internal").dump() << '\n';
    err << "gerst: " << e.what() << '\n';
    return 2;
  }
  out << error_doc("no command given", "usage").dump() << '\n';
  return 2;
}

}  // namespace gerst::cli
