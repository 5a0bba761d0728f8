#pragma once

// JSON encoding of shapes, gluing data, floor plans and configurations.
// Documents carry "schema": 1; unknown fields are rejected everywhere.

#include <optional>
#include <string>

#include "json.hpp"

#include "gerst/floorplan.hpp"
#include "gerst/gluing.hpp"
#include "gerst/oracle.hpp"
#include "gerst/reduction.hpp"
#include "gerst/rightfree.hpp"
#include "gerst/search.hpp"

namespace gerst {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input: names the file, a JSON pointer into it, and the clause.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string clause, std::string file, std::string location)
      : Error(what, std::move(clause)), file_(std::move(file)), location_(std::move(location)) {}

  const std::string& file() const noexcept { return file_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string file_;
  std::string location_;
};

/// Where a value sits: file name plus JSON pointer.
struct Where {
  std::string file;
  std::string pointer;

  Where operator/(const std::string& key) const { return {file, pointer + "/" + key}; }
  Where operator/(std::size_t i) const { return {file, pointer + "/" + std::to_string(i)}; }
  [[noreturn]] void fail(const std::string& what, const std::string& clause) const;
};

/// Fails (clause "type", "missing-field" or "unknown-field") unless j is an
/// object holding every required key and nothing outside required + optional.
void check_keys(const json& j, const Where& at, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {});

/// Reads and parses a file; checks the schema field. "-" reads stdin.
json read_document(const std::string& path);
/// Parses text; checks the schema field.
json parse_document(const std::string& text, const std::string& name);
/// Copy of `doc` with "schema" removed, for handing to the typed parsers.
json body(const json& doc);

/// Adds "schema": 1 in front.
json document(json body);

json to_json(const Point& p);
json cells_to_json(int dim, const Cells& cells);
json to_json(const StandardShape& s);
json to_json(const SkewShape& s);
json ideal_to_json(int dim, const Generators& gens);
json to_json(const GluingData& g);
json to_json(const FloorPlan& p);
json to_json(const Realization& r);
json to_json(const RightFreeConfig& c);
json to_json(const SliceReduction& r);
json to_json(const IsoMatching& m);
json to_json(const GqResult& r);
json to_json(const LemmaReport& r);
json to_json(const GluingReport& r);
json to_json(const PrimeFieldMatrix& m);
json to_json(const SearchBounds& b);
json to_json(const CampaignReport& r);
json to_json(const SmallIntersectionReport& r);

int parse_int(const json& j, const Where& at);
std::vector<int> parse_ints(const json& j, const Where& at);
Point parse_point(const json& j, int dim, const Where& at);
/// dim < 0 accepts any dimension shared by all points.
std::vector<Point> parse_points(const json& j, int dim, const Where& at);
StandardShape parse_standard(const json& j, const Where& at);
SkewShape parse_skew(const json& j, const Where& at);
Generators parse_ideal(const json& j, int* dim, const Where& at);
GluingData parse_gluing(const json& j, const Where& at);

struct PlanInput {
  FloorPlan plan;
  std::optional<std::vector<int>> bz;
  std::optional<std::vector<int>> cz;
};
PlanInput parse_plan(const json& j, const Where& at);
RightFreeConfig parse_config(const json& j, const Where& at);

/// Ideal-level description of a gluing: {"n", "I", "J", "K", "L"}.
struct IdealGluing {
  int n = 0;
  Generators i, j, k, l;
};
IdealGluing parse_ideal_gluing(const json& j, const Where& at);

/// Keys max_components, max_cells, box ([w,h] or [w,h,depth]) and
/// max_third_offset, each optional; missing ones come from `base`. A "schema"
/// key is tolerated.
SearchBounds parse_bounds(const json& j, const SearchBounds& base, const Where& at);

}  // namespace gerst
