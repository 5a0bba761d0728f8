#pragma once

// Bounded exhaustive campaigns over shapes, floor plans and gluing data.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gerst/rightfree.hpp"

namespace gerst {

struct SearchBounds {
  int max_components = 3;
  int max_cells = 5;
  int w = 3;
  int h = 3;
  int depth = 4;  // third extent, used by the gluing-data enumeration
  int max_third_offset = 2;

  /// Throws (clause "bounds") on nonpositive extents or a negative offset.
  void check() const;
};

struct CampaignReport {
  std::string name;
  SearchBounds bounds;
  std::uint64_t instances_checked = 0;
  /// Named auxiliary counts, in a fixed order per campaign.
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  std::uint64_t violation_count = 0;
  /// JSON text of the first violations found (at most kMaxStoredViolations).
  std::vector<std::string> violations;
  double wall_time = 0;

  bool ok() const { return violation_count == 0; }
  std::uint64_t counter(const std::string& key) const;
};

inline constexpr std::size_t kMaxStoredViolations = 50;

/// canonical-minimality, height-drop, rightfree-not-counterexample,
/// no-small-intersection, oracle-bridge.
const std::vector<std::string>& campaign_names();

/// The bounds each campaign is meant to run at by default.
SearchBounds default_bounds(const std::string& name);

/// Throws (clause "campaign") for an unknown name.
CampaignReport run_campaign(const std::string& name, const SearchBounds& bounds, int jobs = 1);

struct SmallIntersectionReport {
  int max_components = 0;
  int max_cells = 0;
  int w = 0;
  int h = 0;
  int shards = 1;
  int shard = 0;
  std::uint64_t shape_tuples = 0;
  std::uint64_t candidates_examined = 0;  // (b placements) x (c placements), summed
  std::vector<RightFreeConfig> witnesses;  // canonical forms, sorted
  double wall_time = 0;
};

/// Every right-free configuration with at most max_components pieces, at most
/// max_cells cells and all placed cells in the w x h box, that has small
/// intersection. Shard `shard` of `shards` covers the tuples whose first shape
/// index is congruent to `shard`.
SmallIntersectionReport search_small_intersection(int max_components, int max_cells, int w,
                                                  int h, int shards = 1, int shard = 0,
                                                  int jobs = 1);

/// Worker count from GERST_JOBS, defaulting to 1.
int default_jobs();

}  // namespace gerst
