#pragma once

// Planar right-free configurations: pieces pairwise incomparable on the
// lambda side and disjoint on the mu side.

#include <cstdint>
#include <map>
#include <vector>

#include "gerst/floorplan.hpp"
#include "gerst/shapes.hpp"

namespace gerst {

struct RightFreeConfig {
  std::vector<SkewShape> nu0;  // 2-D, connected, abstract
  std::vector<Point> b;
  std::vector<Point> c;

  std::size_t cells() const;
  friend bool operator==(const RightFreeConfig&, const RightFreeConfig&) = default;
};

/// Throws Error with clause "dimension", "connected", "abstract",
/// "comparable" or "overlap".
void validate_config(const RightFreeConfig& cfg);

/// Placed unions X = U(nu0_j + b_j) and Y = U(nu0_j + c_j).
Cells placed_x(const RightFreeConfig& cfg);
Cells placed_y(const RightFreeConfig& cfg);
/// Closures of X and Y.
Cells lambda0(const RightFreeConfig& cfg);
Cells mu0(const RightFreeConfig& cfg);

/// Cells v of sigma with v + e_i outside sigma for every axis i.
Cells socle(const Cells& sigma);

/// Cells grouped by second coordinate.
std::map<int, Cells> rows(const Cells& sigma);
Cells row(const Cells& sigma, int i);

/// Largest j with (0, j) in sigma. Throws (clause "column") when sigma has no
/// cell in column 0.
int height(const Cells& sigma);

/// Number of nonempty rows.
std::size_t row_count(const Cells& sigma);

/// |lambda° ∩ mu°| < |nu0|.
bool has_small_intersection(const RightFreeConfig& cfg);

/// x <= y: lambda° and mu° contained, |nu0| no larger, deficit no larger.
bool config_leq(const RightFreeConfig& x, const RightFreeConfig& y);

/// Bottom slices of a right-free plan. A disconnected slice is split into its
/// components, each anchored at b_j (or c_j) plus its meet. Throws (clause
/// "right-free") when the plan is not right-free.
RightFreeConfig bottom_config(const FloorPlan& plan);

struct LemmaReport {
  bool socle_lambda_disjoint = true;  // Soc(lambda°) ∩ mu° = ∅
  bool socle_mu_disjoint = true;      // Soc(mu°) ∩ lambda° = ∅
  bool rows_x_covered = true;         // row_r(X) nonempty for r <= H(lambda°)
  bool rows_y_covered = true;         // row_s(Y) nonempty for s <= H(mu°)
  int height_lambda = 0;              // H(lambda°)
  int height_mu = 0;                  // H(mu°)
  std::size_t rows_lambda = 0;        // |pi_2(lambda°)|
  std::size_t rows_nu_sum = 0;        // sum |pi_2(nu0_j)|
  bool height_sum = true;             // rows_lambda == rows_nu_sum
  bool height_mu_below = true;        // H(mu°) <= H(lambda°)
  bool top_row_contained = true;      // row_H(mu°)(lambda°) ⊆ row_H(mu°)(mu°)

  bool all() const {
    return socle_lambda_disjoint && socle_mu_disjoint && rows_x_covered && rows_y_covered &&
           height_sum && height_mu_below && top_row_contained;
  }
};

/// Evaluates the conclusions that hold for a minimal configuration of small
/// intersection. On arbitrary configurations they are diagnostics only.
LemmaReport check_minimal_config_lemmas(const RightFreeConfig& cfg);

/// Canonical form: components sorted by (shape, b, c).
RightFreeConfig canonical_form(const RightFreeConfig& cfg);

}  // namespace gerst
