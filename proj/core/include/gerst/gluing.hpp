#pragma once

// Combinatorial modules: two standard shapes glued along translated copies of
// connected abstract skew shapes.

#include <optional>
#include <string>
#include <vector>

#include "gerst/shapes.hpp"

namespace gerst {

/// (lambda, mu, nu, b, c). Each nu[j] is stored normalized; nu[j] + b[j] sits
/// inside lambda and nu[j] + c[j] inside mu.
struct GluingData {
  StandardShape lambda;
  StandardShape mu;
  std::vector<SkewShape> nu;
  std::vector<Point> b;
  std::vector<Point> c;

  int dim() const noexcept { return lambda.dim(); }
  std::size_t components() const noexcept { return nu.size(); }
  /// Sum of |nu_j|.
  std::size_t glued_cells() const;
  /// Disjoint union of nu_j + b_j (resp. + c_j).
  Cells placed_b() const;
  Cells placed_c() const;
};

struct GluingReport {
  bool ok = true;
  std::string clause;  // e.g. "disjointness", "upward-closed", "containment"
  std::string side;    // "lambda" or "mu" when the clause is side specific
  std::string detail;
  Cells witness;
};

/// Checks that every nu_j is a connected abstract skew shape and that the
/// placed copies are disjoint, inside, and closed under >= in lambda and mu.
/// Throws Error(..., "dimension") when the parts disagree on n or lengths.
GluingReport validate_gluing(const GluingData& g);

/// Throws Error with the report's clause unless g is valid.
void require_valid(const GluingData& g);

/// |lambda| + |mu| - |nu|.
std::size_t module_dimension(const GluingData& g);

/// |nu| > |lambda ∩ mu|.
bool is_counterexample(const GluingData& g);

/// Replaces lambda and mu by the closures of the placed copies of nu.
GluingData scaffold(const GluingData& g);

/// Component j of zeta goes to component target[j] of xi, whose meet is
/// anchors[j]; shifts[j] = anchors[j] - meet(zeta_j).
struct IsoMatching {
  std::vector<int> target;
  std::vector<Point> anchors;
  std::vector<Point> shifts;

  friend bool operator==(const IsoMatching&, const IsoMatching&) = default;
};

/// All monomial isomorphisms between the quotients whose monomials are zeta
/// and xi: bijections of components respecting translation classes. Output is
/// sorted by `target`.
std::vector<IsoMatching> enumerate_monomial_isos(const SkewShape& zeta, const SkewShape& xi);

struct Summand {
  SkewShape shape;  // normalized
  Point anchor;     // meet of the component inside the ambient shape
};

/// Connected components of K/I, each spanning an indecomposable summand.
std::vector<Summand> indecomposable_decomposition(const SkewShape& k_over_i);

/// Every cell of nu_j + b_j has third coordinate >= 1.
bool summand_in_x3(const GluingData& g, std::size_t j);

/// Assembles gluing data from ideals I ⊆ K and J ⊆ L and a matching of the
/// components of K/I with those of L/J.
GluingData gluing_from_ideals(int dim, const Generators& i, const Generators& j,
                              const Generators& k, const Generators& l,
                              const IsoMatching& matching);

/// The monomials of K/I: cells of shape(I) outside shape(K).
SkewShape quotient_cells(int dim, const Generators& i, const Generators& k);

}  // namespace gerst
