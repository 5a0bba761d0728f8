#pragma once

// Lattice geometry of N^n: standard (downward closed) shapes, skew shapes,
// connected components, height functions of 3-D skew shapes, and the
// dictionary between standard shapes and finite-colength monomial ideals.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gerst/point.hpp"

namespace gerst {

/// Smallest downward-closed superset of `cells`.
Cells closure_leq(const Cells& cells);

bool is_downward_closed(const Cells& cells);

/// True iff closure_leq(cells) \ cells is downward closed.
bool is_skew_shape(const Cells& cells);

/// Finite subset of N^n closed under the componentwise order; equivalently
/// the standard monomials of a finite-colength monomial ideal.
class StandardShape {
 public:
  explicit StandardShape(int dim = 0) : dim_(dim) {}
  /// Throws Error("...", "downward-closed") unless `cells` is downward closed.
  StandardShape(int dim, std::vector<Point> cells);

  static StandardShape closure_of(int dim, const Cells& cells);

  int dim() const noexcept { return dim_; }
  const Cells& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(const Point& p) const { return gerst::contains(cells_, p); }

  friend bool operator==(const StandardShape&, const StandardShape&) = default;

 private:
  struct Trusted {};
  StandardShape(Trusted, int dim, Cells cells) : dim_(dim), cells_(std::move(cells)) {}

  int dim_ = 0;
  Cells cells_;
};

/// Difference of two standard shapes, stored in canonical form: `outer` is the
/// closure of the cells and `inner` is outer minus the cells.
class SkewShape {
 public:
  explicit SkewShape(int dim = 0) : dim_(dim), outer_(dim), inner_(dim) {}
  /// Throws Error("...", "skew") when the cells do not form a skew shape.
  SkewShape(int dim, std::vector<Point> cells);
  explicit SkewShape(const StandardShape& s);

  int dim() const noexcept { return dim_; }
  const Cells& cells() const noexcept { return cells_; }
  const StandardShape& outer() const noexcept { return outer_; }
  const StandardShape& inner() const noexcept { return inner_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(const Point& p) const { return gerst::contains(cells_, p); }

  /// Nonempty with meet at the origin.
  bool is_abstract() const;
  bool is_connected() const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.dim_ == b.dim_ && a.cells_ == b.cells_;
  }
  friend bool operator<(const SkewShape& a, const SkewShape& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (a.cells_.size() != b.cells_.size()) return a.cells_.size() < b.cells_.size();
    return a.cells_ < b.cells_;
  }

 private:
  int dim_ = 0;
  Cells cells_;
  StandardShape outer_;
  StandardShape inner_;
};

Point meet(const SkewShape& s);

/// s - meet(s). Throws on the empty shape.
SkewShape normalize(const SkewShape& s);

/// s + v; the result must stay inside N^n.
SkewShape translate(const SkewShape& s, const Point& v);

/// Unit-step connected components, ordered lexicographically by their meets.
std::vector<SkewShape> connected_components(const SkewShape& s);

/// True iff s + v = t for some v in Z^n. Two empty shapes are equivalent.
bool translation_equivalent(const SkewShape& s, const SkewShape& t);

/// Upper and lower height functions N^2 -> N of a 3-D skew shape. Zero values
/// are not stored, so both maps are finitely supported by construction.
class HeightPair {
 public:
  using Map = std::map<Point, int>;

  HeightPair() = default;
  HeightPair(Map upper, Map lower);

  int upper(const Point& a) const;
  int lower(const Point& a) const;
  const Map& upper_map() const noexcept { return upper_; }
  const Map& lower_map() const noexcept { return lower_; }

  void set_upper(const Point& a, int v);
  void set_lower(const Point& a, int v);

  /// Name of the first violated condition, checking in order:
  /// "(i) upper nonzero", "(iii) upper >= lower", "(iv) nonincreasing",
  /// "(v) flat columns covered". (ii) holds by construction. With
  /// `allow_empty` condition (i) is skipped.
  std::optional<std::string> violation(bool allow_empty = false) const;

  friend bool operator==(const HeightPair&, const HeightPair&) = default;

 private:
  Map upper_;
  Map lower_;
};

HeightPair height_functions(const SkewShape& s);

/// Inverse of height_functions on abstract skew shapes; the all-zero pair maps
/// to the empty shape. Throws naming the failed condition, or "abstract" when
/// the pair is valid but describes a shape whose meet is not the origin.
SkewShape shape_from_heights(const HeightPair& hp);

/// lower(a) <= a3 < upper(a).
bool contains_cell(const HeightPair& hp, const Point& a, int a3);

// -- two-dimensional paths --------------------------------------------------

enum class Direction { NorthEast, NorthWest, SouthEast, SouthWest };

using Path = std::vector<Point>;

/// All lattice points between r and s coordinatewise (2-D).
Cells rectangle(const Point& r, const Point& s);

/// Consecutive points differ by a unit vector.
bool is_path(const Path& path);

/// Every step lies in one of the four quadrant step sets; reports which.
bool is_unidirectional(const Path& path, Direction* dir = nullptr);

/// A unidirectional path r -> s inside the connected 2-D skew shape `sigma`
/// and inside the rectangle spanned by r and s.
Path find_unidirectional_path(const SkewShape& sigma, const Point& r, const Point& s);

// -- monomial ideals --------------------------------------------------------

/// Exponent vectors of monomial generators.
using Generators = std::vector<Point>;

/// Standard monomials of the ideal. Throws (clause "finite-colength") when
/// some axis has no pure-power generator.
StandardShape ideal_to_shape(int dim, const Generators& gens);

/// Minimal generators of the ideal whose standard monomials are `shape`,
/// sorted lexicographically. The empty shape yields the unit ideal.
Generators shape_to_ideal(const StandardShape& shape);

}  // namespace gerst
