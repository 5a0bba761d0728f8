#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gerst {

/// Largest ambient dimension supported. Three is the working case; four is
/// needed for the four-matrix counterexample.
inline constexpr int kMaxDim = 4;

/// Failure raised for malformed input. `clause` names the violated condition
/// so callers (and the CLI) can report it without parsing the message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::string clause = {})
      : std::runtime_error(what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// A lattice vector in Z^n, n <= kMaxDim. Cells of shapes are the
/// nonnegative ones; differences and translations may go negative.
class Point {
 public:
  constexpr Point() = default;
  explicit constexpr Point(int dim) : dim_(static_cast<std::uint8_t>(dim)) {
    if (dim < 0 || dim > kMaxDim) throw Error("dimension out of range", "dimension");
  }
  Point(std::initializer_list<int> coords);
  explicit Point(std::span<const int> coords);

  static constexpr Point origin(int dim) { return Point(dim); }
  static Point unit(int dim, int axis);

  constexpr int dim() const noexcept { return dim_; }
  constexpr int operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  constexpr int& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }

  bool nonnegative() const noexcept;
  bool is_origin() const noexcept;

  /// Componentwise order of the lattice N^n.
  bool leq(const Point& o) const noexcept;

  Point meet(const Point& o) const;
  Point join(const Point& o) const;

  /// Drops the last coordinate (N^3 -> N^2 projection onto the first two).
  Point project() const;
  /// Appends a last coordinate (N^2 -> N^3 with the given height).
  Point lift(int last) const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }

  /// Lexicographic order on coordinates (dimension compared first).
  friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    for (int i = 0; i < a.dim_; ++i)
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const Point& a, const Point& b) noexcept {
    return (a <=> b) == 0;
  }

  std::vector<int> coords() const;
  std::string str() const;

 private:
  std::array<int, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

/// Colexicographic comparison: last coordinate is most significant.
bool colex_less(const Point& a, const Point& b) noexcept;

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// A finite set of points stored sorted and deduplicated.
using Cells = std::vector<Point>;

/// Sorts, deduplicates and checks that every point has dimension `dim`.
Cells make_cells(int dim, std::vector<Point> pts);

bool contains(const Cells& cells, const Point& p);

/// Componentwise minimum of a nonempty set.
Point meet(const Cells& cells);
/// Componentwise maximum of a nonempty set.
Point join(const Cells& cells);

Cells translate(const Cells& cells, const Point& v);
Cells set_union(const Cells& a, const Cells& b);
Cells set_intersection(const Cells& a, const Cells& b);
Cells set_difference(const Cells& a, const Cells& b);
bool disjoint(const Cells& a, const Cells& b);
bool subset(const Cells& a, const Cells& b);

}  // namespace gerst
