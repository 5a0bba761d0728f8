#pragma once

// Linear-algebra ground truth: the matrices of multiplication by x_i on a
// glued module, and the dimension of the unital algebra they generate.

#include <cstdint>
#include <vector>

#include "gerst/gluing.hpp"

namespace gerst {

inline constexpr std::uint32_t kDefaultPrime = 10007;
inline constexpr std::uint32_t kCheckPrime = 65537;

bool is_prime(std::uint32_t p);

class PrimeFieldMatrix {
 public:
  /// Throws (clause "prime") unless p is a prime larger than d.
  PrimeFieldMatrix(std::uint32_t p, std::size_t d);

  static PrimeFieldMatrix identity(std::uint32_t p, std::size_t d);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return d_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v);
  const std::vector<std::uint32_t>& entries() const noexcept { return a_; }

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y);
  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t d_;
  std::vector<std::uint32_t> a_;
};

bool commute(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y);

/// Left cells in lexicographic order, then the right cells that are not glued.
struct ModuleBasis {
  struct Entry {
    bool right;
    Point cell;
  };
  std::vector<Entry> cells;
  /// Glued right-side cell -> basis index of the left-side cell it equals.
  std::vector<std::pair<Point, std::size_t>> identification;
};

ModuleBasis module_basis(const GluingData& g);

/// Each x_i acts on basis vectors by partial maps: act[i][k] is the index of
/// x_i * basis[k], or -1 when the product is zero.
struct MonomialAction {
  std::size_t d = 0;
  std::vector<std::vector<int>> act;
};

/// Throws (clause "internal") if the maps fail to commute.
MonomialAction module_action(const GluingData& g);

std::vector<PrimeFieldMatrix> to_matrices(const MonomialAction& a, std::uint32_t p);

/// Pairwise commuting matrices of size module_dimension(g).
std::vector<PrimeFieldMatrix> module_to_matrices(const GluingData& g,
                                                 std::uint32_t p = kDefaultPrime);

/// Dimension of the unital algebra generated by the matrices. Throws (clause
/// "commuting") on non-commuting input.
std::size_t algebra_dimension(const std::vector<PrimeFieldMatrix>& mats);

/// Same quantity for a monomial action; works on partial maps directly.
std::size_t algebra_dimension(const MonomialAction& a, std::uint32_t p = kDefaultPrime);

struct GqResult {
  std::size_t dim_n = 0;
  std::size_t dim_alg = 0;
  bool holds = true;
  std::uint32_t prime = kDefaultPrime;
  std::size_t union_size = 0;  // |lambda ∪ mu|
  bool matches_union = true;   // dim_alg == union_size
};

GqResult verify_gq(const GluingData& g, std::uint32_t p = kDefaultPrime);

}  // namespace gerst
