#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "gerst/enumerate.hpp"
#include "gerst/oracle.hpp"

using namespace gerst;

namespace {

PrimeFieldMatrix unit(std::size_t d, std::size_t i, std::size_t j, std::uint32_t p = kDefaultPrime) {
  PrimeFieldMatrix m(p, d);
  m.set(i, j, 1);
  return m;
}

GluingData two_variable_gluing() {
  const auto zeta = quotient_cells(2, fx::ideal_i(), fx::ideal_k());
  const auto xi = quotient_cells(2, fx::ideal_j(), fx::ideal_k());
  return gluing_from_ideals(2, fx::ideal_i(), fx::ideal_j(), fx::ideal_k(), fx::ideal_k(),
                            enumerate_monomial_isos(zeta, xi).at(0));
}

// Valid gluing data with small random parts; n = 2 or 3.
std::vector<GluingData> random_gluings(std::uint32_t seed, int dim, int count) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto shapes = connected_shapes_upto(dim, 3);
  auto random_point = [&](int hi) {
    Point p(dim);
    for (int k = 0; k < dim; ++k) p[k] = pick(0, hi);
    return p;
  };
  std::vector<GluingData> out;
  while (static_cast<int>(out.size()) < count) {
    GluingData g{StandardShape(dim), StandardShape(dim), {}, {}, {}};
    for (int j = pick(1, 3); j > 0; --j) {
      const auto& level = shapes[static_cast<std::size_t>(pick(1, 3))];
      g.nu.push_back(level[static_cast<std::size_t>(pick(0, static_cast<int>(level.size()) - 1))]);
      g.b.push_back(random_point(3));
      g.c.push_back(random_point(3));
    }
    // lambda, mu: closure of the placed copies plus a few extra cells
    const Cells pb = g.placed_b(), pc = g.placed_c();
    std::vector<Point> lam(pb.begin(), pb.end()), mu(pc.begin(), pc.end());
    for (int k = pick(0, 2); k > 0; --k) lam.push_back(random_point(3));
    for (int k = pick(0, 2); k > 0; --k) mu.push_back(random_point(3));
    g.lambda = StandardShape::closure_of(dim, make_cells(dim, lam));
    g.mu = StandardShape::closure_of(dim, make_cells(dim, mu));
    if (!validate_gluing(g).ok) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(Field, Construction) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(kDefaultPrime));
  EXPECT_TRUE(is_prime(kCheckPrime));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(65535));
  try {
    PrimeFieldMatrix(10, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.clause(), "prime");
  }
  EXPECT_THROW(PrimeFieldMatrix(5, 5), Error);
  EXPECT_NO_THROW(PrimeFieldMatrix(7, 5));
}

TEST(Field, Arithmetic) {
  PrimeFieldMatrix m(7, 2);
  m.set(0, 1, -1);
  EXPECT_EQ(m(0, 1), 6u);
  m.set(1, 0, 15);
  EXPECT_EQ(m(1, 0), 1u);
  const auto sq = m * m;  // [[0,-1],[1,0]]^2 = -I
  EXPECT_EQ(sq(0, 0), 6u);
  EXPECT_EQ(sq(1, 1), 6u);
  EXPECT_EQ(sq(0, 1), 0u);
  EXPECT_TRUE(commute(m, sq));
  EXPECT_FALSE(commute(unit(2, 0, 1, 7), unit(2, 1, 0, 7)));
  EXPECT_EQ(PrimeFieldMatrix::identity(7, 2) * m, m);
}

TEST(Algebra, SmallMatrixSets) {
  EXPECT_EQ(algebra_dimension({PrimeFieldMatrix(kDefaultPrime, 4)}), 1u);
  EXPECT_EQ(algebra_dimension({unit(4, 0, 2), unit(4, 0, 3), unit(4, 1, 2), unit(4, 1, 3)}), 5u);
  PrimeFieldMatrix jordan(kDefaultPrime, 6);
  for (std::size_t i = 0; i + 1 < 6; ++i) jordan.set(i + 1, i, 1);
  EXPECT_EQ(algebra_dimension({jordan}), 6u);
  EXPECT_EQ(algebra_dimension({PrimeFieldMatrix::identity(kDefaultPrime, 3)}), 1u);
  try {
    algebra_dimension({unit(2, 0, 1), unit(2, 1, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.clause(), "commuting");
  }
  EXPECT_THROW(algebra_dimension(std::vector<PrimeFieldMatrix>{}), Error);
}

TEST(Module, BasisOrder) {
  const auto g = fx::n4_counterexample();
  const auto basis = module_basis(g);
  ASSERT_EQ(basis.cells.size(), 4u);
  EXPECT_FALSE(basis.cells[0].right);
  EXPECT_EQ(basis.cells[0].cell, (Point{0, 0, 0, 0}));
  EXPECT_TRUE(basis.cells[3].right);
  EXPECT_EQ(basis.cells[3].cell, (Point{0, 0, 0, 0}));
  EXPECT_EQ(basis.identification.size(), 2u);
}

TEST(Module, FourVariableCounterexample) {
  const auto r = verify_gq(fx::n4_counterexample());
  EXPECT_EQ(r.dim_n, 4u);
  EXPECT_EQ(r.dim_alg, 5u);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.union_size, 5u);
  EXPECT_TRUE(r.matches_union);
  EXPECT_EQ(verify_gq(fx::n4_counterexample(), kCheckPrime).dim_alg, 5u);
}

TEST(Module, TwoVariableGluing) {
  const auto r = verify_gq(two_variable_gluing());
  EXPECT_EQ(r.dim_n, 17u);
  EXPECT_EQ(r.dim_alg, 12u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.union_size, 12u);
  EXPECT_TRUE(r.matches_union);
  EXPECT_EQ(r.prime, kDefaultPrime);
  EXPECT_THROW(verify_gq(two_variable_gluing(), 13), Error);  // 13 <= 17
}

TEST(Module, MatricesMatchReference) {
  for (const auto& g : random_gluings(31, 3, 150)) {
    const auto mats = module_to_matrices(g);
    const auto ref = brute::module_matrices(g, kDefaultPrime);
    ASSERT_EQ(mats.size(), ref.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
      ASSERT_EQ(mats[i].size(), module_dimension(g));
      for (std::size_t r = 0; r < mats[i].size(); ++r)
        for (std::size_t c = 0; c < mats[i].size(); ++c)
          ASSERT_EQ(mats[i](r, c), ref[i][r][c]);
    }
  }
}

TEST(Module, DimensionMatchesReference) {
  for (int dim : {2, 3}) {
    for (const auto& g : random_gluings(40 + static_cast<std::uint32_t>(dim), dim, 120)) {
      const auto ref = brute::algebra_dimension(brute::module_matrices(g, kDefaultPrime), kDefaultPrime);
      ASSERT_EQ(algebra_dimension(module_to_matrices(g)), ref);
      ASSERT_EQ(algebra_dimension(module_action(g)), ref);
      ASSERT_EQ(algebra_dimension(module_action(g), kCheckPrime), ref);
    }
  }
}

TEST(Module, TwoVariablesAlwaysHold) {
  for (const auto& g : random_gluings(50, 2, 300)) {
    const auto r = verify_gq(g);
    ASSERT_TRUE(r.holds) << r.dim_alg << " > " << r.dim_n;
    ASSERT_LE(r.dim_alg, r.union_size);
  }
}
