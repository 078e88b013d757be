#include <gtest/gtest.h>

#include "intapprox/intapprox.hpp"
#include "oracles.hpp"

using namespace intapprox;

namespace {

const FieldSpec kF2{};

// Random valid module on an m x n grid: random spaces, maps chosen so every
// square commutes, by summing random thin pieces and disguising the result.
PersistenceModule random_valid_module(int m, int n, FieldSpec f, Rng& rng) {
  auto sample = random_interval_decomposable(m, n, 4, f, rng, true);
  return sample.module;
}

TEST(Validate, IntervalModulesCommute) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 3}, {4, 6}}) {
    const Grid g(m, n);
    for (const Interval& iv : enumerate_intervals(m, n)) {
      ASSERT_FALSE(validate(interval_module(g, iv)).has_value()) << iv;
    }
  }
}

TEST(Validate, StaircaseInFourBySix) {
  const Interval iv(1, {{4, 6}, {3, 5}, {2, 4}, {1, 2}});
  const PersistenceModule mod = interval_module(Grid(4, 6), iv);
  EXPECT_FALSE(validate(mod).has_value());
  EXPECT_EQ(dimension_vector(mod).to_string(), "(1 1 0 0 0 0 / 0 1 1 1 0 0 / 0 0 1 1 1 0 / 0 0 0 1 1 1)");
}

TEST(Validate, GeneratorOutputCommutes) {
  Rng rng(1);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_FALSE(validate(random_module(n, 3, kF2, rng)).has_value());
    EXPECT_FALSE(validate(random_module(n, 2, FieldSpec(3), rng)).has_value());
  }
}

TEST(Validate, FlippedEntryIsReportedAtItsSquare) {
  PersistenceModule mod = example_negativedtilde();
  FFMatrix h = mod.hmap({1, 2});
  h.at(0, 0) ^= 1;
  mod.set_hmap({1, 2}, h);
  const auto bad = validate(mod);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->square, (Vertex{1, 2}));
}

TEST(Module, ShapesAreEnforced) {
  PersistenceModule mod(Grid(2, 2), kF2, {1, 2, 0, 1});
  EXPECT_THROW(mod.set_hmap({1, 1}, FFMatrix(1, 1, kF2)), ShapeError);
  EXPECT_NO_THROW(mod.set_hmap({1, 1}, FFMatrix(2, 1, kF2)));
  EXPECT_THROW(mod.set_hmap({1, 2}, FFMatrix(1, 1, kF2)), PreconditionError);
  EXPECT_THROW(mod.set_vmap({2, 1}, FFMatrix(1, 1, kF2)), PreconditionError);
  EXPECT_THROW(mod.set_vmap({1, 2}, FFMatrix(1, 2, FieldSpec(3))), ShapeError);
}

TEST(PathMaps, IdentityOnDiagonalAndArrowsOnEdges) {
  Rng rng(4);
  const PersistenceModule mod = random_module(4, 3, kF2, rng);
  const PathMapTable t(mod);
  for (Vertex v : mod.grid().vertices()) {
    EXPECT_EQ(t.at(v, v), FFMatrix::identity(mod.dim(v), kF2));
    if (v.col < 4) {
      EXPECT_EQ(t.at(v, {v.row, v.col + 1}), mod.hmap(v));
    }
    if (v.row < 2) {
      EXPECT_EQ(t.at(v, {v.row + 1, v.col}), mod.vmap(v));
    }
  }
  EXPECT_THROW(t.at({2, 1}, {1, 2}), PreconditionError);
}

TEST(PathMaps, OneProductPerNonTrivialPair) {
  Rng rng(4);
  const PersistenceModule mod = random_module(5, 2, kF2, rng);
  const PathMapTable t(mod);
  // Comparable pairs on 2 x n: 3 n (n + 1) / 2.
  EXPECT_EQ(t.size(), 45u);
  EXPECT_EQ(t.products(), 45u - 10u);
}

TEST(PathMaps, TwoByTwoCornerEqualsBothComposites) {
  Rng rng(12);
  const PersistenceModule mod = random_module(2, 3, FieldSpec(3), rng);
  const PathMapTable t(mod);
  EXPECT_EQ(t.at({1, 1}, {2, 2}), multiply(mod.vmap({1, 2}), mod.hmap({1, 1})));
  EXPECT_EQ(t.at({1, 1}, {2, 2}), multiply(mod.hmap({2, 1}), mod.vmap({1, 1})));
}

TEST(PathMaps, FixtureCornerMap) {
  const PersistenceModule mod = example_negativedtilde();
  const PathMapTable t(mod);
  const FFMatrix via_top = multiply(mod.hmap({2, 2}), mod.vmap({1, 2}));
  const FFMatrix via_bottom = multiply(mod.vmap({1, 3}), mod.hmap({1, 2}));
  EXPECT_EQ(t.at({1, 2}, {2, 3}), via_top);
  EXPECT_EQ(t.at({1, 2}, {2, 3}), via_bottom);
  EXPECT_EQ(t.at({1, 2}, {2, 3}), FFMatrix::from_rows(kF2, {{1}}));
}

// Every split of every path into two comparable halves composes to the
// stored map, on all grids up to 4 x 4.
TEST(PathMaps, PathIndependenceUpToFourByFour) {
  Rng rng(99);
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const PersistenceModule mod = random_valid_module(m, n, m % 2 == 0 ? kF2 : FieldSpec(3), rng);
      ASSERT_FALSE(validate(mod).has_value());
      const PathMapTable t(mod);
      const Grid& g = mod.grid();
      for (Vertex a : g.vertices()) {
        for (Vertex c : g.vertices()) {
          if (!precedes(a, c)) continue;
          for (Vertex b : g.vertices()) {
            if (precedes(a, b) && precedes(b, c)) {
              ASSERT_EQ(multiply(t.at(b, c), t.at(a, b)), t.at(a, c));
            }
          }
        }
      }
    }
  }
}

TEST(RankInvariant, RectangleIntervalModule) {
  const Grid g(2, 4);
  const Interval r = Interval::rectangle({1, 2}, {2, 3});
  for (const auto& [pair, rk] : rank_invariant(interval_module(g, r))) {
    EXPECT_EQ(rk, r.contains(pair.first) && r.contains(pair.second) ? 1u : 0u);
  }
}

TEST(RankInvariant, ZeroModuleAndRecomputation) {
  const PersistenceModule zero(Grid(2, 3), kF2);
  for (const auto& [pair, rk] : rank_invariant(zero)) EXPECT_EQ(rk, 0u);
  Rng rng(3);
  const PersistenceModule mod = random_module(4, 3, kF2, rng);
  const PathMapTable t(mod);
  for (const auto& [pair, rk] : rank_invariant(mod)) EXPECT_EQ(rk, oracle::naive_rank(t.at(pair.first, pair.second)));
}

TEST(DimensionVector, Basics) {
  EXPECT_EQ(dimension_vector(PersistenceModule(Grid(2, 2), kF2)).to_string(), "(0 0 / 0 0)");
  const Interval iv(1, {{2, 3}, {1, 2}});
  EXPECT_EQ(dimension_vector(interval_module(Grid(2, 3), iv)).to_string(), "(1 1 0 / 0 1 1)");
  EXPECT_EQ(dimension_vector(example_negativedtilde()).to_string(), "(1 2 1 / 0 1 1)");
}

TEST(DirectSum, AddsDimensionsAndRanks) {
  Rng rng(6);
  const PersistenceModule a = random_module(3, 2, kF2, rng);
  const PersistenceModule b = random_module(3, 3, kF2, rng);
  const PersistenceModule zero(a.grid(), kF2);
  EXPECT_EQ(direct_sum(a, zero), a);
  const PersistenceModule s = direct_sum(a, b);
  EXPECT_FALSE(validate(s).has_value());
  for (Vertex v : a.grid().vertices()) EXPECT_EQ(s.dim(v), a.dim(v) + b.dim(v));
  const auto ra = rank_invariant(a), rb = rank_invariant(b), rs = rank_invariant(s);
  for (const auto& [pair, r] : rs) EXPECT_EQ(r, ra.at(pair) + rb.at(pair));
  EXPECT_THROW(direct_sum(a, PersistenceModule(Grid(2, 4), kF2)), PreconditionError);
  EXPECT_THROW(direct_sum(a, PersistenceModule(a.grid(), FieldSpec(3))), PreconditionError);
}

TEST(Conjugate, IdentityAndInvariants) {
  Rng rng(10);
  const PersistenceModule mod = random_module(4, 3, FieldSpec(5), rng);
  std::vector<FFMatrix> id, random;
  for (Vertex v : mod.grid().vertices()) {
    id.push_back(FFMatrix::identity(mod.dim(v), mod.field()));
    random.push_back(random_invertible(mod.dim(v), mod.field(), rng));
  }
  EXPECT_EQ(conjugate(mod, id), mod);
  const PersistenceModule c = conjugate(mod, random);
  EXPECT_FALSE(validate(c).has_value());
  EXPECT_EQ(rank_invariant(c), rank_invariant(mod));
  EXPECT_EQ(dimension_vector(c), dimension_vector(mod));
  random[0] = FFMatrix(mod.dim({1, 1}), mod.dim({1, 1}), mod.field());
  EXPECT_THROW(conjugate(mod, random), PreconditionError);
}

TEST(IntervalModule, SimpleAndFull) {
  const Grid g(2, 3);
  const PersistenceModule s = interval_module(g, Interval::single({2, 2}));
  EXPECT_EQ(dimension_vector(s).to_string(), "(0 1 0 / 0 0 0)");
  const PersistenceModule full = interval_module(g, Interval::rectangle({1, 1}, {2, 3}));
  for (Vertex v : g.vertices()) {
    EXPECT_EQ(full.dim(v), 1u);
    if (v.col < 3) {
      EXPECT_EQ(full.hmap(v), FFMatrix::identity(1));
    }
    if (v.row < 2) {
      EXPECT_EQ(full.vmap(v), FFMatrix::identity(1));
    }
  }
  EXPECT_THROW(interval_module(g, Interval::single({3, 1})), PreconditionError);
}

}  // namespace
