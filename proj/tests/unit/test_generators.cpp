#include <gtest/gtest.h>

#include "intapprox/intapprox.hpp"
#include "oracles.hpp"

using namespace intapprox;

namespace {

const FieldSpec kF2{};

TEST(RandomModule, ValidWithConstantDimension) {
  Rng rng(1);
  for (int n = 1; n <= 8; ++n) {
    for (std::size_t d : {0u, 1u, 3u, 6u}) {
      const PersistenceModule mod = random_module(n, d, n % 2 == 0 ? kF2 : FieldSpec(3), rng);
      ASSERT_FALSE(validate(mod).has_value());
      for (Vertex v : mod.grid().vertices()) EXPECT_EQ(mod.dim(v), d);
    }
  }
}

TEST(RandomModule, ZeroDimensionIsZeroModule) {
  Rng rng(3);
  const PersistenceModule mod = random_module(4, 0, kF2, rng);
  EXPECT_EQ(mod, PersistenceModule(Grid(2, 4), kF2));
}

TEST(RandomModule, ReproducibleForSeed) {
  Rng a(99), b(99), c(100);
  const PersistenceModule x = random_module(6, 4, kF2, a);
  EXPECT_EQ(print_pmod(x), print_pmod(random_module(6, 4, kF2, b)));
  EXPECT_NE(x, random_module(6, 4, kF2, c));
}

TEST(Decomposable, EmptyAndSingleSummand) {
  Rng rng(5);
  auto none = random_interval_decomposable(2, 3, 0, kF2, rng, true);
  EXPECT_EQ(none.module, PersistenceModule(Grid(2, 3), kF2));
  EXPECT_TRUE(none.multiplicities.is_zero());
  auto one = random_interval_decomposable(2, 3, 1, kF2, rng, false);
  ASSERT_EQ(one.summands.size(), 1u);
  EXPECT_EQ(one.module, interval_module(Grid(2, 3), one.summands[0]));
  EXPECT_EQ(one.multiplicities[one.summands[0]], 1);
}

TEST(Decomposable, DisguiseKeepsRankAndDimensions) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng plain_rng(seed), masked_rng(seed);
    auto plain = random_interval_decomposable(2, 4, 6, FieldSpec(3), plain_rng, false);
    auto masked = random_interval_decomposable(2, 4, 6, FieldSpec(3), masked_rng, true);
    ASSERT_EQ(plain.summands, masked.summands);
    EXPECT_FALSE(validate(masked.module).has_value());
    EXPECT_EQ(rank_invariant(plain.module), rank_invariant(masked.module));
    EXPECT_EQ(dimension_vector(plain.module), dimension_vector(masked.module));
  }
}

TEST(Decomposable, MultiplicitiesCountSummands) {
  Rng rng(8);
  auto s = random_interval_decomposable(1, 5, 9, kF2, rng, true);
  std::int64_t total = 0;
  for (std::int64_t v : s.multiplicities.values()) total += v;
  EXPECT_EQ(total, 9);
  for (const Interval& iv : s.summands) EXPECT_GE(s.multiplicities[iv], 1);
}

TEST(Buchet, ShapeAndValidity) {
  for (std::size_t l = 1; l <= 3; ++l) {
    for (FieldSpec f : {kF2, FieldSpec(3)}) {
      const PersistenceModule mod = buchet_module(l, f);
      ASSERT_FALSE(validate(mod).has_value()) << "l = " << l;
      const std::size_t e = l;
      const std::vector<std::size_t> top{e, 2 * e, 2 * e, e, 0}, bottom{0, e, 2 * e, 2 * e, e};
      for (int j = 1; j <= 5; ++j) {
        EXPECT_EQ(mod.dim({2, j}), top[static_cast<std::size_t>(j - 1)]);
        EXPECT_EQ(mod.dim({1, j}), bottom[static_cast<std::size_t>(j - 1)]);
      }
    }
  }
  EXPECT_EQ(dimension_vector(buchet_module(1)).to_string(), "(1 2 2 1 0 / 0 1 2 2 1)");
  EXPECT_THROW(buchet_module(0), PreconditionError);
}

TEST(Buchet, MiddleMapCarriesTheJordanBlock) {
  const PersistenceModule mod = buchet_module(2);
  EXPECT_EQ(mod.vmap({1, 3}), FFMatrix::from_rows(kF2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 0, 1}}));
  EXPECT_EQ(mod.hmap({2, 1}), FFMatrix::from_rows(kF2, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  EXPECT_EQ(mod.vmap({1, 4}), FFMatrix::from_rows(kF2, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(Example, FixtureShape) {
  const PersistenceModule mod = example_negativedtilde();
  EXPECT_FALSE(validate(mod).has_value());
  EXPECT_EQ(dimension_vector(mod).to_string(), "(1 2 1 / 0 1 1)");
  EXPECT_EQ(mod.hmap({2, 1}), FFMatrix::from_rows(kF2, {{1}, {1}}));
  EXPECT_EQ(mod.hmap({2, 2}), FFMatrix::from_rows(kF2, {{0, 1}}));
  EXPECT_EQ(mod.vmap({1, 2}), FFMatrix::from_rows(kF2, {{0}, {1}}));
}

}  // namespace
