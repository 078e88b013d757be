#include <gtest/gtest.h>

#include "intapprox/intapprox.hpp"
#include "oracles.hpp"

using namespace intapprox;

namespace {

const FieldSpec kF2{};
const FieldSpec kF3{3};

TEST(Rank, IdentityAndEqualRows) {
  EXPECT_EQ(rank(FFMatrix::identity(3, kF2)), 3u);
  EXPECT_EQ(rank(FFMatrix::from_rows(kF2, {{1, 1}, {1, 1}})), 1u);
}

TEST(Rank, EmptyMatricesHaveRankZero) {
  EXPECT_EQ(rank(FFMatrix(0, 5, kF2)), 0u);
  EXPECT_EQ(rank(FFMatrix(4, 0, kF3)), 0u);
  EXPECT_EQ(rank(FFMatrix(0, 0, kF2)), 0u);
}

TEST(Rank, BlockMatrixMatchesNaiveEliminator) {
  Rng rng(11);
  for (FieldSpec f : {kF2, kF3, FieldSpec(7)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const FFMatrix a = random_matrix(3, 4, f, rng);
      const FFMatrix b = random_matrix(3, 2, f, rng);
      const FFMatrix c = random_matrix(5, 2, f, rng);
      const FFMatrix blk = block2x2(a, b, ZeroBlock{}, c);
      ASSERT_EQ(blk.rows(), 8u);
      ASSERT_EQ(blk.cols(), 6u);
      EXPECT_EQ(rank(blk), oracle::naive_rank(blk));
    }
  }
}

TEST(Rank, TransposeInvariance) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const FFMatrix a = random_matrix(1 + trial % 7, 1 + trial % 5, trial % 2 == 0 ? kF2 : kF3, rng);
    EXPECT_EQ(rank(a), rank(transpose(a)));
  }
}

TEST(Rank, PackedGf2AgreesWithGenericPath) {
  Rng rng(2024);
  std::uniform_int_distribution<std::size_t> dim(0, 64);
  for (int trial = 0; trial < 500; ++trial) {
    FFMatrix a = random_matrix(dim(rng), dim(rng), kF2, rng);
    // Make some matrices rank-deficient so low ranks are exercised too.
    if (trial % 3 == 0 && a.rows() > 1) {
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(a.rows() - 1, j) = a(0, j);
    }
    ASSERT_EQ(rank_gf2(a), rank_generic(a)) << "trial " << trial;
  }
}

TEST(Rank, PackedPathRejectsOtherFields) { EXPECT_THROW(rank_gf2(FFMatrix(2, 2, kF3)), PreconditionError); }

TEST(Multiply, IdentityAndCharacteristicTwo) {
  const FFMatrix a = FFMatrix::from_rows(kF3, {{1, 2, 0}, {2, 2, 1}});
  EXPECT_EQ(multiply(a, FFMatrix::identity(3, kF3)), a);
  EXPECT_EQ(multiply(FFMatrix::from_rows(kF2, {{1, 1}}), FFMatrix::from_rows(kF2, {{1}, {1}})),
            FFMatrix::from_rows(kF2, {{0}}));
}

TEST(Multiply, MatchesSchoolbook) {
  Rng rng(3);
  for (FieldSpec f : {kF2, kF3, FieldSpec(65521)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const FFMatrix a = random_matrix(3, 4, f, rng);
      const FFMatrix b = random_matrix(4, 2, f, rng);
      EXPECT_EQ(multiply(a, b), oracle::schoolbook_multiply(a, b));
    }
    const FFMatrix big_a = random_matrix(70, 130, f, rng);
    const FFMatrix big_b = random_matrix(130, 67, f, rng);
    EXPECT_EQ(multiply(big_a, big_b), oracle::schoolbook_multiply(big_a, big_b));
  }
}

TEST(Multiply, ShapeMismatchThrows) {
  EXPECT_THROW(multiply(FFMatrix(2, 3, kF2), FFMatrix(2, 3, kF2)), ShapeError);
  EXPECT_THROW(multiply(FFMatrix(2, 2, kF2), FFMatrix(2, 2, kF3)), ShapeError);
}

TEST(Multiply, ZeroDimensionalFactors) {
  const FFMatrix p = multiply(FFMatrix(3, 0, kF2), FFMatrix(0, 4, kF2));
  EXPECT_EQ(p.rows(), 3u);
  EXPECT_EQ(p.cols(), 4u);
  EXPECT_TRUE(p.is_zero());
}

TEST(Kernel, TrivialCases) {
  EXPECT_EQ(kernel_basis(FFMatrix(2, 3, kF2)).cols(), 3u);
  EXPECT_EQ(kernel_basis(FFMatrix::identity(4, kF3)).cols(), 0u);
}

TEST(Kernel, RandomSelfConsistency) {
  Rng rng(8);
  for (FieldSpec f : {kF2, kF3, FieldSpec(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const FFMatrix a = random_matrix(trial % 6, 1 + trial % 9, f, rng);
      const FFMatrix k = kernel_basis(a);
      EXPECT_EQ(k.cols(), a.cols() - rank(a));
      EXPECT_TRUE(multiply(a, k).is_zero());
      EXPECT_EQ(rank(k), k.cols());
    }
  }
}

TEST(Stacking, TrivialShapes) {
  const FFMatrix i2 = FFMatrix::identity(2, kF2);
  EXPECT_EQ(hstack(i2, FFMatrix(2, 0, kF2)), i2);
  const FFMatrix one = FFMatrix::identity(1, kF2);
  EXPECT_EQ(block2x2(one, ZeroBlock{}, ZeroBlock{}, one), i2);
  EXPECT_THROW(hstack(i2, FFMatrix(3, 1, kF2)), ShapeError);
  EXPECT_THROW(vstack(i2, FFMatrix(1, 3, kF2)), ShapeError);
  EXPECT_THROW(block2x2(i2, one, one, i2), ShapeError);
}

TEST(Stacking, VstackRankMatchesOracle) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const FFMatrix a = random_matrix(2 + trial % 3, 5, kF3, rng);
    const FFMatrix b = random_matrix(1 + trial % 4, 5, kF3, rng);
    const FFMatrix v = vstack(a, b);
    EXPECT_EQ(rank(v), oracle::naive_rank(v));
    EXPECT_GE(rank(hstack(transpose(a), transpose(b))), std::max(rank(a), rank(b)));
  }
}

TEST(Pullback, TrivialCases) {
  const FFMatrix one = FFMatrix::identity(1, kF2);
  Pullback pb = pullback_basis(one, one);
  EXPECT_EQ(pb.phi1, one);
  EXPECT_EQ(pb.phi2, one);
  pb = pullback_basis(FFMatrix(1, 1, kF2), one);
  EXPECT_EQ(pb.phi1, one);
  EXPECT_EQ(pb.phi2, FFMatrix(1, 1, kF2));
  EXPECT_THROW(pullback_basis(FFMatrix(2, 1, kF2), FFMatrix(3, 1, kF2)), ShapeError);
}

TEST(Pullback, RandomInstancesSatisfyUniversalDimension) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec f = trial % 2 == 0 ? kF2 : kF3;
    const std::size_t c = trial % 5, da = 1 + trial % 4, db = (trial / 3) % 5;
    const FFMatrix a = random_matrix(c, da, f, rng);
    const FFMatrix b = random_matrix(c, db, f, rng);
    const Pullback pb = pullback_basis(a, b);
    ASSERT_EQ(multiply(a, pb.phi1), multiply(b, pb.phi2));
    EXPECT_EQ(pb.phi1.cols(), da + db - oracle::naive_rank(hstack(a, b)));
    EXPECT_EQ(rank(vstack(pb.phi1, pb.phi2)), pb.phi1.cols());
  }
}

TEST(RandomInvertible, Shapes) {
  Rng rng(1);
  EXPECT_TRUE(random_invertible(0, kF2, rng).empty());
  EXPECT_EQ(random_invertible(1, kF2, rng), FFMatrix::identity(1, kF2));
  for (std::size_t d = 1; d < 12; ++d) {
    const FFMatrix b = random_invertible(d, d % 2 == 0 ? kF2 : kF3, rng);
    EXPECT_EQ(oracle::naive_rank(b), d);
    EXPECT_EQ(multiply(b, inverse(b)), FFMatrix::identity(d, b.field()));
  }
}

TEST(RandomInvertible, DeterministicForSeed) {
  Rng a(42), b(42);
  EXPECT_EQ(random_invertible(6, kF3, a), random_invertible(6, kF3, b));
}

TEST(Inverse, SingularThrows) {
  EXPECT_THROW(inverse(FFMatrix::from_rows(kF2, {{1, 1}, {1, 1}})), PreconditionError);
}

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(FieldSpec(4), std::invalid_argument);
  EXPECT_THROW(FieldSpec(1), std::invalid_argument);
  EXPECT_THROW(FieldSpec(65537), std::invalid_argument);
  EXPECT_EQ(FieldSpec(65521).p(), 65521u);
  const FieldSpec f(7);
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(Matrix, RejectsOutOfRangeEntries) {
  EXPECT_THROW(FFMatrix(1, 2, kF2, {0, 2}), std::invalid_argument);
  EXPECT_THROW(FFMatrix(1, 2, kF2, {0}), ShapeError);
}

}  // namespace
