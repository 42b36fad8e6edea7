#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace toric_split;

namespace {

SparseMatrix random_matrix(testgen::Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<MatrixEntry> e;
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      if (rng.coin(0.35)) {
        const auto num = static_cast<long>(rng.integer(-4, 4));
        const auto den = static_cast<unsigned long>(rng.uniform(1, 2));
        Rational v(num, den);
        v.canonicalize();
        e.push_back({i, j, v});
      }
    }
  }
  return SparseMatrix(rows, cols, std::move(e));
}

// Integer matrices keep every prime field in play (no denominators to invert).
SparseMatrix random_integer_matrix(testgen::Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<MatrixEntry> e;
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      if (rng.coin(0.4)) e.push_back({i, j, Rational(static_cast<long>(rng.integer(-6, 6)))});
    }
  }
  return SparseMatrix(rows, cols, std::move(e));
}

const std::vector<Field> kFields = {Field::rationals(), Field::prime(2), Field::prime(3),
                                    Field::prime(5), Field::prime(7)};

}  // namespace

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field::prime(4), InputError);
  EXPECT_THROW(Field::prime(1), InputError);
  EXPECT_THROW(Field::from_characteristic(9), InputError);
  EXPECT_THROW(Field::prime(4294967311ull), InputError);  // prime, but wider than 32 bits
  EXPECT_EQ(Field::prime(4294967291ull).characteristic(), 4294967291u);
  EXPECT_TRUE(Field::from_characteristic(0).is_rational());
  EXPECT_EQ(Field::prime(3).name(), "F3");
}

TEST(Field, InvertsOrdersPrimeToCharacteristic) {
  EXPECT_TRUE(Field::rationals().inverts(64));
  EXPECT_TRUE(Field::prime(3).inverts(64));
  EXPECT_FALSE(Field::prime(2).inverts(64));
  EXPECT_FALSE(Field::prime(3).inverts(6));
}

TEST(PrimeArithmetic, FieldAxiomsOnSmallPrimes) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
    PrimeArithmetic f(p);
    for (std::uint32_t a = 1; a < std::min(p, 50u); ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one()) << "p=" << p << " a=" << a;
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      EXPECT_EQ(f.sub(f.add(a, 3 % p), 3 % p), a);
    }
    EXPECT_THROW(f.inv(0), CoefficientDomainError);
  }
}

TEST(PrimeArithmetic, ReducesRationals) {
  PrimeArithmetic f5(5);
  EXPECT_EQ(f5.from_rational(Rational(1, 2)), 3u);
  EXPECT_EQ(f5.from_rational(Rational(-1)), 4u);
  EXPECT_EQ(f5.from_rational(Rational(-7, 3)), f5.div(f5.from_rational(-7), 3));
  EXPECT_THROW(f5.from_rational(Rational(1, 10)), CoefficientDomainError);
}

TEST(SparseMatrix, CanonicalizesEntries) {
  SparseMatrix a(2, 2, {{0, 1, 3}, {0, 1, -3}, {1, 0, 2}, {1, 0, Rational(1, 2)}});
  EXPECT_EQ(a.entries().size(), 1u);
  EXPECT_EQ(a.at(1, 0), Rational(5, 2));
  EXPECT_EQ(a.at(0, 1), 0);
  EXPECT_THROW(SparseMatrix(2, 2, {{2, 0, 1}}), InputError);
}

TEST(SparseMatrix, ProductAndTranspose) {
  auto a = SparseMatrix::from_dense({{1, 2, 0}, {0, 1, -1}});
  auto b = SparseMatrix::from_dense({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(a * b, SparseMatrix::from_dense({{1, 2}, {-1, 0}}));
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ((a * SparseMatrix::identity(3)), a);
}

TEST(Rank, DependsOnCharacteristic) {
  auto a = SparseMatrix::from_dense({{1, 1}, {1, -1}});
  EXPECT_EQ(rank(a, Field::rationals()), 2u);
  EXPECT_EQ(rank(a, Field::prime(2)), 1u);
  EXPECT_EQ(rank(a, Field::prime(3)), 2u);
  auto b = SparseMatrix::from_dense({{3, 6}, {1, 2}});
  EXPECT_EQ(rank(b, Field::rationals()), 1u);
  EXPECT_EQ(rank(SparseMatrix::from_dense({{3}}), Field::prime(3)), 0u);
  EXPECT_EQ(rank(SparseMatrix(0, 5), Field::rationals()), 0u);
}

TEST(Rank, RejectsDenominatorsDivisibleByP) {
  auto a = SparseMatrix::from_dense({{Rational(1, 3)}});
  EXPECT_EQ(rank(a, Field::rationals()), 1u);
  EXPECT_THROW(rank(a, Field::prime(3)), CoefficientDomainError);
}

TEST(RankProperty, MatchesDenseEliminationOnRandomMatrices) {
  testgen::Rng rng(testgen::default_seed());
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(0, 9));
    const auto cols = static_cast<std::size_t>(rng.uniform(0, 9));
    const auto a = random_integer_matrix(rng, rows, cols);
    for (const auto& f : kFields) {
      ASSERT_EQ(rank(a, f), oracle::dense_rank(a, f)) << f.name() << " trial " << trial;
    }
    const auto b = random_matrix(rng, rows, cols);
    ASSERT_EQ(rank(b, Field::rationals()), oracle::dense_rank(b, Field::rationals()));
  }
}

TEST(RankProperty, PrimeRankNeverExceedsRationalRank) {
  testgen::Rng rng(testgen::default_seed() + 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_integer_matrix(rng, rng.uniform(1, 8), rng.uniform(1, 8));
    const auto rq = rank(a, Field::rationals());
    for (std::uint32_t p : {2u, 3u, 5u}) EXPECT_LE(rank(a, Field::prime(p)), rq);
  }
}

TEST(RankProperty, TransposeInvariant) {
  testgen::Rng rng(testgen::default_seed() + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_integer_matrix(rng, rng.uniform(1, 10), rng.uniform(1, 10));
    for (const auto& f : kFields) EXPECT_EQ(rank(a, f), rank(a.transpose(), f));
  }
}

TEST(Nullspace, SpansKernel) {
  testgen::Rng rng(testgen::default_seed() + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(rng, rng.uniform(1, 6), rng.uniform(1, 7));
    const auto basis = nullspace(a);
    EXPECT_EQ(basis.size(), a.cols() - rank(a, Field::rationals()));
    for (const auto& v : basis) {
      std::vector<std::vector<Rational>> column;
      for (const auto& x : v) column.push_back({x});
      EXPECT_TRUE((a * SparseMatrix::from_dense(column)).is_zero());
    }
  }
}

TEST(BettiNumbers, StoresOnlyNonzeroDegrees) {
  BettiNumbers b{1, 0, 2};
  EXPECT_EQ(b[0], 1u);
  EXPECT_EQ(b[1], 0u);
  EXPECT_EQ(b[7], 0u);
  EXPECT_EQ(b.total(), 3u);
  EXPECT_EQ(b.euler_characteristic(), 3);
  EXPECT_EQ(b, BettiNumbers::from_vector({0, 1, 0, 2}, -1));
  EXPECT_EQ(b.to_string(), "(1,0,2)");
  b.set(2, 0);
  EXPECT_EQ(b, BettiNumbers{1});
}

TEST(ChainComplex, RejectsMismatchedShapes) {
  EXPECT_THROW(GradedChainComplex(0, {2, 1}, {{1, SparseMatrix(1, 1)}}), ComplexIntegrityError);
}

TEST(ChainComplex, DetectsNonzeroComposite) {
  // d_1 d_2 = [1] != 0.
  GradedChainComplex c(0, {1, 1, 1},
                       {{1, SparseMatrix::from_dense({{1}})}, {2, SparseMatrix::from_dense({{1}})}});
  EXPECT_FALSE(c.boundaries_compose_to_zero(Field::rationals()));
  EXPECT_THROW(betti_numbers(c, Field::rationals()), ComplexIntegrityError);
}

TEST(ChainComplex, CircleBettiAndEuler) {
  // Two vertices, two edges a->b, b->a.
  GradedChainComplex c(0, {2, 2}, {{1, SparseMatrix::from_dense({{-1, 1}, {1, -1}})}});
  for (const auto& f : kFields) {
    const auto b = betti_numbers(c, f);
    EXPECT_EQ(b, (BettiNumbers{1, 1}));
    EXPECT_EQ(b.euler_characteristic(), c.euler_characteristic());
  }
}

TEST(ChainComplex, TorsionSeenOnlyModTwo) {
  // Cellular chains of RP^2: 1 <-0- 1 <-2- 1.
  GradedChainComplex c(0, {1, 1, 1},
                       {{1, SparseMatrix::from_dense({{0}})}, {2, SparseMatrix::from_dense({{2}})}});
  EXPECT_EQ(betti_numbers(c, Field::rationals()), BettiNumbers{1});
  EXPECT_EQ(betti_numbers(c, Field::prime(3)), BettiNumbers{1});
  EXPECT_EQ(betti_numbers(c, Field::prime(2)), (BettiNumbers{1, 1, 1}));
}
