#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace toric_split;

namespace {

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_facets(
      3, {VertexSubset::of({0, 1}), VertexSubset::of({1, 2}), VertexSubset::of({0, 2})});
}

LambdaMap rp2_lambda() { return LambdaMap::from_matrix({{1, 0, 1}, {0, 1, 1}}); }

BettiNumbers oracle_rhs(const SimplicialComplex& k, const LambdaMap& l, const Field& f) {
  BettiNumbers b{1};
  for (auto index_set : oracle::row_space(l)) {
    if (index_set.empty()) continue;
    for (const auto& [q, v] : oracle::reduced_betti(k.full_subcomplex(index_set), f).table()) b.add(q + 1, v);
  }
  return b;
}

}  // namespace

TEST(Verdict, StringsRoundTrip) {
  for (auto v : {Verdict::Pass, Verdict::ExpectedFail, Verdict::Fail}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_EQ(to_string(Verdict::ExpectedFail), "EXPECTED-FAIL");
  EXPECT_THROW(verdict_from_string("MAYBE"), InputError);
}

TEST(RhsBetti, RP2IsAPointOverEveryField) {
  for (std::uint32_t p : {0u, 2u, 3u, 5u}) {
    EXPECT_EQ(rhs_betti(triangle_boundary(), rp2_lambda(), Field::from_characteristic(p)), BettiNumbers{1});
  }
}

TEST(RhsBetti, IdentityLambdaSumsOverAllSubsets) {
  EXPECT_EQ(rhs_betti(triangle_boundary(), LambdaMap::identity(3), Field::rationals()), (BettiNumbers{1, 0, 1}));
}

TEST(RhsBetti, GhostOnlyIndexSetContributesInDegreeZero) {
  // Vertex 2 is a ghost; I = {2} gives K_I = {∅} with b~_{-1} = 1.
  auto k = SimplicialComplex::from_facets(2, {VertexSubset::of({0})});
  EXPECT_EQ(rhs_betti(k, LambdaMap::identity(2), Field::rationals()), BettiNumbers{2});
  EXPECT_EQ(quotient_betti(k, LambdaMap::identity(2), Field::rationals()), BettiNumbers{2});
}

TEST(RhsBettiProperty, MatchesOracleAndDependsOnlyOnRowSpace) {
  testgen::Rng rng(testgen::default_seed());
  for (int trial = 0; trial < 150; ++trial) {
    const int m = rng.uniform(1, 6);
    const auto k = testgen::random_complex(rng, m);
    const auto l = testgen::random_lambda(rng, rng.uniform(1, m), m);
    const Field f = Field::from_characteristic(std::vector<std::uint32_t>{0, 2, 3}[rng.uniform(0, 2)]);
    const auto rhs = rhs_betti(k, l, f);
    ASSERT_EQ(rhs, oracle_rhs(k, l, f));

    // Elementary row operations leave Row(lambda) and hence the table fixed.
    auto rows = l.rows();
    for (int op = 0; op < 5; ++op) {
      const int i = rng.uniform(0, l.target_rank() - 1), j = rng.uniform(0, l.target_rank() - 1);
      if (i != j && rng.coin()) {
        rows[i] = rows[i] ^ rows[j];
      } else {
        std::swap(rows[i], rows[j]);
      }
    }
    rows.push_back(rows.front() ^ rows.back());  // a redundant extra row
    const LambdaMap changed(static_cast<int>(rows.size()), m, rows);
    ASSERT_EQ(rhs_betti(k, changed, f), rhs);
    ASSERT_EQ(quotient_betti(k, changed, f), quotient_betti(k, l, f));
  }
}

TEST(VerifyMain, RP2Regression) {
  for (std::uint32_t p : {0u, 3u, 5u}) {
    const auto r = verify_main(triangle_boundary(), rp2_lambda(), p);
    EXPECT_EQ(r.verdict, Verdict::Pass) << p;
    EXPECT_EQ(r.quotient, BettiNumbers{1});
    ASSERT_TRUE(r.invariant.has_value());
    EXPECT_EQ(*r.invariant, BettiNumbers{1});
    EXPECT_EQ(r.kernel_order, 2u);
    EXPECT_EQ(r.row_space_size, 4u);
    EXPECT_TRUE(r.characteristic);
    EXPECT_EQ(r.cells, 98u);
    EXPECT_EQ(r.orbit_cells, 49u);
  }
  const auto r2 = verify_main(triangle_boundary(), rp2_lambda(), 2);
  EXPECT_EQ(r2.verdict, Verdict::ExpectedFail);
  EXPECT_EQ(r2.quotient, (BettiNumbers{1, 1, 1}));
  EXPECT_EQ(r2.rhs, BettiNumbers{1});
  EXPECT_FALSE(r2.invariant.has_value());
}

TEST(VerifyMain, RejectsMismatchedInputs) {
  EXPECT_THROW(verify_main(triangle_boundary(), LambdaMap::identity(4), 3), InputError);
  EXPECT_THROW(verify_main(triangle_boundary(), rp2_lambda(), 4), InputError);
}

TEST(VerifyMain, ThreePipelinesAgreeOnAllSmallInstances) {
  for (int m = 1; m <= 3; ++m) {
    const auto complexes = testgen::all_complexes(m);
    for (const auto& l : testgen::lambdas_by_row_space(m)) {
      for (const auto& k : complexes) {
        for (std::uint32_t p : {0u, 3u}) {
          const auto r = verify_main(k, l, p);
          ASSERT_EQ(r.verdict, Verdict::Pass);
        }
      }
    }
  }
}

TEST(Bbcg, HoldsOverEveryField) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& k : testgen::all_complexes(m)) {
      for (std::uint32_t p : {0u, 2u, 3u}) {
        const auto r = bbcg_check(k, Field::from_characteristic(p));
        ASSERT_EQ(r.verdict, Verdict::Pass);
        ASSERT_EQ(r.rhs, rhs_betti(k, LambdaMap::identity(m), Field::from_characteristic(p)));
      }
    }
  }
}
