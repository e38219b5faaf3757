#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "weyl/rosso.hpp"

using namespace weyl;
using weyl::testing::Rng;
using weyl::testing::uniform;

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

i64 binom(int n, int k) {
  i64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(EfCoeffs, SmallValues) {
  EXPECT_EQ(ef_coeffs(0, 4).first, 1);
  EXPECT_EQ(ef_coeffs(0, 3).first, 0);
  EXPECT_THROW(ef_coeffs(-1, 2), InvalidArgument);
}

TEST(EfCoeffs, SumIsDifferenceOfPowers) {
  for (i64 m = 0; m <= 9; ++m)
    for (int k = 0; k <= 9; ++k) {
      const auto [e, f] = ef_coeffs(m, k);
      EXPECT_EQ(e + f, ipow(m + 1, k) - ipow(m, k)) << m << "," << k;
    }
}

TEST(EfCoeffs, DegreeTwoF) {
  for (i64 m = 0; m <= 20; ++m) EXPECT_EQ(ef_coeffs(m, 2).second, 2 * m);
}

TEST(EfCoeffs, ExplicitBinomialSums) {
  for (i64 m = 0; m <= 6; ++m)
    for (int k = 0; k <= 8; ++k) {
      i64 e = 0, f = 0;
      for (int nu = 0; nu < k; ++nu) {
        const i64 term = binom(k, nu) * ipow(m, nu);
        if ((k - nu) % 2 == 0 && nu <= k - 2) e += term;
        if ((k - nu) % 2 == 1) f += term;
      }
      EXPECT_EQ(ef_coeffs(m, k), std::make_pair(e, f));
    }
}

TEST(RossoVectors, SumAndQuotientInvariants) {
  for (int d = 2; d <= 8; ++d)
    for (i64 m = 0; m <= 10; ++m) {
      const auto rv = rosso_vectors(d, m);
      EXPECT_EQ(rv.v + rv.w, rv.u);
      EXPECT_EQ((m + 1) * rv.s, rv.v);
    }
}

TEST(RossoVectors, UMatchesTensorPowerExpansion) {
  for (int d = 2; d <= 7; ++d)
    for (i64 m = 0; m <= 6; ++m) {
      GammaVector u(d);
      for (int k = 0; k <= d; ++k) u.doubled[static_cast<std::size_t>(k)] = 2 * (ipow(m + 1, d - k) - ipow(m, d - k));
      EXPECT_EQ(rosso_vectors(d, m).u, u);
    }
}

TEST(RossoVectors, DegreeFourFormula) {
  for (i64 m = 0; m <= 10; ++m) {
    const GammaVector expect({2 * (2 * m * m * m + 3 * m * m + 2 * m + 1), 3 * m * m + 3 * m, 2 * (m + 1), 0, 0});
    EXPECT_EQ(rosso_vectors(4, m).v, expect);
  }
}

TEST(RossoVectors, DegreeThreeAndTwo) {
  for (i64 m = 0; m <= 10; ++m) {
    EXPECT_EQ(rosso_vectors(3, m).v, GammaVector({3 * m * (m + 1), 2 * (m + 1), 0, 0}));
    EXPECT_EQ(rosso_vectors(2, m).v, GammaVector({2 * (m + 1), 0, 0}));
  }
}

TEST(RossoVectors, OverflowIsReported) { EXPECT_THROW(rosso_vectors(20, 1000000), Overflow); }

TEST(RossoVectors, RejectsBadInput) {
  EXPECT_THROW(rosso_vectors(1, 0), InvalidArgument);
  EXPECT_THROW(rosso_vectors(4, -1), InvalidArgument);
}

TEST(RossoResidues, AgreeWithExactVectors) {
  Rng rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const int d = static_cast<int>(uniform(rng, 2, 6));
    const i64 M = uniform(rng, 2, 40);
    const auto t = weyl::testing::random_tensor(rng, 2, d, M);
    const auto profile = gamma_profile(t, 0, 1);
    for (i64 m = 0; m <= 8; ++m) {
      const auto rv = rosso_vectors(d, m);
      const auto r = rosso_residues(profile, m, M);
      EXPECT_EQ(r.chi_v, chi_eval(t, 0, 1, rv.v));
      EXPECT_EQ(r.chi_w, chi_eval(t, 0, 1, rv.w));
      EXPECT_EQ(r.chi_s, chi_eval(t, 0, 1, rv.s));
    }
  }
}

TEST(RossoCondition, Zeta11SmallestIsThree) {
  const auto t = weyl::testing::zeta11();
  EXPECT_FALSE(rosso_condition(t, 0, 1, 0));
  EXPECT_FALSE(rosso_condition(t, 0, 1, 1));
  EXPECT_FALSE(rosso_condition(t, 0, 1, 2));
  EXPECT_TRUE(rosso_condition(t, 0, 1, 3));
  EXPECT_EQ(cartan_entry(t, 0, 1), -3);
  EXPECT_EQ(cartan_entry(t, 1, 0), -3);
}

TEST(RossoCondition, Zeta11DiagnosticsTable) {
  const auto rows = rosso_diagnostics(weyl::testing::zeta11(), 0, 1, 0, 3);
  const std::vector<i64> v{4, 4, 2, 0}, w{4, 4, 2, 0}, s{4, 13, 8, 11};
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t m = 0; m < 4; ++m) {
    EXPECT_EQ(rows[m].chi_v, v[m]);
    EXPECT_EQ(rows[m].chi_w, w[m]);
    EXPECT_EQ(rows[m].chi_s, s[m]);
  }
}

TEST(RossoCondition, ReflectedProfileTable) {
  const auto t = weyl::testing::profile_tensor(22, {1, 9, 20, 12, 11});
  const auto rows = rosso_diagnostics(t, 1, 0, 0, 1);
  EXPECT_EQ(rows[0].chi_v, 18);
  EXPECT_EQ(rows[1].chi_v, 20);
  EXPECT_EQ(rows[0].chi_w, 20);
  EXPECT_EQ(rows[1].chi_w, 0);
  EXPECT_EQ(rows[0].chi_s, 18);
  EXPECT_EQ(rows[1].chi_s, 10);
  EXPECT_FALSE(rosso_condition(t, 1, 0, 0));
  EXPECT_TRUE(rosso_condition(t, 1, 0, 1));
}

TEST(RossoCondition, ZeroTensorDiagnostics) {
  for (const auto& r : rosso_diagnostics(SqrtBraidingTensor(2, 4, RootDatum(9)), 0, 1, 0, 5)) {
    EXPECT_EQ(r.chi_v, 0);
    EXPECT_EQ(r.chi_w, 0);
    EXPECT_EQ(r.chi_s, 0);
  }
}

TEST(RossoCondition, DegreeTwoTrivialMixedVanishesAtZero) {
  const auto t = weyl::testing::profile_tensor(10, {3, 0, 7});
  EXPECT_TRUE(rosso_condition(t, 0, 1, 0));
  EXPECT_EQ(cartan_entry(t, 0, 1), 0);
}

TEST(RossoCondition, DegreeTwoMatchesClassicalCondition) {
  Rng rng(22);
  for (int rep = 0; rep < 300; ++rep) {
    const i64 M = uniform(rng, 1, 30);
    const auto t = weyl::testing::random_tensor(rng, 2, 2, M);
    const i64 qii = 2 * gamma_aggregate(t, 0, 1, 0);
    const i64 mixed = 2 * gamma_aggregate(t, 0, 1, 1);
    for (i64 m = 0; m <= 12; ++m) {
      const bool classical =
          (arith::mod((m + 1) * qii, M) == 0 && arith::mod(qii, M) != 0) || arith::mod(m * qii + mixed, M) == 0;
      EXPECT_EQ(rosso_condition(t, 0, 1, m), classical) << "M=" << M << " m=" << m;
    }
  }
}

TEST(RossoCondition, ZeroEntryIsSymmetricForEvenDegree) {
  Rng rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    const int d = 2 * static_cast<int>(uniform(rng, 1, 3));
    const auto t = weyl::testing::random_tensor(rng, 3, d, uniform(rng, 2, 16));
    for (int l = 0; l < 3; ++l)
      for (int j = 0; j < 3; ++j)
        if (l != j) EXPECT_EQ(rosso_condition(t, l, j, 0), rosso_condition(t, j, l, 0));
  }
}

TEST(RossoCondition, RankTwoEntryDependsOnlyOnAggregates) {
  Rng rng(24);
  for (int rep = 0; rep < 50; ++rep) {
    const auto a = weyl::testing::random_tensor(rng, 2, 4, 18);
    const auto b = SqrtBraidingTensor::from_rank2_profile(a.datum(), gamma_profile(a, 0, 1));
    for (i64 m = 0; m <= 20; ++m) EXPECT_EQ(rosso_condition(a, 0, 1, m), rosso_condition(b, 0, 1, m));
  }
}

TEST(CartanEntry, UndefinedWithinBound) {
  const auto t = weyl::testing::profile_tensor(4, {0, 1, 0});
  try {
    cartan_entry(t, 0, 1, 50);
    FAIL() << "expected UndefinedCartanEntry";
  } catch (const UndefinedCartanEntry& e) {
    EXPECT_EQ(e.ell(), 0);
    EXPECT_EQ(e.j(), 1);
  }
  EXPECT_THROW(cartan_matrix(t, 50), UndefinedCartanEntry);
}

TEST(CartanMatrix, Zeta3RankThree) {
  const auto c = cartan_matrix(weyl::testing::zeta3_rank3());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(c(i, j), i == j ? 2 : -1);
}

TEST(CartanMatrix, Zeta11) {
  EXPECT_EQ(cartan_matrix(weyl::testing::zeta11()), GeneralizedCartanMatrix(2, {2, -3, -3, 2}));
}

TEST(CartanMatrix, DiagonalBraidingHasZeroOffDiagonal) {
  SqrtBraidingTensor t(3, 2, RootDatum(10));
  for (int i = 0; i < 3; ++i) {
    const int idx[2] = {i, i};
    t.set(idx, i + 1);
  }
  EXPECT_EQ(cartan_matrix(t), GeneralizedCartanMatrix(3));
}

TEST(CartanMatrix, OddDegreeRejected) {
  EXPECT_THROW(cartan_matrix(weyl::testing::profile_tensor(6, {1, 2, 3, 4})), OddDegree);
  EXPECT_NO_THROW(cartan_entry(weyl::testing::profile_tensor(6, {1, 2, 3, 4}), 0, 1));
}

TEST(CartanMatrix, RandomEvenDegreeSatisfiesM1M2) {
  Rng rng(25);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto t = weyl::testing::random_tensor(rng, 3, 2 * static_cast<int>(uniform(rng, 1, 2)), uniform(rng, 2, 12));
    try {
      const auto c = cartan_matrix(t, 60);
      EXPECT_TRUE(c.satisfies_m1());
      EXPECT_TRUE(c.satisfies_m2());
      ++checked;
    } catch (const UndefinedCartanEntry&) {
    }
  }
  EXPECT_GT(checked, 20);
}
