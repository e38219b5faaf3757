#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "weyl/identities.hpp"
#include "weyl/laurent.hpp"

using namespace weyl;
using weyl::testing::Rng;
using weyl::testing::uniform;

namespace {

LaurentPoly random_poly(Rng& rng, std::size_t nvars) {
  LaurentPoly p(nvars);
  const int terms = static_cast<int>(uniform(rng, 0, 5));
  for (int t = 0; t < terms; ++t) {
    LaurentPoly::Exponent e(nvars);
    for (auto& x : e) x = uniform(rng, -3, 3);
    p.add_term(e, uniform(rng, -4, 4));
  }
  return p;
}

std::string failures(const IdentityReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.holds) s += c.name + " at m=" + std::to_string(c.m) + ": " + c.counterexample + "\n";
  return s;
}

}  // namespace

TEST(LaurentPoly, MonomialFromGamma) {
  EXPECT_EQ(poly_from_gamma(GammaVector(3)), LaurentPoly::constant(4, 1));
  EXPECT_EQ(poly_from_gamma(rosso_vectors(2, 1).v), LaurentPoly::monomial({4, 0, 0}));
  EXPECT_EQ(poly_from_gamma(rosso_vectors(4, 1).s).to_string(), "s0^8*s1^3*s2^2");
}

TEST(LaurentPoly, DegreeFourQuotientVectors) {
  EXPECT_EQ(rosso_vectors(4, 1).s, GammaVector({8, 3, 2, 0, 0}));
  EXPECT_EQ(rosso_vectors(4, 3).s, GammaVector({44, 9, 2, 0, 0}));
}

TEST(LaurentPoly, ZeroCoefficientsAreDropped) {
  LaurentPoly p = LaurentPoly::monomial({1, 2}, 3);
  p.add_term({1, 2}, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
  EXPECT_THROW(p.add_term({1}, 1), InvalidArgument);
}

TEST(LaurentPoly, RingAxioms) {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * LaurentPoly::constant(3, 1), a);
  }
}

TEST(LaurentPoly, GeometricSumTelescopes) {
  const auto x = LaurentPoly::monomial({1, -2});
  const auto one = LaurentPoly::constant(2, 1);
  for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ((one - x) * geometric_sum(x, n), one - x.pow(n + 1));
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic::polynomial(1), (std::vector<i64>{-1, 1}));
  EXPECT_EQ(cyclotomic::polynomial(4), (std::vector<i64>{1, 0, 1}));
  EXPECT_EQ(cyclotomic::polynomial(6), (std::vector<i64>{1, -1, 1}));
  EXPECT_EQ(cyclotomic::polynomial(11).size(), 11u);
  EXPECT_EQ(cyclotomic::polynomial(22).size(), 11u);
}

TEST(Cyclotomic, SumOfAllRootsVanishes) {
  for (i64 M = 2; M <= 24; ++M) {
    LaurentPoly p(1);
    for (i64 e = 0; e < M; ++e) p.add_term({e}, 1);
    EXPECT_TRUE(vanishes_at_root_of_unity(p, {1}, M)) << M;
    EXPECT_FALSE(vanishes_at_root_of_unity(LaurentPoly::monomial({0}), {1}, M));
  }
}

class Recursion : public ::testing::TestWithParam<int> {};

TEST_P(Recursion, HoldsUpToEight) {
  const auto report = verify_recursion(GetParam(), 8);
  EXPECT_TRUE(report.all_hold()) << failures(report);
  EXPECT_GE(report.checks.size(), 9u);
}

TEST_P(Recursion, PerturbedRecursionFails) {
  EXPECT_FALSE(verify_recursion(GetParam(), 3, RecursionOptions{1}).all_hold());
}

TEST_P(Recursion, DivisibilityHolds) {
  const auto report = verify_divisibility(GetParam(), 8);
  EXPECT_TRUE(report.all_hold()) << failures(report);
}

INSTANTIATE_TEST_SUITE_P(Degrees, Recursion, ::testing::Values(2, 3, 4, 5, 6));

TEST(Recursion, DegreeTwoIncludesClassicalForms) {
  const auto report = verify_recursion(2, 8);
  int classical = 0;
  for (const auto& c : report.checks)
    if (c.name.find("classical") != std::string::npos) {
      ++classical;
      EXPECT_TRUE(c.holds) << c.name << " m=" << c.m;
    }
  EXPECT_EQ(classical, 27);
}

TEST(Divisibility, DegreeTwoQuotientIsQ0) {
  for (i64 m = 0; m <= 8; ++m) EXPECT_EQ(rosso_vectors(2, m).s, GammaVector({2, 0, 0}));
}

TEST(Divisibility, DegreeFourThirdQuotient) {
  EXPECT_EQ(rosso_vectors(4, 3).s.doubled, (std::vector<i64>{44, 9, 2, 0, 0}));
  EXPECT_EQ(4 * rosso_vectors(4, 3).s, rosso_vectors(4, 3).v);
}

TEST(Divisibility, InitialQuotientEqualsR0) {
  for (int d = 2; d <= 8; ++d) {
    EXPECT_EQ(rosso_vectors(d, 0).s, r_vector(d, 0)) << d;
    const auto r0 = detail::rosso_polynomial(rosso_vectors(d, 0));
    EXPECT_EQ(r0, LaurentPoly::constant(static_cast<std::size_t>(d) + 1, 1) - poly_from_gamma(z_vector(d, 0)));
  }
}

TEST(Specialization, RossoPolynomialVanishesExactlyWhenConditionHolds) {
  Rng rng(32);
  for (int rep = 0; rep < 120; ++rep) {
    const int d = static_cast<int>(uniform(rng, 2, 5));
    const i64 M = uniform(rng, 2, 30);
    std::vector<i64> profile(static_cast<std::size_t>(d) + 1);
    for (auto& e : profile) e = uniform(rng, 0, M - 1);
    for (i64 m = 0; m <= 6; ++m) {
      const auto poly = detail::rosso_polynomial(rosso_vectors(d, m));
      EXPECT_EQ(vanishes_at_root_of_unity(poly, profile, M), rosso_residues(profile, m, M).vanishes())
          << "d=" << d << " M=" << M << " m=" << m;
    }
  }
}

TEST(Specialization, Zeta11ExampleFirstZeroAtThree) {
  const std::vector<i64> profile{1, 1, 1, 1, 1};
  for (i64 m = 0; m <= 3; ++m)
    EXPECT_EQ(vanishes_at_root_of_unity(detail::rosso_polynomial(rosso_vectors(4, m)), profile, 22), m == 3);
}
