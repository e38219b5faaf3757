#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "support.hpp"
#include "weyl/groupoid.hpp"

using namespace weyl;
using weyl::testing::Rng;
using weyl::testing::uniform;

namespace {

i64 binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  i64 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Reflected rank-2 aggregates for sigma_1 with c_12 = -c: new_k = sum_j (-1)^{d-k} c^{k-j} C(d-j, k-j) old_j.
std::vector<i64> reflected_profile_oracle(const std::vector<i64>& old, i64 c, i64 M) {
  const int d = static_cast<int>(old.size()) - 1;
  std::vector<i64> out;
  for (int k = 0; k <= d; ++k) {
    i64 acc = 0;
    for (int j = 0; j <= k; ++j) {
      i64 a = binom(d - j, k - j);
      for (int t = 0; t < k - j; ++t) a *= c;
      if ((d - k) % 2) a = -a;
      acc = arith::mod(acc + arith::mulmod(a, old[static_cast<std::size_t>(j)], M), M);
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<i64> negated(std::vector<i64> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

TEST(Reflect, PureEllEntryUnchangedForEvenDegree) {
  Rng rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const int d = 2 * static_cast<int>(uniform(rng, 1, 2));
    const auto t = weyl::testing::random_tensor(rng, 3, d, 15);
    const std::vector<i64> row{-1, 2, -2};
    const auto r = reflect(t, 1, row);
    const std::vector<int> idx(static_cast<std::size_t>(d), 1);
    EXPECT_EQ(r.at(idx), t.at(idx));
  }
}

TEST(Reflect, Zeta11AggregatesMatchExpansionOracle) {
  const auto t = weyl::testing::zeta11();
  const std::vector<i64> row{2, -3};
  const auto r = reflect(t, 0, row);
  EXPECT_EQ(gamma_profile(r, 0, 1), (std::vector<i64>{1, 9, 20, 12, 11}));
  EXPECT_EQ(gamma_profile(r, 0, 1), reflected_profile_oracle({1, 1, 1, 1, 1}, 3, 22));
}

TEST(Reflect, Zeta11DiffersFromPrintedTupleByUniformFactor) {
  const auto r = reflect(weyl::testing::zeta11(), 0, std::vector<i64>{2, -3});
  const std::vector<i64> printed{2, 10, 21, 13, 12};
  const auto got = gamma_profile(r, 0, 1);
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(arith::mod(printed[k] - got[k], 22), 1);
}

TEST(Reflect, RandomProfilesMatchOracle) {
  Rng rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    const int d = 2 * static_cast<int>(uniform(rng, 1, 3));
    const i64 M = uniform(rng, 2, 40);
    const i64 c = uniform(rng, 0, 5);
    std::vector<i64> profile(static_cast<std::size_t>(d) + 1);
    for (auto& e : profile) e = uniform(rng, 0, M - 1);
    const auto t = weyl::testing::profile_tensor(M, profile);
    const auto r = reflect(t, 0, std::vector<i64>{2, -c});
    EXPECT_EQ(gamma_profile(r, 0, 1), reflected_profile_oracle(profile, c, M));
  }
}

TEST(Reflect, ZeroRowNegatesOddOrbits) {
  Rng rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const auto t = weyl::testing::random_tensor(rng, 2, 4, 17);
    const auto before = gamma_profile(t, 0, 1);
    const auto after = gamma_profile(reflect(t, 0, std::vector<i64>{2, 0}), 0, 1);
    for (int k = 0; k <= 4; ++k)
      EXPECT_EQ(after[static_cast<std::size_t>(k)], arith::mod((4 - k) % 2 ? -before[static_cast<std::size_t>(k)] : before[static_cast<std::size_t>(k)], 17));
  }
}

TEST(Reflect, AggregatesDependOnlyOnAggregates) {
  Rng rng(44);
  for (int rep = 0; rep < 30; ++rep) {
    const auto a = weyl::testing::random_tensor(rng, 2, 4, 26);
    const auto b = SqrtBraidingTensor::from_rank2_profile(a.datum(), gamma_profile(a, 0, 1));
    const std::vector<i64> row{2, -uniform(rng, 0, 4)};
    EXPECT_EQ(gamma_profile(reflect(a, 0, row), 0, 1), gamma_profile(reflect(b, 0, row), 0, 1));
  }
}

TEST(Reflect, InvalidRowsRejected) {
  const auto t = weyl::testing::zeta11();
  EXPECT_THROW(reflect(t, 0, std::vector<i64>{1, -3}), InvalidArgument);
  EXPECT_THROW(reflect(t, 0, std::vector<i64>{2, 3}), InvalidArgument);
  EXPECT_THROW(reflect(t, 0, std::vector<i64>{2}), InvalidArgument);
  EXPECT_THROW(reflect(t, 2, std::vector<i64>{2, -1}), InvalidArgument);
}

TEST(Reflect, InvolutionOnTensors) {
  Rng rng(45);
  for (int rep = 0; rep < 30; ++rep) {
    const auto t = weyl::testing::random_tensor(rng, 3, 2, 19);
    const std::vector<i64> row{2, -uniform(rng, 0, 3), -uniform(rng, 0, 3)};
    EXPECT_EQ(reflect(reflect(t, 0, row), 0, row), t);
  }
}

TEST(CartanGraph, Zeta11IsFiniteAndValid) {
  const auto g = generate_cartan_graph(weyl::testing::zeta11());
  EXPECT_EQ(g.rank, 2);
  EXPECT_GT(g.size(), 1u);
  EXPECT_TRUE(validate_axioms(g).all_pass());
  EXPECT_EQ(g.objects[0].cartan, GeneralizedCartanMatrix(2, {2, -3, -3, 2}));
  EXPECT_EQ(g.objects[g.rho(0, 0)].tensor, reflect(weyl::testing::zeta11(), 0, std::vector<i64>{2, -3}));
}

TEST(CartanGraph, ObjectsAreDistinctAndReflectionsInvolutive) {
  for (const auto& t0 : {weyl::testing::zeta11(), weyl::testing::zeta7(), weyl::testing::zeta3_rank3()}) {
    const auto g = generate_cartan_graph(t0);
    std::set<std::vector<i64>> keys;
    for (const auto& o : g.objects) keys.insert(o.key());
    EXPECT_EQ(keys.size(), g.size());
    for (std::size_t a = 0; a < g.size(); ++a)
      for (int i = 0; i < g.rank; ++i) {
        const auto row = g.objects[a].cartan.row(i);
        const auto image = reflect(g.objects[a].tensor, i, row);
        EXPECT_EQ(image, g.objects[g.rho(a, i)].tensor);
        EXPECT_EQ(reflect(image, i, g.objects[g.rho(a, i)].cartan.row(i)), g.objects[a].tensor);
        for (int j = 0; j < g.rank; ++j)
          if (j != i) EXPECT_EQ(cartan_entry(image, i, j), g.objects[a].cartan(i, j));
      }
  }
}

TEST(CartanGraph, EigenvectorIdentities) {
  for (const auto& t0 : {weyl::testing::zeta11(), weyl::testing::zeta7(), weyl::testing::zeta3_rank3()}) {
    const auto g = generate_cartan_graph(t0);
    for (const auto& o : g.objects) {
      const int n = g.rank, d = o.tensor.degree();
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) {
          if (l == j) continue;
          const auto rv = rosso_vectors(d, -o.cartan(l, j));
          const auto row = o.cartan.row(l);
          const auto v = gamma_to_full(n, rv.v, l, j);
          const auto w = gamma_to_full(n, rv.w, l, j);
          const auto s = gamma_to_full(n, rv.s, l, j);
          EXPECT_EQ(reflect_vector(n, d, v, l, row), v);
          EXPECT_EQ(reflect_vector(n, d, w, l, row), negated(w));
          EXPECT_EQ(reflect_vector(n, d, s, l, row), s);
        }
    }
  }
}

TEST(CartanGraph, EigenvectorIdentityFailsAtWrongM) {
  const auto rv = rosso_vectors(4, 2);
  const auto v = gamma_to_full(2, rv.v, 0, 1);
  EXPECT_NE(reflect_vector(2, 4, v, 0, std::vector<i64>{2, -3}), v);
}

TEST(CartanGraph, CorruptedEdgeFailsC1) {
  auto g = generate_cartan_graph(weyl::testing::zeta11());
  ASSERT_GT(g.size(), 2u);
  g.edges[0][0] = g.edges[0][0] == 1 ? 2 : 1;
  const auto rep = validate_axioms(g);
  EXPECT_FALSE(rep.all_pass());
  bool c1 = false;
  for (const auto& c : rep.checks) c1 = c1 || (c.axiom == "C1" && !c.ok);
  EXPECT_TRUE(c1);
}

TEST(CartanGraph, CorruptedCartanFailsC2) {
  auto g = generate_cartan_graph(weyl::testing::zeta11());
  g.objects[0].cartan(0, 1) = -7;
  const auto rep = validate_axioms(g);
  bool c2 = false;
  for (const auto& c : rep.checks) c2 = c2 || (c.axiom == "C2" && !c.ok);
  EXPECT_TRUE(c2);
}

TEST(CartanGraph, DiagonalBraidingGivesSingleObject) {
  SqrtBraidingTensor t(3, 2, RootDatum(8));
  for (int i = 0; i < 3; ++i) {
    const int idx[2] = {i, i};
    t.set(idx, 2 * i + 1);
  }
  const auto g = generate_cartan_graph(t);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.objects[0].cartan, GeneralizedCartanMatrix(3));
}

TEST(CartanGraph, ObjectLimit) {
  EXPECT_THROW(generate_cartan_graph(weyl::testing::zeta11(), kDefaultMMax, 2), ObjectLimitExceeded);
}

TEST(CartanGraph, OddDegreeRejected) {
  EXPECT_THROW(generate_cartan_graph(weyl::testing::profile_tensor(6, {1, 2, 3, 4})), OddDegree);
}

TEST(Dynkin, Zeta3Triangle) {
  const auto dd = dynkin_diagram(weyl::testing::zeta3_rank3());
  EXPECT_EQ(dd.vertex_labels, (std::vector<i64>{6, 6, 6}));
  ASSERT_EQ(dd.edges.size(), 3u);
  for (const auto& e : dd.edges) EXPECT_EQ(e.label, 4);
}

TEST(Dynkin, ReflectedZeta3LabelsStayInRootsOfUnity) {
  const auto g = generate_cartan_graph(weyl::testing::zeta3_rank3());
  EXPECT_GT(g.size(), 1u);
  bool inverse_seen = false;
  for (const auto& o : g.objects) {
    const auto dd = dynkin_diagram(o.tensor);
    for (i64 v : dd.vertex_labels) EXPECT_TRUE(v == 6 || v == 4 || v == 8 || v == 0) << v;
    for (const auto& e : dd.edges) {
      EXPECT_TRUE(e.label == 4 || e.label == 8) << e.label;
      inverse_seen = inverse_seen || e.label == 8;
    }
  }
  EXPECT_TRUE(inverse_seen);
}

TEST(Dynkin, DiagonalBraidingHasNoEdges) {
  SqrtBraidingTensor t(2, 2, RootDatum(6));
  EXPECT_TRUE(dynkin_diagram(t).edges.empty());
  EXPECT_THROW(dynkin_diagram(weyl::testing::zeta11()), InvalidArgument);
}
