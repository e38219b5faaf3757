#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"
#include "weyl/groupoid.hpp"

namespace weyl {

inline constexpr int kDefaultRootDepth = 64;

using Root = std::vector<i64>;

/// Real roots R^a for every object a of a Cartan graph.
struct RootSystem {
  int rank = 0;
  std::vector<std::set<Root>> roots;

  static bool is_positive(const Root& r) {
    bool nonzero = false;
    for (i64 x : r) {
      if (x < 0) return false;
      nonzero = nonzero || x != 0;
    }
    return nonzero;
  }

  std::vector<Root> positive(std::size_t a) const {
    std::vector<Root> out;
    for (const auto& r : roots.at(a))
      if (is_positive(r)) out.push_back(r);
    return out;
  }
};

/// sigma_i^a(x) = x - (sum_j c^a_{ij} x_j) alpha_i.
inline Root apply_simple_reflection(const GeneralizedCartanMatrix& c, int i, const Root& x) {
  i64 pairing = 0;
  for (int j = 0; j < c.size(); ++j) pairing = arith::add(pairing, arith::mul(c(i, j), x[static_cast<std::size_t>(j)]));
  Root y = x;
  y[static_cast<std::size_t>(i)] = arith::sub(y[static_cast<std::size_t>(i)], pairing);
  return y;
}

/// Closure of the simple roots under sigma_i^a : R^a -> R^{rho_i(a)}, one round of
/// reflections per composition length. Throws DepthExceeded if the sets are
/// still growing after depth_max rounds.
inline RootSystem real_roots(const CartanGraph& g, int depth_max = kDefaultRootDepth) {
  RootSystem rs;
  rs.rank = g.rank;
  rs.roots.resize(g.size());
  for (auto& r : rs.roots) {
    for (int j = 0; j < g.rank; ++j) {
      Root a(static_cast<std::size_t>(g.rank), 0);
      a[static_cast<std::size_t>(j)] = 1;
      r.insert(a);
      a[static_cast<std::size_t>(j)] = -1;
      r.insert(a);
    }
  }
  for (int round = 0; round <= depth_max; ++round) {
    bool changed = false;
    auto next = rs.roots;
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (int i = 0; i < g.rank; ++i) {
        auto& target = next[g.rho(a, i)];
        for (const auto& x : rs.roots[a]) {
          Root y;
          try {
            y = apply_simple_reflection(g.objects[a].cartan, i, x);
          } catch (const Overflow&) {
            throw DepthExceeded("real root coordinates overflow after " + std::to_string(round) + " compositions");
          }
          changed = target.insert(std::move(y)).second || changed;
        }
      }
    }
    rs.roots = std::move(next);
    if (!changed) return rs;
  }
  throw DepthExceeded("real root closure did not stabilize within " + std::to_string(depth_max) + " compositions");
}

struct RootAxiomCheck {
  std::string axiom;
  std::size_t object = 0;
  int i = -1;
  int j = -1;
  bool ok = true;
  std::string detail;
};

struct RootAxiomReport {
  std::vector<RootAxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// m^a_{ij} = |R^a cap (N_0 alpha_i + N_0 alpha_j)|.
inline std::size_t root_count_in_plane(const RootSystem& rs, std::size_t a, int i, int j) {
  std::size_t n = 0;
  for (const auto& r : rs.roots.at(a)) {
    bool inside = true;
    for (int t = 0; t < rs.rank && inside; ++t) {
      const i64 x = r[static_cast<std::size_t>(t)];
      inside = (t == i || t == j) ? x >= 0 : x == 0;
    }
    n += inside ? 1 : 0;
  }
  return n;
}

/// Checks (R1)-(R4) for the given root sets.
inline RootAxiomReport validate_root_axioms(const CartanGraph& g, const RootSystem& rs) {
  RootAxiomReport rep;
  if (rs.roots.size() != g.size()) throw InvalidArgument("root system does not match the Cartan graph");
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& R = rs.roots[a];
    bool r1 = true;
    for (const auto& r : R) {
      Root neg = r;
      for (auto& x : neg) x = -x;
      const bool pos = RootSystem::is_positive(r);
      const bool negative = RootSystem::is_positive(neg);
      if (!(pos || negative) || R.count(neg) == 0) r1 = false;
    }
    rep.checks.push_back({"R1", a, -1, -1, r1, r1 ? "" : "a root is neither positive nor negative, or R != -R"});

    for (int i = 0; i < g.rank; ++i) {
      std::size_t on_axis = 0;
      bool r2 = true;
      for (const auto& r : R) {
        bool axis = true;
        for (int t = 0; t < g.rank; ++t)
          if (t != i && r[static_cast<std::size_t>(t)] != 0) axis = false;
        if (!axis) continue;
        ++on_axis;
        const i64 x = r[static_cast<std::size_t>(i)];
        if (x != 1 && x != -1) r2 = false;
      }
      r2 = r2 && on_axis == 2;
      rep.checks.push_back({"R2", a, i, -1, r2, r2 ? "" : "R^a cap Z alpha_i != {alpha_i, -alpha_i}"});

      std::set<Root> image;
      for (const auto& r : R) image.insert(apply_simple_reflection(g.objects[a].cartan, i, r));
      const bool r3 = image == rs.roots[g.rho(a, i)];
      rep.checks.push_back({"R3", a, i, -1, r3, r3 ? "" : "sigma_i^a(R^a) != R^{rho_i(a)}"});

      for (int j = 0; j < g.rank; ++j) {
        if (i == j) continue;
        const std::size_t m = root_count_in_plane(rs, a, i, j);
        std::size_t b = a;
        for (std::size_t t = 0; t < m; ++t) b = g.rho(g.rho(b, j), i);
        const bool r4 = b == a;
        rep.checks.push_back({"R4", a, i, j, r4,
                              r4 ? "m=" + std::to_string(m) : "(rho_i rho_j)^m(a) != a for m=" + std::to_string(m)});
      }
    }
  }
  return rep;
}

}  // namespace weyl
