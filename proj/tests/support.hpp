#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/abelian_group.hpp"
#include "weyl/complex/cell.hpp"
#include "weyl/complex/symmetrized.hpp"
#include "weyl/tensor.hpp"

namespace weyl::testing {

using Rng = std::mt19937_64;

inline i64 uniform(Rng& rng, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }

inline GroupElement random_element(Rng& rng, const AbGroup& g) {
  std::vector<i64> c(g.dimension());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = i < g.free_rank() ? uniform(rng, -2, 2) : uniform(rng, 0, g.torsion()[i - g.free_rank()] - 1);
  return g.element(std::move(c));
}

/// Random generator of level exactly k where the degree allows it (n >= k + 2),
/// otherwise of the highest level that fits.
inline complex::Cell random_cell(Rng& rng, const AbGroup& g, int k, int n) {
  while (k >= 1 && n < k + 2) --k;
  if (k == 0) {
    std::vector<GroupElement> xs;
    for (int i = 0; i < n; ++i) xs.push_back(random_element(rng, g));
    return complex::Cell::bar(std::move(xs));
  }
  int pmax = 2;
  while ((pmax) * k + pmax + 1 <= n) ++pmax;
  const int p = static_cast<int>(uniform(rng, 2, pmax));
  const int total = n - (p - 1) * k;
  std::vector<int> sizes(static_cast<std::size_t>(p), 1);
  for (int extra = total - p; extra > 0; --extra) ++sizes[static_cast<std::size_t>(uniform(rng, 0, p - 1))];
  std::vector<complex::Cell> parts;
  for (int s : sizes) parts.push_back(random_cell(rng, g, static_cast<int>(uniform(rng, 0, k - 1)), s));
  return complex::Cell::join(k, std::move(parts));
}

inline SqrtBraidingTensor random_tensor(Rng& rng, int rank, int degree, i64 modulus) {
  SqrtBraidingTensor t(rank, degree, RootDatum(modulus));
  for (std::size_t off = 0; off < t.size(); ++off) t.set_flat(off, uniform(rng, 0, modulus - 1));
  return t;
}

inline SqrtBraidingTensor profile_tensor(i64 modulus, std::vector<i64> profile) {
  return SqrtBraidingTensor::from_rank2_profile(RootDatum(modulus), profile);
}

inline SqrtBraidingTensor zeta11() { return profile_tensor(22, {1, 1, 1, 1, 1}); }
inline SqrtBraidingTensor zeta7() { return profile_tensor(14, {4, 1, 4, 1, 1}); }

/// q_ii = -1 and q_ij q_ji = zeta for a primitive third root zeta, with mu of order 12.
inline SqrtBraidingTensor zeta3_rank3() {
  SqrtBraidingTensor t(3, 2, RootDatum(12));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const int idx[2] = {i, j};
      t.set(idx, i == j ? 3 : 2);
    }
  return t;
}

/// Counts generators of level <= k and degree n over a group with `order`
/// elements without building them.
inline i64 count_cells(i64 order, int k, int n) {
  std::vector<std::vector<i64>> upto(static_cast<std::size_t>(k) + 1, std::vector<i64>(static_cast<std::size_t>(n) + 1, 0));
  for (int s = 0; s <= n; ++s) upto[0][static_cast<std::size_t>(s)] = arith::pow(order, static_cast<unsigned>(s));
  for (int j = 1; j <= k; ++j) {
    for (int s = 0; s <= n; ++s) {
      // ways[p][t]: ordered p-tuples of lower cells with degrees summing to t.
      i64 exact = 0;
      std::vector<i64> ways(static_cast<std::size_t>(s) + 1, 0);
      ways[0] = 1;
      for (int p = 1; p <= s; ++p) {
        std::vector<i64> next(static_cast<std::size_t>(s) + 1, 0);
        for (int t = 0; t <= s; ++t)
          for (int a = 1; a + t <= s; ++a)
            next[static_cast<std::size_t>(t + a)] += ways[static_cast<std::size_t>(t)] * upto[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a)];
        ways = next;
        const int t = s - (p - 1) * j;
        if (p >= 2 && t >= p) exact += ways[static_cast<std::size_t>(t)];
      }
      upto[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] = upto[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(s)] + exact;
    }
  }
  return upto[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
}

struct CliResult {
  std::string output;
  int exit_code = -1;
};

/// Runs the CLI from the data directory so relative fixture paths appear in the output.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("cd '") + WEYL_DATA_DIR + "' && '" + WEYL_CLI + "' " + args + " 2>&1";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct GoldenCase {
  const char* name;
  const char* args;
  int exit_code;
};

inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"quiddity_zeta11", "quiddity --tensor zeta11.json", 0},
      {"quiddity_zeta7", "quiddity --tensor zeta7.json", 0},
      {"quiddity_zeta7_json", "--format json quiddity --tensor zeta7.json --start 3", 0},
      {"cartan_zeta3", "cartan --tensor zeta3_rank3.json", 0},
      {"cartan_zeta11_diagnostics", "cartan --tensor zeta11.json --pair 1 2 --diagnostics 0..3", 0},
      {"cartan_zeta11_json", "--format json cartan --tensor zeta11.json --pair 1 2 --diagnostics 0..3", 0},
      {"orbit_zeta11_json", "--format json orbit --tensor zeta11.json", 0},
      {"orbit_zeta3_dot", "--format dot orbit --tensor zeta3_rank3.json", 0},
      {"dynkin_zeta3_dot", "--format dot dynkin --tensor zeta3_rank3.json", 0},
      {"dynkin_zeta3", "dynkin --tensor zeta3_rank3.json", 0},
      {"frieze_hexagon", "frieze --cycle 1,4,1,2,2,2", 0},
      {"frieze_zeta11", "frieze --tensor zeta11.json", 0},
      {"triangulate_zeta7", "triangulate --tensor zeta7.json", 0},
      {"triangulate_zeta11_json", "--format json triangulate --tensor zeta11.json", 0},
      {"triangulate_hexagon_dot", "--format dot triangulate --cycle 1,4,1,2,2,2", 0},
      {"roots_zeta11", "roots --tensor zeta11.json", 0},
      {"verify_recursion_d4", "verify recursion --degree 4 --m-max 4", 0},
      {"verify_divisibility_d3", "verify divisibility --degree 3 --m-max 3", 0},
      {"boundary_ab", "complex boundary --expr \"[a|b]\"", 0},
      {"boundary_json", "--format json complex boundary --expr \"[a,b||c]\"", 0},
      {"verify_table", "complex verify-table", 0},
      {"witnesses", "complex witnesses", 1},
      {"symcycle_22", "complex symcycle --lambda 2,2 --args a,b", 0},
      {"membership_z3", "complex membership --group Z/3 --expr \"-[1|1] + [a|a] + [a^2|a^2] + [a|a^2] + [a^2|a]\"", 0},
      {"membership_z2_no", "complex membership --group Z/2 --expr \"[a|a]\"", 0},
      {"homology_z2", "complex homology --group Z/2 --level 1 --degree 3", 0},
      {"homology_z4_bar", "--format json complex homology --group Z/4 --level 0 --degree 1", 0},
      {"cocycle_seeded", "--seed 7 complex cocycle --tensor zeta11.json --samples 40", 0},
      {"error_missing_file", "quiddity --tensor missing.json", 2},
      {"error_schema", "cartan --tensor-json '{\"modulus\": 5, \"degree\": 2, \"rank2_profile\": [1, 2]}'", 2},
      {"error_odd_degree", "orbit --tensor-json '{\"modulus\": 6, \"degree\": 3, \"rank2_profile\": [1, 2, 3, 4]}'", 2},
  };
  return cases;
}

inline std::string golden_path(const GoldenCase& c) { return std::string(WEYL_GOLDEN_DIR) + "/" + c.name + ".txt"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace weyl::testing
