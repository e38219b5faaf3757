#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"
#include "weyl/groupoid.hpp"

namespace weyl {

using QuiddityCycle = std::vector<i64>;

/// 2x2 integer matrix in row-major order.
using Mat2 = std::array<i64, 4>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  using arith::add;
  using arith::mul;
  return {add(mul(a[0], b[0]), mul(a[1], b[2])), add(mul(a[0], b[1]), mul(a[1], b[3])),
          add(mul(a[2], b[0]), mul(a[3], b[2])), add(mul(a[2], b[1]), mul(a[3], b[3]))};
}

/// prod_t [[c_t, -1], [1, 0]]; equals -I exactly for quiddity cycles of triangulations.
inline Mat2 continuant_product(std::span<const i64> c) {
  Mat2 p{1, 0, 0, 1};
  for (i64 x : c) p = mat2_mul(p, Mat2{x, -1, 1, 0});
  return p;
}

inline std::size_t minimal_period(std::span<const i64> seq) {
  const std::size_t n = seq.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = seq[i] == seq[i - p];
    if (ok) return p;
  }
  return n;
}

/// Entries -c^a_{1,2}, -c^{rho_1(a)}_{2,1}, -c^{rho_2 rho_1(a)}_{1,2}, ... read along the
/// alternating walk from `start` until the (object, next index) state recurs.
inline std::vector<i64> alternating_cartan_walk(const CartanGraph& g, std::size_t start) {
  if (g.rank != 2) throw InvalidArgument("quiddity cycles need a rank-2 Cartan graph");
  if (start >= g.size()) throw InvalidArgument("start object out of range");
  std::vector<i64> seq;
  std::size_t obj = start;
  int next = 0;
  const std::size_t cap = 2 * g.size() + 2;
  do {
    if (seq.size() >= cap) throw NonPeriodic("alternating reflection walk does not return to its start");
    seq.push_back(-g.objects[obj].cartan(next, 1 - next));
    obj = g.rho(obj, next);
    next = 1 - next;
  } while (obj != start || next != 0);
  return seq;
}

/// The walk's minimal period p is repeated t times for the smallest t with
/// (continuant product over p entries)^t = -I.
inline QuiddityCycle quiddity_cycle(const CartanGraph& g, std::size_t start = 0) {
  const auto walk = alternating_cartan_walk(g, start);
  const std::size_t p = minimal_period(walk);
  const std::span<const i64> period(walk.data(), p);
  try {
    const Mat2 step = continuant_product(period);
    Mat2 acc = step;
    for (std::size_t t = 1; t <= 6; ++t) {
      if (acc == Mat2{-1, 0, 0, -1}) {
        QuiddityCycle c;
        for (std::size_t r = 0; r < t; ++r) c.insert(c.end(), period.begin(), period.end());
        return c;
      }
      acc = mat2_mul(acc, step);
    }
  } catch (const Overflow&) {
  }
  throw NotAQuiddityCycle("Cartan entries along the alternating walk do not close to a quiddity cycle");
}

/// Frieze row starting at position i: F(i,i) = 0, F(i,i+1) = 1,
/// F(i,j+1) = c_j F(i,j) - F(i,j-1), up to the next zero.
inline std::vector<std::vector<i64>> frieze_rows(std::span<const i64> c) {
  const std::size_t n = c.size();
  if (n < 3) throw InvalidArgument("quiddity cycles need at least 3 entries");
  std::vector<std::vector<i64>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<i64> row{0, 1};
    while (row.back() != 0) {
      if (row.size() > n) throw InvalidArgument("not a quiddity cycle: frieze row does not close");
      const i64 cj = c[(i + row.size() - 2) % n];
      row.push_back(arith::sub(arith::mul(cj, row[row.size() - 1]), row[row.size() - 2]));
      if (row.back() < 0) throw InvalidArgument("not a quiddity cycle: negative frieze entry");
    }
    if (row.size() != n + 1) throw InvalidArgument("not a quiddity cycle: frieze row closes early");
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Staggered layout: row i is shifted right by i cells.
inline std::string render_frieze(const std::vector<std::vector<i64>>& rows) {
  std::size_t width = 1;
  for (const auto& r : rows)
    for (i64 x : r) width = std::max(width, std::to_string(x).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line(i * (width + 1), ' ');
    for (std::size_t t = 0; t < rows[i].size(); ++t) {
      const std::string cell = std::to_string(rows[i][t]);
      line += std::string(width - cell.size(), ' ') + cell;
      if (t + 1 < rows[i].size()) line += ' ';
    }
    os << line << '\n';
  }
  return os.str();
}

struct Triangulation {
  std::size_t vertices = 0;
  /// Diagonals (a, b) with a < b; vertices are numbered 0..N-1 around the polygon.
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;
  std::vector<std::array<std::size_t, 3>> triangles;

  std::vector<i64> triangle_counts() const {
    std::vector<i64> counts(vertices, 0);
    for (const auto& t : triangles)
      for (auto v : t) ++counts[v];
    return counts;
  }
};

/// Ear cutting: repeatedly remove the lowest-numbered vertex whose remaining
/// entry is 1 and decrement its neighbours.
inline Triangulation triangulate(std::span<const i64> c) {
  const std::size_t n = c.size();
  if (n < 3) throw NotAQuiddityCycle("a polygon needs at least 3 vertices");
  for (i64 x : c)
    if (x < 1) throw NotAQuiddityCycle("quiddity entries must be positive");
  Triangulation tri;
  tri.vertices = n;
  std::vector<std::size_t> poly(n);
  std::iota(poly.begin(), poly.end(), std::size_t{0});
  std::vector<i64> value(c.begin(), c.end());
  while (poly.size() > 3) {
    std::size_t pos = poly.size();
    for (std::size_t t = 0; t < poly.size(); ++t) {
      if (value[poly[t]] == 1) {
        pos = t;
        break;
      }
    }
    if (pos == poly.size()) throw NotAQuiddityCycle("no ear available");
    const std::size_t prev = poly[(pos + poly.size() - 1) % poly.size()];
    const std::size_t cur = poly[pos];
    const std::size_t next = poly[(pos + 1) % poly.size()];
    if (--value[prev] < 1 || --value[next] < 1) throw NotAQuiddityCycle("ear cut leaves a vertex without triangles");
    tri.diagonals.emplace_back(std::min(prev, next), std::max(prev, next));
    std::array<std::size_t, 3> t{prev, cur, next};
    std::sort(t.begin(), t.end());
    tri.triangles.push_back(t);
    poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  for (auto v : poly)
    if (value[v] != 1) throw NotAQuiddityCycle("final triangle does not close");
  std::array<std::size_t, 3> last{poly[0], poly[1], poly[2]};
  std::sort(last.begin(), last.end());
  tri.triangles.push_back(last);
  std::sort(tri.diagonals.begin(), tri.diagonals.end());

  const auto counts = tri.triangle_counts();
  if (!std::equal(counts.begin(), counts.end(), c.begin()))
    throw NotAQuiddityCycle("triangle counts do not reproduce the cycle");
  return tri;
}

}  // namespace weyl
