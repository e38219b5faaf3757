#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"

namespace weyl::complex {

/// Integer matrix stored by columns as (row, value) pairs.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, i64>>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }

  std::vector<i64> multiply(const std::vector<i64>& y) const {
    if (y.size() != cols) throw InvalidArgument("vector length differs from column count");
    std::vector<i64> out(rows, 0);
    for (std::size_t j = 0; j < cols; ++j) {
      if (y[j] == 0) continue;
      for (const auto& [i, v] : columns[j]) out[i] = arith::add(out[i], arith::mul(v, y[j]));
    }
    return out;
  }
};

/// Diagonal form D = U A V over Z with U recorded as a list of row operations.
/// Unit pivots are eliminated sparsely; the remainder is diagonalized densely.
class SmithForm {
 public:
  explicit SmithForm(const SparseIntMatrix& a) : rows_(a.rows) {
    std::vector<std::map<std::size_t, i64>> row(a.rows);
    std::vector<std::set<std::size_t>> col_rows(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) {
      for (const auto& [i, v] : a.columns[j]) {
        if (v == 0) continue;
        row[i][j] = arith::add(row[i][j], v);
        if (row[i][j] == 0) {
          row[i].erase(j);
          col_rows[j].erase(i);
        } else {
          col_rows[j].insert(i);
        }
      }
    }
    unit_phase(row, col_rows);
    dense_phase(row, a.cols);
    normalize();
  }

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t rows() const noexcept { return rows_; }

  /// Invariant factors d_1 | d_2 | ... | d_r, including units.
  const std::vector<i64>& invariant_factors() const noexcept { return invariants_; }

  std::vector<i64> torsion() const {
    std::vector<i64> t;
    for (i64 d : invariants_)
      if (d > 1) t.push_back(d);
    return t;
  }

  /// x lies in the column lattice iff (Ux)_i is divisible by d_i on pivot rows and
  /// vanishes on all other rows.
  bool in_image(std::vector<i64> x) const {
    if (x.size() != rows_) throw InvalidArgument("vector length differs from row count");
    for (const auto& op : ops_) x[op.target] = arith::sub(x[op.target], arith::mul(op.factor, x[op.source]));
    for (const auto& [r, d] : pivots_) {
      if (x[r] % d != 0) return false;
      x[r] = 0;
    }
    for (i64 v : x)
      if (v != 0) return false;
    return true;
  }

 private:
  struct RowOp {
    std::size_t target;
    std::size_t source;
    i64 factor;
  };

  void unit_phase(std::vector<std::map<std::size_t, i64>>& row, std::vector<std::set<std::size_t>>& col_rows) {
    while (true) {
      std::size_t best_r = 0, best_c = 0;
      std::size_t best_cost = std::numeric_limits<std::size_t>::max();
      for (std::size_t r = 0; r < row.size() && best_cost > 0; ++r) {
        const std::size_t rc = row[r].size();
        if (rc == 0) continue;
        for (const auto& [c, v] : row[r]) {
          if (v != 1 && v != -1) continue;
          const std::size_t cost = (rc - 1) * (col_rows[c].size() - 1);
          if (cost < best_cost) {
            best_cost = cost;
            best_r = r;
            best_c = c;
            if (cost == 0) break;
          }
        }
      }
      if (best_cost == std::numeric_limits<std::size_t>::max()) return;
      const i64 p = row[best_r].at(best_c);
      const std::vector<std::size_t> others(col_rows[best_c].begin(), col_rows[best_c].end());
      for (std::size_t i : others) {
        if (i == best_r) continue;
        const i64 f = arith::mul(row[i].at(best_c), p);
        ops_.push_back({i, best_r, f});
        for (const auto& [c, v] : row[best_r]) {
          i64& slot = row[i][c];
          slot = arith::sub(slot, arith::mul(f, v));
          if (slot == 0) {
            row[i].erase(c);
            col_rows[c].erase(i);
          } else {
            col_rows[c].insert(i);
          }
        }
      }
      for (const auto& [c, v] : row[best_r]) col_rows[c].erase(best_r);
      row[best_r].clear();
      pivots_.emplace_back(best_r, 1);
    }
  }

  void dense_phase(const std::vector<std::map<std::size_t, i64>>& row, std::size_t ncols) {
    std::vector<std::size_t> rid;
    std::vector<std::size_t> cid;
    std::vector<std::size_t> col_pos(ncols, std::numeric_limits<std::size_t>::max());
    for (std::size_t r = 0; r < row.size(); ++r) {
      if (row[r].empty()) continue;
      rid.push_back(r);
      for (const auto& [c, v] : row[r]) {
        if (col_pos[c] == std::numeric_limits<std::size_t>::max()) {
          col_pos[c] = cid.size();
          cid.push_back(c);
        }
      }
    }
    if (rid.empty()) return;
    const std::size_t R = rid.size();
    const std::size_t C = cid.size();
    std::vector<std::vector<i64>> D(R, std::vector<i64>(C, 0));
    for (std::size_t i = 0; i < R; ++i)
      for (const auto& [c, v] : row[rid[i]]) D[i][col_pos[c]] = v;
    std::vector<bool> row_done(R, false), col_done(C, false);

    auto find_min = [&](bool restrict_to_cross, std::size_t pr, std::size_t pc, std::size_t& r, std::size_t& c) {
      i64 best = 0;
      for (std::size_t i = 0; i < R; ++i) {
        if (row_done[i]) continue;
        for (std::size_t j = 0; j < C; ++j) {
          if (col_done[j] || D[i][j] == 0) continue;
          if (restrict_to_cross && i != pr && j != pc) continue;
          const i64 a = D[i][j] < 0 ? -D[i][j] : D[i][j];
          if (best == 0 || a < best) {
            best = a;
            r = i;
            c = j;
          }
        }
      }
      return best != 0;
    };

    std::size_t pr = 0, pc = 0;
    while (find_min(false, 0, 0, pr, pc)) {
      while (true) {
        bool remainder = false;
        const i64 p = D[pr][pc];
        for (std::size_t i = 0; i < R; ++i) {
          if (i == pr || row_done[i] || D[i][pc] == 0) continue;
          const i64 q = D[i][pc] / p;
          if (q != 0) {
            ops_.push_back({rid[i], rid[pr], q});
            for (std::size_t j = 0; j < C; ++j)
              if (!col_done[j] && D[pr][j] != 0) D[i][j] = arith::sub(D[i][j], arith::mul(q, D[pr][j]));
          }
          remainder = remainder || D[i][pc] != 0;
        }
        for (std::size_t j = 0; j < C; ++j) {
          if (j == pc || col_done[j] || D[pr][j] == 0) continue;
          const i64 q = D[pr][j] / p;
          if (q != 0)
            for (std::size_t i = 0; i < R; ++i)
              if (!row_done[i] && D[i][pc] != 0) D[i][j] = arith::sub(D[i][j], arith::mul(q, D[i][pc]));
          remainder = remainder || D[pr][j] != 0;
        }
        if (!remainder) break;
        std::size_t r2 = pr, c2 = pc;
        find_min(true, pr, pc, r2, c2);
        pr = r2;
        pc = c2;
      }
      pivots_.emplace_back(rid[pr], D[pr][pc] < 0 ? -D[pr][pc] : D[pr][pc]);
      row_done[pr] = true;
      col_done[pc] = true;
    }
  }

  void normalize() {
    for (const auto& [r, d] : pivots_) invariants_.push_back(d);
    std::sort(invariants_.begin(), invariants_.end());
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
      for (std::size_t j = i + 1; j < invariants_.size(); ++j) {
        if (invariants_[j] % invariants_[i] == 0) continue;
        const i64 g = std::gcd(invariants_[i], invariants_[j]);
        invariants_[j] = arith::mul(invariants_[i] / g, invariants_[j]);
        invariants_[i] = g;
      }
    }
  }

  std::size_t rows_;
  std::vector<RowOp> ops_;
  std::vector<std::pair<std::size_t, i64>> pivots_;
  std::vector<i64> invariants_;
};

/// Column lattice solver: sparse unit-pivot elimination with back substitution,
/// then an echelon lattice basis (distinct leading rows) for the residual columns,
/// each residual basis vector remembering its combination of original columns.
class EchelonBasis {
 public:
  explicit EchelonBasis(const SparseIntMatrix& a) : rows_(a.rows), cols_(a.cols) {
    std::vector<Vec> row(a.rows);
    std::vector<std::set<std::size_t>> col_rows(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j)
      for (const auto& [i, v] : a.columns[j]) {
        add_to(row[i], j, v);
        if (row[i].count(j)) col_rows[j].insert(i);
        else col_rows[j].erase(i);
      }
    eliminate_units(row, col_rows);
    std::map<std::size_t, Vec> residual;
    for (std::size_t r = 0; r < row.size(); ++r)
      for (const auto& [c, v] : row[r]) residual[c][r] = v;
    for (auto& [c, v] : residual) insert(std::move(v), Vec{{c, 1}});
  }

  std::size_t rank() const noexcept { return units_.size() + basis_.size(); }

  /// y with A y = x, or nullopt when x is not in the column lattice.
  std::optional<std::vector<i64>> solve(std::vector<i64> x) const {
    if (x.size() != rows_) throw InvalidArgument("vector length differs from row count");
    for (const auto& op : ops_) x[op.target] = arith::sub(x[op.target], arith::mul(op.factor, x[op.source]));
    std::vector<bool> unit_row(rows_, false);
    for (const auto& u : units_) unit_row[u.row] = true;
    Vec v;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!unit_row[i]) add_to(v, i, x[i]);
    Vec y;
    while (!v.empty()) {
      const auto [r, a] = *v.begin();
      auto it = basis_.find(r);
      if (it == basis_.end()) return std::nullopt;
      const i64 p = it->second.vec.begin()->second;
      if (a % p != 0) return std::nullopt;
      const i64 q = a / p;
      axpy(v, -q, it->second.vec);
      axpy(y, q, it->second.comb);
    }
    std::vector<i64> out(cols_, 0);
    for (const auto& [j, c] : y) out[j] = c;
    for (auto u = units_.rbegin(); u != units_.rend(); ++u) {
      i64 val = x[u->row];
      for (const auto& [c, w] : u->rest) val = arith::sub(val, arith::mul(w, out[c]));
      out[u->col] = arith::mul(u->pivot, val);
    }
    return out;
  }

 private:
  using Vec = std::map<std::size_t, i64>;
  struct Entry {
    Vec vec;
    Vec comb;
  };
  struct RowOp {
    std::size_t target;
    std::size_t source;
    i64 factor;
  };
  struct UnitPivot {
    std::size_t row;
    std::size_t col;
    i64 pivot;
    std::vector<std::pair<std::size_t, i64>> rest;
  };

  void eliminate_units(std::vector<Vec>& row, std::vector<std::set<std::size_t>>& col_rows) {
    while (true) {
      std::size_t best_r = 0, best_c = 0;
      std::size_t best_cost = std::numeric_limits<std::size_t>::max();
      for (std::size_t r = 0; r < row.size() && best_cost > 0; ++r) {
        const std::size_t rc = row[r].size();
        for (const auto& [c, v] : row[r]) {
          if (v != 1 && v != -1) continue;
          const std::size_t cost = (rc - 1) * (col_rows[c].size() - 1);
          if (cost < best_cost) {
            best_cost = cost;
            best_r = r;
            best_c = c;
            if (cost == 0) break;
          }
        }
      }
      if (best_cost == std::numeric_limits<std::size_t>::max()) return;
      const i64 p = row[best_r].at(best_c);
      const std::vector<std::size_t> others(col_rows[best_c].begin(), col_rows[best_c].end());
      for (std::size_t i : others) {
        if (i == best_r) continue;
        const i64 f = arith::mul(row[i].at(best_c), p);
        ops_.push_back({i, best_r, f});
        for (const auto& [c, v] : row[best_r]) {
          add_to(row[i], c, arith::mul(-f, v));
          if (row[i].count(c)) col_rows[c].insert(i);
          else col_rows[c].erase(i);
        }
      }
      UnitPivot u{best_r, best_c, p, {}};
      for (const auto& [c, v] : row[best_r]) {
        col_rows[c].erase(best_r);
        if (c != best_c) u.rest.emplace_back(c, v);
      }
      row[best_r].clear();
      units_.push_back(std::move(u));
    }
  }

  static void add_to(Vec& v, std::size_t i, i64 x) {
    if (x == 0) return;
    i64& slot = v[i];
    slot = arith::add(slot, x);
    if (slot == 0) v.erase(i);
  }

  static void axpy(Vec& v, i64 s, const Vec& w) {
    if (s == 0) return;
    for (const auto& [i, x] : w) add_to(v, i, arith::mul(s, x));
  }

  static Vec combine(i64 s, const Vec& a, i64 t, const Vec& b) {
    Vec out;
    axpy(out, s, a);
    axpy(out, t, b);
    return out;
  }

  void insert(Vec v, Vec comb) {
    while (!v.empty()) {
      const auto [r, a] = *v.begin();
      auto it = basis_.find(r);
      if (it == basis_.end()) {
        if (a < 0) {
          for (auto& [i, x] : v) x = -x;
          for (auto& [i, x] : comb) x = -x;
        }
        basis_.emplace(r, Entry{std::move(v), std::move(comb)});
        return;
      }
      Entry& e = it->second;
      const i64 p = e.vec.begin()->second;
      if (a % p == 0) {
        const i64 q = a / p;
        axpy(v, -q, e.vec);
        axpy(comb, -q, e.comb);
        continue;
      }
      // Extended gcd: s p + t a = g.
      i64 old_r = p, cur_r = a, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
      while (cur_r != 0) {
        const i64 q = old_r / cur_r;
        std::tie(old_r, cur_r) = std::make_pair(cur_r, old_r - q * cur_r);
        std::tie(old_s, cur_s) = std::make_pair(cur_s, arith::sub(old_s, arith::mul(q, cur_s)));
        std::tie(old_t, cur_t) = std::make_pair(cur_t, arith::sub(old_t, arith::mul(q, cur_t)));
      }
      i64 g = old_r, s = old_s, t = old_t;
      if (g < 0) {
        g = -g;
        s = -s;
        t = -t;
      }
      Entry lead{combine(s, e.vec, t, v), combine(s, e.comb, t, comb)};
      Vec rest = combine(-(a / g), e.vec, p / g, v);
      Vec rest_comb = combine(-(a / g), e.comb, p / g, comb);
      e = std::move(lead);
      v = std::move(rest);
      comb = std::move(rest_comb);
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<RowOp> ops_;
  std::vector<UnitPivot> units_;
  std::map<std::size_t, Entry> basis_;
};

}  // namespace weyl::complex
