#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weyl/abelian_group.hpp"
#include "weyl/complex/cell.hpp"
#include "weyl/error.hpp"

namespace weyl::complex {

inline constexpr int kMaxEnumDegree = 7;
inline constexpr int kMaxEnumLevel = 4;
inline constexpr std::size_t kDefaultMaxCells = 2500;

/// WEYL_MAX_CELLS if set to a positive integer, otherwise the default.
inline std::size_t max_cells_from_env() {
  if (const char* v = std::getenv("WEYL_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return kDefaultMaxCells;
}

struct EnumerationBounds {
  int max_degree = kMaxEnumDegree;
  int max_level = kMaxEnumLevel;
  std::size_t max_cells = max_cells_from_env();
};

namespace detail {

class CellEnumerator {
 public:
  CellEnumerator(std::vector<GroupElement> elems, std::size_t limit) : elems_(std::move(elems)), limit_(limit) {}

  const std::vector<Cell>& exact(int level, int n) {
    const auto key = std::make_pair(level, n);
    if (auto it = exact_.find(key); it != exact_.end()) return it->second;
    std::vector<Cell> out;
    if (level == 0) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<GroupElement> xs;
        xs.reserve(idx.size());
        for (auto i : idx) xs.push_back(elems_[i]);
        push(out, Cell::bar(std::move(xs)));
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == elems_.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    } else {
      for (int p = 2; (p - 1) * level + p <= n; ++p) {
        const int total = n - (p - 1) * level;
        std::vector<int> sizes;
        compositions(total, p, sizes, out, level);
      }
    }
    return exact_.emplace(key, std::move(out)).first->second;
  }

  std::vector<Cell> upto(int level, int n) {
    std::vector<Cell> out;
    for (int j = 0; j <= level; ++j) {
      const auto& e = exact(j, n);
      out.insert(out.end(), e.begin(), e.end());
      if (out.size() > limit_) exceeded();
    }
    return out;
  }

 private:
  void exceeded() const {
    throw BoundExceeded("cell enumeration exceeds " + std::to_string(limit_) + " cells (set WEYL_MAX_CELLS to raise)");
  }

  void push(std::vector<Cell>& out, Cell c) const {
    if (out.size() >= limit_) exceeded();
    out.push_back(std::move(c));
  }

  void compositions(int remaining, int parts_left, std::vector<int>& sizes, std::vector<Cell>& out, int level) {
    if (parts_left == 0) {
      if (remaining == 0) product(sizes, level, out);
      return;
    }
    for (int s = 1; s <= remaining - (parts_left - 1); ++s) {
      sizes.push_back(s);
      compositions(remaining - s, parts_left - 1, sizes, out, level);
      sizes.pop_back();
    }
  }

  void product(const std::vector<int>& sizes, int level, std::vector<Cell>& out) {
    std::vector<std::vector<Cell>> choices;
    for (int s : sizes) choices.push_back(upto(level - 1, s));
    std::vector<std::size_t> idx(choices.size(), 0);
    for (const auto& c : choices)
      if (c.empty()) return;
    while (true) {
      std::vector<Cell> parts;
      for (std::size_t t = 0; t < idx.size(); ++t) parts.push_back(choices[t][idx[t]]);
      push(out, Cell::join(level, std::move(parts)));
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == choices[pos - 1].size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }

  std::vector<GroupElement> elems_;
  std::size_t limit_;
  std::map<std::pair<int, int>, std::vector<Cell>> exact_;
};

}  // namespace detail

/// Sorted generators of level <= k and degree n whose bar entries lie in `elems`.
inline std::vector<Cell> enumerate_cells_over(std::vector<GroupElement> elems, int k, int n,
                                              const EnumerationBounds& b = {}) {
  if (k < 0 || n < 0) throw InvalidArgument("level and degree must be non-negative");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  detail::CellEnumerator en(std::move(elems), b.max_cells);
  auto cells = en.upto(k, n);
  std::sort(cells.begin(), cells.end());
  return cells;
}

/// All generators of A^k_n(Pi) for finite Pi, sorted.
inline std::vector<Cell> enumerate_cells(const AbGroup& g, int k, int n, const EnumerationBounds& b = {}) {
  if (!g.is_finite()) throw InvalidArgument("cell enumeration needs a finite group");
  if (k < 0 || n < 0) throw InvalidArgument("level and degree must be non-negative");
  if (n > b.max_degree) throw BoundExceeded("degree " + std::to_string(n) + " exceeds the enumeration bound " +
                                            std::to_string(b.max_degree));
  if (k > b.max_level) throw BoundExceeded("level " + std::to_string(k) + " exceeds the enumeration bound " +
                                           std::to_string(b.max_level));
  return enumerate_cells_over(g.elements(), k, n, b);
}

}  // namespace weyl::complex
