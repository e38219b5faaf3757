#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "weyl/abelian_group.hpp"
#include "weyl/arith.hpp"
#include "weyl/error.hpp"

namespace weyl::complex {

/// Generator of A^k_n(Pi). Level 0 is a bar tuple [x_1,...,x_n] (the empty tuple is
/// the degree-0 generator); level k >= 1 is [alpha_1 |_k ... |_k alpha_p] with p >= 2
/// components of level < k. A one-component wrapper is always replaced by its
/// component, so equal generators have equal representations.
class Cell {
 public:
  Cell() = default;

  static Cell bar(std::vector<GroupElement> xs) {
    Cell c;
    c.degree_ = static_cast<int>(xs.size());
    c.elems_ = std::move(xs);
    return c;
  }

  static Cell join(int level, std::vector<Cell> parts) {
    if (level < 1) throw InvalidArgument("join needs level >= 1");
    if (parts.empty()) throw InvalidArgument("a cell needs at least one component");
    if (parts.size() == 1) return std::move(parts.front());
    Cell c;
    c.level_ = level;
    int deg = (static_cast<int>(parts.size()) - 1) * level;
    for (const auto& p : parts) {
      if (p.level_ >= level) throw InvalidArgument("component level must be below the cell level");
      deg += p.degree_;
    }
    c.degree_ = deg;
    c.parts_ = std::move(parts);
    return c;
  }

  int level() const noexcept { return level_; }
  int degree() const noexcept { return degree_; }
  const std::vector<GroupElement>& elements() const noexcept { return elems_; }
  const std::vector<Cell>& parts() const noexcept { return parts_; }

  /// Components of this cell viewed as a generator of A^j: single elements for
  /// j = 0, the |_j-parts for a level-j cell, and the cell itself below level j.
  std::vector<Cell> components(int j) const {
    if (level_ > j) throw InvalidArgument("cell level exceeds the shuffle level");
    if (j == 0) {
      std::vector<Cell> out;
      out.reserve(elems_.size());
      for (const auto& x : elems_) out.push_back(bar({x}));
      return out;
    }
    if (level_ == j) return parts_;
    return {*this};
  }

  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.level_ <=> b.level_; c != 0) return c;
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                                        b.elems_.end());
        c != 0)
      return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
  }
  friend bool operator==(const Cell& a, const Cell& b) { return (a <=> b) == 0; }

 private:
  int level_ = 0;
  int degree_ = 0;
  std::vector<GroupElement> elems_;
  std::vector<Cell> parts_;
};

/// Finite Z-linear combination of cells without zero coefficients.
class Chain {
 public:
  Chain() = default;
  explicit Chain(const Cell& c, i64 coeff = 1) { add(c, coeff); }

  void add(const Cell& c, i64 coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
      it->second = arith::add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Chain& o, i64 scale = 1) {
    for (const auto& [c, v] : o.terms_) add(c, arith::mul(scale, v));
  }

  Chain& operator+=(const Chain& o) {
    add(o, 1);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    add(o, -1);
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(const Chain& a) { return Chain() - a; }
  friend Chain operator*(i64 s, const Chain& a) {
    Chain r;
    r.add(a, s);
    return r;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Cell, i64>& terms() const noexcept { return terms_; }
  i64 coefficient(const Cell& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Common degree of all terms, or -1 for the zero chain; throws if mixed.
  int degree() const {
    int d = -1;
    for (const auto& [c, v] : terms_) {
      if (d >= 0 && c.degree() != d) throw InvalidArgument("chain is not homogeneous");
      d = c.degree();
    }
    return d;
  }

  int max_level() const {
    int k = 0;
    for (const auto& [c, v] : terms_) k = std::max(k, c.level());
    return k;
  }

  bool operator==(const Chain&) const = default;

 private:
  std::map<Cell, i64> terms_;
};

inline int sign_of(i64 exponent) { return exponent % 2 == 0 ? 1 : -1; }

/// alpha *_k beta: signed sum over order-preserving interleavings of the
/// level-k components, sign exponent sum (n_i + k)(m_j + k) over pairs with
/// alpha_i after beta_j.
inline Chain shuffle(const Cell& a, const Cell& b, int k) {
  const auto A = a.components(k);
  const auto B = b.components(k);
  const std::size_t p = A.size();
  const std::size_t q = B.size();
  Chain out;
  // mask bit t set means slot t takes the next beta.
  std::vector<bool> take_b(p + q, false);
  std::fill(take_b.begin() + static_cast<std::ptrdiff_t>(p), take_b.end(), true);
  do {
    std::vector<Cell> seq;
    seq.reserve(p + q);
    std::size_t ia = 0;
    std::size_t ib = 0;
    i64 eps = 0;
    i64 b_weight_so_far = 0;
    for (std::size_t t = 0; t < p + q; ++t) {
      if (take_b[t]) {
        b_weight_so_far += B[ib].degree() + k;
        seq.push_back(B[ib++]);
      } else {
        eps += static_cast<i64>(A[ia].degree() + k) * b_weight_so_far;
        seq.push_back(A[ia++]);
      }
    }
    Cell c;
    if (k == 0) {
      std::vector<GroupElement> xs;
      for (const auto& s : seq) xs.push_back(s.elements().front());
      c = Cell::bar(std::move(xs));
    } else {
      c = Cell::join(k, std::move(seq));
    }
    out.add(c, sign_of(eps));
  } while (std::next_permutation(take_b.begin(), take_b.end()));
  return out;
}

inline Chain shuffle(const Chain& x, const Chain& y, int k) {
  Chain out;
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) out.add(shuffle(a, b, k), arith::mul(u, v));
  return out;
}

inline Chain boundary(const Cell& c, const AbGroup& g);

namespace detail {

inline Chain bar_boundary(const Cell& c, const AbGroup& g) {
  const auto& x = c.elements();
  const std::size_t n = x.size();
  Chain out;
  if (n == 0) return out;
  out.add(Cell::bar({x.begin() + 1, x.end()}), 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<GroupElement> y;
    y.reserve(n - 1);
    y.insert(y.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i - 1));
    y.push_back(g.multiply(x[i - 1], x[i]));
    y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(i + 1), x.end());
    out.add(Cell::bar(std::move(y)), sign_of(static_cast<i64>(i)));
  }
  out.add(Cell::bar({x.begin(), x.end() - 1}), sign_of(static_cast<i64>(n)));
  return out;
}

}  // namespace detail

/// Boundary of a generator. Level 0 is the bar boundary; level k uses
/// a_i = n_1 + ... + n_i + i k.
inline Chain boundary(const Cell& c, const AbGroup& g) {
  if (c.level() == 0) return detail::bar_boundary(c, g);
  const int k = c.level();
  const auto& parts = c.parts();
  const std::size_t p = parts.size();
  std::vector<i64> a(p + 1, 0);
  for (std::size_t i = 1; i <= p; ++i) a[i] = a[i - 1] + parts[i - 1].degree() + k;

  Chain out;
  for (std::size_t i = 0; i < p; ++i) {
    const Chain d = boundary(parts[i], g);
    for (const auto& [term, v] : d.terms()) {
      auto next = parts;
      next[i] = term;
      out.add(Cell::join(k, std::move(next)), arith::mul(sign_of(a[i]), v));
    }
  }
  for (std::size_t i = 0; i + 1 < p; ++i) {
    const Chain s = shuffle(parts[i], parts[i + 1], k - 1);
    for (const auto& [term, v] : s.terms()) {
      std::vector<Cell> next;
      next.reserve(p - 1);
      next.insert(next.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i));
      next.push_back(term);
      next.insert(next.end(), parts.begin() + static_cast<std::ptrdiff_t>(i + 2), parts.end());
      out.add(Cell::join(k, std::move(next)), arith::mul(sign_of(a[i + 1]), v));
    }
  }
  return out;
}

inline Chain boundary(const Chain& x, const AbGroup& g) {
  Chain out;
  for (const auto& [c, v] : x.terms()) out.add(boundary(c, g), v);
  return out;
}

}  // namespace weyl::complex
