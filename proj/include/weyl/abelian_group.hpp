#pragma once

#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"

namespace weyl {

/// Element of a finitely generated abelian group, stored as a coordinate vector
/// (free part first, then torsion components reduced modulo their orders).
struct GroupElement {
  std::vector<i64> coords;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

/// Z^r x Z/m_1 x ... x Z/m_s.
class AbGroup {
 public:
  AbGroup() = default;
  AbGroup(std::size_t free_rank, std::vector<i64> torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (i64 m : torsion_)
      if (m < 1) throw InvalidArgument("torsion orders must be positive");
  }

  static AbGroup free(std::size_t rank) { return AbGroup(rank, {}); }
  static AbGroup cyclic(i64 m) { return AbGroup(0, {m}); }

  /// Parses "Z/2xZ/3", "Z^2xZ/4", "Z", "1" (trivial group).
  static AbGroup parse(const std::string& text);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<i64>& torsion() const noexcept { return torsion_; }
  std::size_t dimension() const noexcept { return free_rank_ + torsion_.size(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Number of elements; only meaningful for finite groups.
  i64 order() const {
    if (!is_finite()) throw InvalidArgument("order of an infinite group");
    i64 n = 1;
    for (i64 m : torsion_) n = arith::mul(n, m);
    return n;
  }

  GroupElement identity() const { return GroupElement{std::vector<i64>(dimension(), 0)}; }

  GroupElement element(std::vector<i64> coords) const {
    if (coords.size() != dimension()) throw InvalidArgument("element has wrong number of coordinates");
    GroupElement g{std::move(coords)};
    reduce(g);
    return g;
  }

  GroupElement generator(std::size_t i) const {
    GroupElement g = identity();
    g.coords.at(i) = 1;
    reduce(g);
    return g;
  }

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = arith::add(r.coords[i], b.coords[i]);
    reduce(r);
    return r;
  }

  GroupElement inverse(const GroupElement& a) const {
    GroupElement r = a;
    for (auto& c : r.coords) c = -c;
    reduce(r);
    return r;
  }

  GroupElement power(const GroupElement& a, i64 e) const {
    GroupElement r = a;
    for (auto& c : r.coords) c = arith::mul(c, e);
    reduce(r);
    return r;
  }

  /// All elements of a finite group in lexicographic coordinate order.
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    const i64 n = order();
    out.reserve(static_cast<std::size_t>(n));
    std::vector<i64> c(dimension(), 0);
    for (i64 idx = 0; idx < n; ++idx) {
      out.push_back(GroupElement{c});
      for (std::size_t pos = c.size(); pos-- > 0;) {
        if (++c[pos] < torsion_[pos]) break;
        c[pos] = 0;
      }
    }
    return out;
  }

  std::string describe() const {
    if (dimension() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
      os << "Z";
      if (free_rank_ > 1) os << "^" << free_rank_;
      first = false;
    }
    for (i64 m : torsion_) {
      if (!first) os << "x";
      os << "Z/" << m;
      first = false;
    }
    return os.str();
  }

  bool operator==(const AbGroup&) const = default;

 private:
  void reduce(GroupElement& g) const {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      auto& c = g.coords[free_rank_ + i];
      c = arith::mod(c, torsion_[i]);
    }
  }

  std::size_t free_rank_ = 0;
  std::vector<i64> torsion_;
};

inline AbGroup AbGroup::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty() || s == "1" || s == "0") return AbGroup();
  std::size_t free_rank = 0;
  std::vector<i64> torsion;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find_first_of("x*", pos);
    if (end == std::string::npos) end = s.size();
    const std::string factor = s.substr(pos, end - pos);
    try {
      if (factor == "Z") {
        ++free_rank;
      } else if (factor.rfind("Z^", 0) == 0) {
        free_rank += static_cast<std::size_t>(std::stoul(factor.substr(2)));
      } else if (factor.rfind("Z/", 0) == 0) {
        torsion.push_back(std::stoll(factor.substr(2)));
      } else {
        throw ParseError("unknown group factor '" + factor + "'");
      }
    } catch (const std::logic_error&) {
      throw ParseError("malformed group factor '" + factor + "'");
    }
    pos = end + 1;
  }
  // Free factors precede torsion factors regardless of input order.
  return AbGroup(free_rank, std::move(torsion));
}

}  // namespace weyl
