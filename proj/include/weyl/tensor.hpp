#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"

namespace weyl {

/// Order M of the fixed primitive root of unity mu. Every character value is
/// written mu^e with e in Z/M.
class RootDatum {
 public:
  explicit RootDatum(i64 modulus = 1) : modulus_(modulus) {
    if (modulus < 1) throw InvalidArgument("modulus must be positive");
  }
  i64 modulus() const noexcept { return modulus_; }
  i64 reduce(i64 e) const noexcept { return arith::mod(e, modulus_); }
  bool operator==(const RootDatum&) const = default;

 private:
  i64 modulus_;
};

/// Vector sum_k (t_k / 2) gamma_k in the basis gamma_0..gamma_d, stored with
/// doubled integer coordinates t_k.
struct GammaVector {
  std::vector<i64> doubled;

  GammaVector() = default;
  explicit GammaVector(int degree) : doubled(static_cast<std::size_t>(degree) + 1, 0) {}
  explicit GammaVector(std::vector<i64> t) : doubled(std::move(t)) {}

  int degree() const noexcept { return static_cast<int>(doubled.size()) - 1; }

  friend GammaVector operator+(const GammaVector& a, const GammaVector& b) {
    if (a.doubled.size() != b.doubled.size()) throw InvalidArgument("gamma vector degree mismatch");
    GammaVector r = a;
    for (std::size_t k = 0; k < r.doubled.size(); ++k) r.doubled[k] = arith::add(r.doubled[k], b.doubled[k]);
    return r;
  }
  friend GammaVector operator-(const GammaVector& a) {
    GammaVector r = a;
    for (auto& t : r.doubled) t = -t;
    return r;
  }
  friend GammaVector operator*(i64 s, const GammaVector& a) {
    GammaVector r = a;
    for (auto& t : r.doubled) t = arith::mul(s, t);
    return r;
  }
  bool operator==(const GammaVector&) const = default;
};

/// Rank-n, degree-d tensor of exponents of the fixed square roots sqrt(q_{i_1..i_d}),
/// so that q_{i_1..i_d} = mu^(2 * entry). Indices are 0-based; the flat layout
/// is row-major with i_1 most significant.
class SqrtBraidingTensor {
 public:
  SqrtBraidingTensor(int rank, int degree, RootDatum datum)
      : rank_(rank), degree_(degree), datum_(datum) {
    if (rank < 1) throw InvalidArgument("tensor rank must be positive");
    if (degree < 2) throw InvalidArgument("tensor degree must be at least 2");
    std::size_t size = 1;
    for (int t = 0; t < degree; ++t) {
      size *= static_cast<std::size_t>(rank);
      if (size > kMaxEntries) throw BoundExceeded("tensor has more than 2^22 entries");
    }
    entries_.assign(size, 0);
  }

  /// Embeds a rank-2 aggregate profile (e_0..e_d): each aggregate is placed on
  /// the lexicographically smallest index of its orbit, (1,..,1,2,..,2) with k
  /// trailing twos, and every other entry is 0.
  static SqrtBraidingTensor from_rank2_profile(RootDatum datum, std::span<const i64> profile) {
    if (profile.size() < 3) throw InvalidArgument("rank-2 profile needs at least 3 entries");
    const int d = static_cast<int>(profile.size()) - 1;
    SqrtBraidingTensor t(2, d, datum);
    std::vector<int> index(static_cast<std::size_t>(d), 0);
    for (int k = 0; k <= d; ++k) {
      for (int s = 0; s < d; ++s) index[static_cast<std::size_t>(s)] = s >= d - k ? 1 : 0;
      t.set(index, profile[static_cast<std::size_t>(k)]);
    }
    return t;
  }

  int rank() const noexcept { return rank_; }
  int degree() const noexcept { return degree_; }
  const RootDatum& datum() const noexcept { return datum_; }
  i64 modulus() const noexcept { return datum_.modulus(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<i64>& flat() const noexcept { return entries_; }

  std::size_t offset(std::span<const int> index) const {
    if (index.size() != static_cast<std::size_t>(degree_)) throw InvalidArgument("index length differs from degree");
    std::size_t off = 0;
    for (int i : index) {
      if (i < 0 || i >= rank_) throw InvalidArgument("tensor index out of range");
      off = off * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i);
    }
    return off;
  }

  /// Inverse of offset().
  std::vector<int> index_of(std::size_t off) const {
    std::vector<int> idx(static_cast<std::size_t>(degree_));
    for (int t = degree_ - 1; t >= 0; --t) {
      idx[static_cast<std::size_t>(t)] = static_cast<int>(off % static_cast<std::size_t>(rank_));
      off /= static_cast<std::size_t>(rank_);
    }
    return idx;
  }

  i64 at(std::span<const int> index) const { return entries_[offset(index)]; }
  i64 at_flat(std::size_t off) const { return entries_.at(off); }
  void set(std::span<const int> index, i64 exponent) { entries_[offset(index)] = datum_.reduce(exponent); }
  void set_flat(std::size_t off, i64 exponent) { entries_.at(off) = datum_.reduce(exponent); }

  bool operator==(const SqrtBraidingTensor&) const = default;
  auto operator<=>(const SqrtBraidingTensor& o) const {
    if (auto c = rank_ <=> o.rank_; c != 0) return c;
    if (auto c = degree_ <=> o.degree_; c != 0) return c;
    if (auto c = datum_.modulus() <=> o.datum_.modulus(); c != 0) return c;
    return entries_ <=> o.entries_;
  }

 private:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 22;

  int rank_;
  int degree_;
  RootDatum datum_;
  std::vector<i64> entries_;
};

/// sqrt-exponent of q_k: the sum of entries over all indices in {ell, j}^d with
/// exactly k coordinates equal to j.
inline i64 gamma_aggregate(const SqrtBraidingTensor& t, int ell, int j, int k) {
  if (ell == j) throw InvalidArgument("gamma_aggregate requires ell != j");
  if (ell < 0 || j < 0 || ell >= t.rank() || j >= t.rank()) throw InvalidArgument("index out of range");
  const int d = t.degree();
  if (k < 0 || k > d) throw InvalidArgument("aggregate index k out of range");
  const i64 M = t.modulus();
  i64 sum = 0;
  std::vector<int> index(static_cast<std::size_t>(d));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    for (int s = 0; s < d; ++s) index[static_cast<std::size_t>(s)] = (mask >> (d - 1 - s)) & 1u ? j : ell;
    sum = arith::mod(sum + t.at(index), M);
  }
  return sum;
}

/// All d+1 aggregates for the pair (ell, j).
inline std::vector<i64> gamma_profile(const SqrtBraidingTensor& t, int ell, int j) {
  std::vector<i64> out;
  for (int k = 0; k <= t.degree(); ++k) out.push_back(gamma_aggregate(t, ell, j, k));
  return out;
}

/// mu-exponent of chi_q(v) for v expressed in the gamma basis of (ell, j).
inline i64 chi_eval(std::span<const i64> profile, const GammaVector& v, i64 modulus) {
  if (static_cast<std::size_t>(v.degree()) + 1 != profile.size()) throw InvalidArgument("gamma vector degree mismatch");
  i64 r = 0;
  for (std::size_t k = 0; k < profile.size(); ++k)
    r = arith::mod(r + arith::mulmod(v.doubled[k], profile[k], modulus), modulus);
  return r;
}

inline i64 chi_eval(const SqrtBraidingTensor& t, int ell, int j, const GammaVector& v) {
  if (v.degree() != t.degree()) throw InvalidArgument("gamma vector degree mismatch");
  const auto profile = gamma_profile(t, ell, j);
  return chi_eval(profile, v, t.modulus());
}

}  // namespace weyl
