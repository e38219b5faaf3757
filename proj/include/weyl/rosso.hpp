#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"
#include "weyl/tensor.hpp"

namespace weyl {

inline constexpr i64 kDefaultMMax = 1000;

/// Doubled gamma coordinates of u_m, v_m, w_m and s_m for the degree-m step of
/// the pair (ell, j). v and w are the +1 and -1 eigencomponents of u under the
/// reflection at ell with c_{ell,j} = -m, and v = (m+1) s.
struct RossoVectors {
  i64 m = 0;
  int degree = 0;
  GammaVector u;
  GammaVector v;
  GammaVector w;
  GammaVector s;
};

namespace detail {

struct CheckedInt {
  i64 v;
  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return {arith::add(a.v, b.v)}; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return {arith::sub(a.v, b.v)}; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return {arith::mul(a.v, b.v)}; }
};

template <class Num>
Num power(Num base, int exp, Num one) {
  Num r = one;
  for (int i = 0; i < exp; ++i) r = r * base;
  return r;
}

/// Coordinates indexed by k = 0..d; nu = d - k is the number of ell-factors.
template <class Num>
struct Coords {
  std::vector<Num> u, v, w, s;
};

template <class Num>
Coords<Num> rosso_coords(int d, Num m, Num one) {
  const Num zero = one - one;
  const Num two = one + one;
  const Num m1 = m + one;
  Coords<Num> c;
  for (int k = 0; k <= d; ++k) {
    const int nu = d - k;
    if (nu == 0) {
      c.u.push_back(zero);
      c.v.push_back(zero);
      c.w.push_back(zero);
      c.s.push_back(zero);
      continue;
    }
    const Num diff = power(m1, nu, one) - power(m, nu, one);
    const Num sign = nu % 2 == 0 ? one : zero - one;
    c.u.push_back(two * diff);
    c.v.push_back(diff + sign);
    c.w.push_back(diff - sign);
    Num s = power(m1, nu - 1, one);
    for (int i = 0; i < nu; ++i) {
      const Num term = power(m, i, one);
      s = (nu - i) % 2 == 0 ? s + term : s - term;
    }
    c.s.push_back(s);
  }
  return c;
}

inline GammaVector to_gamma(const std::vector<CheckedInt>& xs) {
  GammaVector g;
  for (auto x : xs) g.doubled.push_back(x.v);
  return g;
}

}  // namespace detail

/// (e_{m,k}, f_{m,k}): binomial sums over nu <= k-2 with nu = k (mod 2), and over
/// nu <= k-1 with nu != k (mod 2), of C(k,nu) m^nu.
inline std::pair<i64, i64> ef_coeffs(i64 m, int k) {
  if (m < 0 || k < 0) throw InvalidArgument("ef_coeffs requires m, k >= 0");
  i64 e = 0, f = 0;
  for (int nu = 0; nu <= k - 1; ++nu) {
    const i64 term = arith::mul(arith::binomial(static_cast<unsigned>(k), static_cast<unsigned>(nu)),
                                arith::pow(m, static_cast<unsigned>(nu)));
    if ((k - nu) % 2 == 0) {
      if (nu <= k - 2) e = arith::add(e, term);
    } else {
      f = arith::add(f, term);
    }
  }
  return {e, f};
}

/// Exact doubled coordinates; throws Overflow when (m+1)^d leaves int64.
inline RossoVectors rosso_vectors(int d, i64 m) {
  if (d < 2) throw InvalidArgument("degree must be at least 2");
  if (m < 0) throw InvalidArgument("m must be non-negative");
  const auto c = detail::rosso_coords<detail::CheckedInt>(d, {m}, {1});
  return RossoVectors{m, d, detail::to_gamma(c.u), detail::to_gamma(c.v), detail::to_gamma(c.w),
                      detail::to_gamma(c.s)};
}

/// Doubled gamma coordinates of r_m = prod_{i<=d-2} q_i^{e_{m,d-i}}.
inline GammaVector r_vector(int d, i64 m) {
  GammaVector g(d);
  for (int i = 0; i <= d - 2; ++i) g.doubled[static_cast<std::size_t>(i)] = arith::mul(2, ef_coeffs(m, d - i).first);
  return g;
}

/// Doubled gamma coordinates of z_m = prod_{i<=d-1} q_i^{f_{m,d-i}}.
inline GammaVector z_vector(int d, i64 m) {
  GammaVector g(d);
  for (int i = 0; i <= d - 1; ++i) g.doubled[static_cast<std::size_t>(i)] = arith::mul(2, ef_coeffs(m, d - i).second);
  return g;
}

/// mu-exponents of chi(v_m), chi(w_m), chi(s_m).
struct RossoResidues {
  i64 m = 0;
  i64 chi_v = 0;
  i64 chi_w = 0;
  i64 chi_s = 0;
  /// R_m = 0: (chi(v_m) = 1 and chi(s_m) != 1) or chi(w_m) = 1.
  bool vanishes() const noexcept { return (chi_v == 0 && chi_s != 0) || chi_w == 0; }
};

/// Works entirely modulo M, so any m is admissible.
inline RossoResidues rosso_residues(std::span<const i64> profile, i64 m, i64 modulus) {
  if (profile.size() < 3) throw InvalidArgument("profile needs degree >= 2");
  if (m < 0) throw InvalidArgument("m must be non-negative");
  const int d = static_cast<int>(profile.size()) - 1;
  const auto c = detail::rosso_coords<Residue>(d, Residue(m, modulus), Residue(1, modulus));
  RossoResidues r;
  r.m = m;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    r.chi_v = arith::mod(r.chi_v + arith::mulmod(c.v[k].value, profile[k], modulus), modulus);
    r.chi_w = arith::mod(r.chi_w + arith::mulmod(c.w[k].value, profile[k], modulus), modulus);
    r.chi_s = arith::mod(r.chi_s + arith::mulmod(c.s[k].value, profile[k], modulus), modulus);
  }
  return r;
}

inline bool rosso_condition(const SqrtBraidingTensor& t, int ell, int j, i64 m) {
  const auto profile = gamma_profile(t, ell, j);
  return rosso_residues(profile, m, t.modulus()).vanishes();
}

/// -min{m <= m_max : R_m = 0} computed from an aggregate profile.
inline std::optional<i64> cartan_entry_from_profile(std::span<const i64> profile, i64 modulus, i64 m_max) {
  for (i64 m = 0; m <= m_max; ++m)
    if (rosso_residues(profile, m, modulus).vanishes()) return -m;
  return std::nullopt;
}

inline i64 cartan_entry(const SqrtBraidingTensor& t, int ell, int j, i64 m_max = kDefaultMMax) {
  if (m_max < 0) throw InvalidArgument("m_max must be non-negative");
  const auto profile = gamma_profile(t, ell, j);
  if (auto c = cartan_entry_from_profile(profile, t.modulus(), m_max)) return *c;
  throw UndefinedCartanEntry(ell, j, m_max);
}

/// Square integer matrix indexed 0..n-1.
class GeneralizedCartanMatrix {
 public:
  GeneralizedCartanMatrix() = default;
  explicit GeneralizedCartanMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n), 0) {
    for (int i = 0; i < n; ++i) (*this)(i, i) = 2;
  }
  GeneralizedCartanMatrix(int n, std::vector<i64> rows) : n_(n), data_(std::move(rows)) {
    if (data_.size() != static_cast<std::size_t>(n * n)) throw InvalidArgument("matrix size mismatch");
  }

  int size() const noexcept { return n_; }
  i64& operator()(int i, int j) { return data_.at(static_cast<std::size_t>(i * n_ + j)); }
  i64 operator()(int i, int j) const { return data_.at(static_cast<std::size_t>(i * n_ + j)); }
  std::vector<i64> row(int i) const {
    return {data_.begin() + i * n_, data_.begin() + (i + 1) * n_};
  }

  /// (M1) diagonal 2, off-diagonal <= 0.
  bool satisfies_m1() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i == j ? (*this)(i, j) != 2 : (*this)(i, j) > 0) return false;
    return true;
  }
  /// (M2) c_ij = 0 iff c_ji = 0.
  bool satisfies_m2() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (((*this)(i, j) == 0) != ((*this)(j, i) == 0)) return false;
    return true;
  }

  bool operator==(const GeneralizedCartanMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<i64> data_;
};

inline GeneralizedCartanMatrix cartan_matrix(const SqrtBraidingTensor& t, i64 m_max = kDefaultMMax) {
  if (t.degree() % 2 != 0) throw OddDegree(t.degree());
  GeneralizedCartanMatrix c(t.rank());
  for (int ell = 0; ell < t.rank(); ++ell)
    for (int j = 0; j < t.rank(); ++j)
      if (ell != j) c(ell, j) = cartan_entry(t, ell, j, m_max);
  if (!c.satisfies_m1() || !c.satisfies_m2())
    throw Error("internal error: Cartan matrix of an even-degree tensor violates (M1)/(M2)");
  return c;
}

inline std::vector<RossoResidues> rosso_diagnostics(const SqrtBraidingTensor& t, int ell, int j, i64 m_lo,
                                                    i64 m_hi) {
  if (m_lo < 0 || m_hi < m_lo) throw InvalidArgument("invalid m range");
  const auto profile = gamma_profile(t, ell, j);
  std::vector<RossoResidues> out;
  for (i64 m = m_lo; m <= m_hi; ++m) out.push_back(rosso_residues(profile, m, t.modulus()));
  return out;
}

}  // namespace weyl
