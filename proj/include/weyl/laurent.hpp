#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"
#include "weyl/tensor.hpp"

namespace weyl {

/// Sparse Laurent polynomial in sqrt(q_0), ..., sqrt(q_d) with integer
/// coefficients. Exponent vectors count powers of sqrt(q_i), i.e. they are the
/// doubled exponents of q_i. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<i64>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, i64 c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static LaurentPoly monomial(Exponent e, i64 c = 1) {
    LaurentPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Exponent, i64>& terms() const noexcept { return terms_; }

  void add_term(Exponent e, i64 c) {
    if (e.size() != nvars_) throw InvalidArgument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = arith::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(a.nvars_) - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.nvars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = arith::add(ea[i], eb[i]);
        r.add_term(std::move(e), arith::mul(ca, cb));
      }
    }
    return r;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r = constant(nvars_, 1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Human-readable form using s<i> for sqrt(q_i).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      const i64 a = c < 0 ? -c : c;
      bool any = false;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << "s" << i;
        if (e[i] != 1) os << "^" << e[i];
        any = true;
      }
      if (!any) {
        os << a;
      } else if (a != 1) {
        os << "*" << a;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void check(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw InvalidArgument("Laurent polynomial arity mismatch");
  }

  std::size_t nvars_ = 0;
  std::map<Exponent, i64> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// chi_q(v) as the formal monomial whose sqrt-exponents are v's doubled coordinates.
inline LaurentPoly poly_from_gamma(const GammaVector& v) { return LaurentPoly::monomial(v.doubled, 1); }

/// 1 + x + ... + x^n.
inline LaurentPoly geometric_sum(const LaurentPoly& x, unsigned n) {
  LaurentPoly sum = LaurentPoly::constant(x.nvars(), 1);
  LaurentPoly power = LaurentPoly::constant(x.nvars(), 1);
  for (unsigned i = 0; i < n; ++i) {
    power = power * x;
    sum += power;
  }
  return sum;
}

namespace cyclotomic {

/// Coefficients (lowest degree first) of the M-th cyclotomic polynomial.
inline std::vector<i64> polynomial(i64 M) {
  if (M < 1) throw InvalidArgument("cyclotomic order must be positive");
  // x^M - 1 divided by Phi_e for every proper divisor e of M.
  std::vector<i64> num(static_cast<std::size_t>(M) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(M)] = 1;
  for (i64 e = 1; e < M; ++e) {
    if (M % e != 0) continue;
    const auto den = polynomial(e);
    // Exact division by a monic polynomial.
    std::vector<i64> q(num.size() - den.size() + 1, 0);
    std::vector<i64> rem = num;
    for (std::size_t i = q.size(); i-- > 0;) {
      const i64 c = rem[i + den.size() - 1];
      q[i] = c;
      for (std::size_t t = 0; t < den.size(); ++t) rem[i + t] = arith::sub(rem[i + t], arith::mul(c, den[t]));
    }
    num = std::move(q);
  }
  return num;
}

/// Reduces an element of Z[x]/(x^M - 1) modulo Phi_M; the result is zero iff
/// the element vanishes at a primitive M-th root of unity.
inline std::vector<i64> reduce(std::vector<i64> coeffs, i64 M) {
  const auto phi = polynomial(M);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    const i64 c = coeffs[i];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) coeffs[i - deg + t] = arith::sub(coeffs[i - deg + t], arith::mul(c, phi[t]));
  }
  coeffs.resize(deg);
  return coeffs;
}

}  // namespace cyclotomic

/// Evaluates p at sqrt(q_i) = mu^{exponents[i]} for a primitive M-th root mu;
/// returns the element of Z[mu] in the power basis 1, mu, ..., mu^{phi(M)-1}.
inline std::vector<i64> evaluate_at_root_of_unity(const LaurentPoly& p, const std::vector<i64>& exponents, i64 M) {
  if (exponents.size() != p.nvars()) throw InvalidArgument("assignment arity mismatch");
  std::vector<i64> group_ring(static_cast<std::size_t>(M), 0);
  for (const auto& [e, c] : p.terms()) {
    i64 total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) total = arith::mod(total + arith::mulmod(e[i], exponents[i], M), M);
    group_ring[static_cast<std::size_t>(total)] = arith::add(group_ring[static_cast<std::size_t>(total)], c);
  }
  return cyclotomic::reduce(std::move(group_ring), M);
}

inline bool vanishes_at_root_of_unity(const LaurentPoly& p, const std::vector<i64>& exponents, i64 M) {
  for (i64 c : evaluate_at_root_of_unity(p, exponents, M))
    if (c != 0) return false;
  return true;
}

}  // namespace weyl
