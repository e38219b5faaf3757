#pragma once

#include <string>
#include <vector>

#include "weyl/laurent.hpp"
#include "weyl/rosso.hpp"

namespace weyl {

/// One checked polynomial identity.
struct IdentityCheck {
  std::string name;
  i64 m = 0;
  bool holds = false;
  /// Lowest monomial of lhs - rhs when the identity fails.
  std::string counterexample;
};

struct IdentityReport {
  int degree = 0;
  std::vector<IdentityCheck> checks;

  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return !checks.empty();
  }
};

struct RecursionOptions {
  /// Added to the doubled q_0-exponent of r_m; non-zero values produce a
  /// deliberately wrong recursion for negative controls.
  i64 r_perturbation = 0;
};

namespace detail {

inline IdentityCheck compare(std::string name, i64 m, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  IdentityCheck c{std::move(name), m, lhs == rhs, {}};
  if (!c.holds) {
    const LaurentPoly diff = lhs - rhs;
    const auto& [e, coeff] = *diff.terms().begin();
    c.counterexample = LaurentPoly::monomial(e, coeff).to_string();
  }
  return c;
}

inline LaurentPoly one_minus(const LaurentPoly& x) { return LaurentPoly::constant(x.nvars(), 1) - x; }

inline LaurentPoly rtilde(const RossoVectors& rv) {
  return one_minus(poly_from_gamma(rv.v)) * one_minus(poly_from_gamma(rv.w));
}

/// R_m = (1 - chi(w_m)) * sum_{mu=0}^{m} g_m^mu, the quotient of Rtilde_m by 1 - g_m.
inline LaurentPoly rosso_polynomial(const RossoVectors& rv) {
  return one_minus(poly_from_gamma(rv.w)) * geometric_sum(poly_from_gamma(rv.s), static_cast<unsigned>(rv.m));
}

}  // namespace detail

/// Checks Rtilde_0 = (1 - r_0)(1 - z_0) and Rtilde_m = r_m Rtilde_{m-1} + (1 - r_m)(1 - z_m)
/// for m <= m_max, where Rtilde_m = (1 - chi(v_m))(1 - chi(w_m)). For d = 2 the
/// classical closed form and recursion are checked as well.
inline IdentityReport verify_recursion(int d, i64 m_max, RecursionOptions opts = {}) {
  if (d < 2) throw InvalidArgument("degree must be at least 2");
  if (m_max < 1) throw InvalidArgument("m_max must be at least 1");
  using detail::one_minus;
  IdentityReport report{d, {}};

  auto r_poly = [&](i64 m) {
    GammaVector r = r_vector(d, m);
    r.doubled[0] = arith::add(r.doubled[0], opts.r_perturbation);
    return poly_from_gamma(r);
  };

  LaurentPoly prev;
  for (i64 m = 0; m <= m_max; ++m) {
    const RossoVectors rv = rosso_vectors(d, m);
    const LaurentPoly rt = detail::rtilde(rv);
    const LaurentPoly r = r_poly(m);
    const LaurentPoly z = poly_from_gamma(z_vector(d, m));
    if (m == 0) {
      report.checks.push_back(detail::compare("Rtilde_0 = (1-r_0)(1-z_0)", m, rt, one_minus(r) * one_minus(z)));
    } else {
      report.checks.push_back(detail::compare("Rtilde_m = r_m Rtilde_{m-1} + (1-r_m)(1-z_m)", m, rt,
                                              r * prev + one_minus(r) * one_minus(z)));
    }
    prev = rt;
  }

  if (d == 2) {
    // q_0 = q_{ll}, q_1 = q_{lj} q_{jl} in doubled exponents.
    const LaurentPoly q0 = LaurentPoly::monomial({2, 0, 0});
    const LaurentPoly q1 = LaurentPoly::monomial({0, 2, 0});
    LaurentPoly classical = one_minus(q1);
    for (i64 k = 0; k <= m_max; ++k) {
      if (k > 0) {
        classical = one_minus(q0.pow(static_cast<unsigned>(2 * k)) * q1) + q0 * classical;
      }
      const LaurentPoly closed = one_minus(q0.pow(static_cast<unsigned>(k)) * q1) *
                                 geometric_sum(q0, static_cast<unsigned>(k));
      report.checks.push_back(detail::compare("classical recursion R_k = closed form", k, classical, closed));
      report.checks.push_back(detail::compare("(1-q_0) * classical R_k = Rtilde_k", k, one_minus(q0) * closed,
                                              detail::rtilde(rosso_vectors(d, k))));
      report.checks.push_back(detail::compare("R_k = classical R_k", k,
                                              detail::rosso_polynomial(rosso_vectors(d, k)), closed));
    }
  }
  return report;
}

/// Checks chi(v_m) = g_m^{m+1}, 1 - chi(v_m) = (1 - g_m) sum_{mu<=m} g_m^mu,
/// g_0 = r_0, R_0 = 1 - z_0 and the recursion for (1 - g_m) R_m.
inline IdentityReport verify_divisibility(int d, i64 m_max) {
  if (d < 2) throw InvalidArgument("degree must be at least 2");
  if (m_max < 0) throw InvalidArgument("m_max must be non-negative");
  using detail::one_minus;
  IdentityReport report{d, {}};
  LaurentPoly prev_r, prev_g;
  for (i64 m = 0; m <= m_max; ++m) {
    const RossoVectors rv = rosso_vectors(d, m);
    const LaurentPoly chi_v = poly_from_gamma(rv.v);
    const LaurentPoly g = poly_from_gamma(rv.s);
    report.checks.push_back(detail::compare("chi(v_m) = g_m^(m+1)", m, chi_v, g.pow(static_cast<unsigned>(m + 1))));
    report.checks.push_back(detail::compare("1 - chi(v_m) = (1 - g_m) * sum g_m^mu", m, one_minus(chi_v),
                                            one_minus(g) * geometric_sum(g, static_cast<unsigned>(m))));
    const LaurentPoly rm = detail::rosso_polynomial(rv);
    const LaurentPoly r = poly_from_gamma(r_vector(d, m));
    const LaurentPoly z = poly_from_gamma(z_vector(d, m));
    if (m == 0) {
      report.checks.push_back(detail::compare("g_0 = r_0", m, g, r));
      report.checks.push_back(detail::compare("R_0 = 1 - z_0", m, rm, one_minus(z)));
    } else {
      report.checks.push_back(detail::compare("(1-g_m) R_m = r_m (1-g_{m-1}) R_{m-1} + (1-r_m)(1-z_m)", m,
                                              one_minus(g) * rm,
                                              r * one_minus(prev_g) * prev_r + one_minus(r) * one_minus(z)));
    }
    prev_r = rm;
    prev_g = g;
  }
  return report;
}

}  // namespace weyl
