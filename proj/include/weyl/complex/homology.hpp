#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/abelian_group.hpp"
#include "weyl/complex/cell.hpp"
#include "weyl/complex/enumerate.hpp"
#include "weyl/complex/smith.hpp"
#include "weyl/complex/symmetrized.hpp"
#include "weyl/error.hpp"

namespace weyl::complex {

/// Sorted generators of A^k_n(Pi) with their positions.
struct CellBasis {
  std::vector<Cell> cells;
  std::map<Cell, std::size_t> index;

  CellBasis() = default;
  explicit CellBasis(std::vector<Cell> c) : cells(std::move(c)) {
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);
  }

  std::vector<i64> coordinates(const Chain& x) const {
    std::vector<i64> v(cells.size(), 0);
    for (const auto& [c, coeff] : x.terms()) {
      auto it = index.find(c);
      if (it == index.end()) throw InvalidArgument("chain term is not a generator of the enumerated basis");
      v[it->second] = coeff;
    }
    return v;
  }

  Chain chain(const std::vector<i64>& v) const {
    Chain x;
    for (std::size_t i = 0; i < v.size(); ++i) x.add(cells[i], v[i]);
    return x;
  }
};

/// Matrix of the boundary from `source` cells into `target` cells.
inline SparseIntMatrix boundary_matrix(const AbGroup& g, const CellBasis& source, const CellBasis& target) {
  SparseIntMatrix m(target.cells.size(), source.cells.size());
  for (std::size_t j = 0; j < source.cells.size(); ++j) {
    const Chain b = boundary(source.cells[j], g);
    for (const auto& [c, v] : b.terms()) {
      auto it = target.index.find(c);
      if (it == target.index.end()) throw Error("internal error: boundary term outside the enumerated basis");
      m.columns[j].emplace_back(it->second, v);
    }
  }
  return m;
}

struct MembershipResult {
  bool is_boundary = false;
  /// y with boundary(y) = x when is_boundary.
  Chain witness;
  std::size_t source_cells = 0;
  std::size_t target_cells = 0;
};

/// Decides x in im(boundary: A^k_{n+1} -> A^k_n) for a fixed (Pi, k, n). The decision
/// is made twice, by the Smith form and by an echelon lattice basis; the echelon
/// basis also yields the witness, which is checked by applying the boundary.
class BoundarySolver {
 public:
  BoundarySolver(const AbGroup& g, int k, int n, const EnumerationBounds& b = {})
      : group_(g),
        level_(k),
        degree_(n),
        source_(enumerate_cells(g, k, n + 1, b)),
        target_(enumerate_cells(g, k, n, b)),
        matrix_(boundary_matrix(g, source_, target_)),
        smith_(matrix_),
        echelon_(matrix_) {
    if (smith_.rank() != echelon_.rank()) throw Error("internal error: Smith and echelon ranks disagree");
  }

  int level() const noexcept { return level_; }
  int degree() const noexcept { return degree_; }
  const CellBasis& source() const noexcept { return source_; }
  const CellBasis& target() const noexcept { return target_; }

  MembershipResult solve(const Chain& x) const {
    MembershipResult res;
    res.source_cells = source_.cells.size();
    res.target_cells = target_.cells.size();
    if (x.is_zero()) {
      res.is_boundary = true;
      return res;
    }
    if (x.degree() != degree_) throw InvalidArgument("chain degree differs from the solver degree");
    if (x.max_level() > level_) throw InvalidArgument("chain has cells above the solver level");
    const auto v = target_.coordinates(x);
    const bool by_smith = smith_.in_image(v);
    const auto y = echelon_.solve(v);
    if (by_smith != y.has_value()) throw Error("internal error: Smith and echelon membership disagree");
    res.is_boundary = by_smith;
    if (y) {
      res.witness = source_.chain(*y);
      if (boundary(res.witness, group_) != x) throw Error("internal error: membership witness does not verify");
    }
    return res;
  }

 private:
  AbGroup group_;
  int level_;
  int degree_;
  CellBasis source_;
  CellBasis target_;
  SparseIntMatrix matrix_;
  SmithForm smith_;
  EchelonBasis echelon_;
};

inline MembershipResult boundary_membership(const Chain& x, const AbGroup& g, int k, const EnumerationBounds& b = {}) {
  if (x.is_zero()) return MembershipResult{true, {}, 0, 0};
  return BoundarySolver(g, k, x.degree(), b).solve(x);
}

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<i64> torsion;

  std::string describe() const {
    std::string s;
    if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (i64 t : torsion) s += (s.empty() ? "" : " x ") + ("Z/" + std::to_string(t));
    return s.empty() ? "0" : s;
  }
  bool operator==(const HomologyGroup&) const = default;
};

/// H^k_n(Pi) from the Smith forms of the boundaries into and out of degree n.
inline HomologyGroup homology(const AbGroup& g, int k, int n, const EnumerationBounds& b = {}) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  const CellBasis here(enumerate_cells(g, k, n, b));
  const CellBasis above(enumerate_cells(g, k, n + 1, b));
  std::size_t rank_out = 0;
  if (n > 0) {
    const CellBasis below(enumerate_cells(g, k, n - 1, b));
    rank_out = SmithForm(boundary_matrix(g, here, below)).rank();
  }
  const SmithForm in(boundary_matrix(g, above, here));
  HomologyGroup h;
  h.free_rank = here.cells.size() - rank_out - in.rank();
  h.torsion = in.torsion();
  return h;
}

enum class ConjectureStatus { holds, fails, out_of_bounds };

inline std::string to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::holds: return "holds";
    case ConjectureStatus::fails: return "fails";
    case ConjectureStatus::out_of_bounds: return "out-of-bounds";
  }
  return "?";
}

struct ConjectureResult {
  ConjectureStatus additivity = ConjectureStatus::out_of_bounds;
  ConjectureStatus inverse = ConjectureStatus::out_of_bounds;
  Chain combination;
  Chain inverse_combination;
};

/// Sum over nonempty S in {1..lambda_i+1} of (-1)^(lambda_i+1-|S|) {..; prod_S beta; ..}_lambda.
inline Chain conjecture_combination(const AbGroup& g, const Composition& lambda, std::size_t i,
                                    const std::vector<GroupElement>& alphas, const std::vector<GroupElement>& betas) {
  if (lambda.size() != alphas.size()) throw InvalidArgument("composition and argument lists differ in length");
  if (i >= lambda.size()) throw InvalidArgument("argument position out of range");
  const std::size_t nb = static_cast<std::size_t>(lambda[i]) + 1;
  if (betas.size() != nb) throw InvalidArgument("expected lambda_i + 1 factors");
  Chain out;
  for (unsigned mask = 1; mask < (1u << nb); ++mask) {
    GroupElement prod = g.identity();
    std::size_t size = 0;
    for (std::size_t t = 0; t < nb; ++t) {
      if (mask & (1u << t)) {
        prod = g.multiply(prod, betas[t]);
        ++size;
      }
    }
    auto args = alphas;
    args[i] = prod;
    out.add(symmetrized_cycle(args, lambda), sign_of(static_cast<i64>(nb - size)));
  }
  return out;
}

/// {..; beta; ..}_lambda - (-1)^lambda_i {..; beta^-1; ..}_lambda.
inline Chain inverse_combination(const AbGroup& g, const Composition& lambda, std::size_t i,
                                 const std::vector<GroupElement>& alphas, const GroupElement& beta) {
  auto args = alphas;
  args.at(i) = beta;
  Chain out = symmetrized_cycle(args, lambda);
  args[i] = g.inverse(beta);
  out.add(symmetrized_cycle(args, lambda), -sign_of(lambda[i]));
  return out;
}

inline ConjectureResult check_conjecture_instance(const AbGroup& g, const Composition& lambda, std::size_t i,
                                                  const std::vector<GroupElement>& alphas,
                                                  const std::vector<GroupElement>& betas,
                                                  const EnumerationBounds& b = {}) {
  ConjectureResult r;
  r.combination = conjecture_combination(g, lambda, i, alphas, betas);
  r.inverse_combination = inverse_combination(g, lambda, i, alphas, betas.front());
  int d = 0;
  for (int x : lambda) d += x;
  try {
    const BoundarySolver solver(g, 1, 2 * d - 1, b);
    r.additivity = solver.solve(r.combination).is_boundary ? ConjectureStatus::holds : ConjectureStatus::fails;
    r.inverse = solver.solve(r.inverse_combination).is_boundary ? ConjectureStatus::holds : ConjectureStatus::fails;
  } catch (const BoundExceeded&) {
    r.additivity = ConjectureStatus::out_of_bounds;
    r.inverse = ConjectureStatus::out_of_bounds;
  }
  return r;
}

}  // namespace weyl::complex
