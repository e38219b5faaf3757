#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "weyl/abelian_group.hpp"
#include "weyl/arith.hpp"
#include "weyl/complex/cell.hpp"
#include "weyl/error.hpp"
#include "weyl/tensor.hpp"

namespace weyl::complex {

using Composition = std::vector<int>;

/// [x_1 | ... | x_d] with single-element components.
inline Cell pure_cell(std::span<const GroupElement> xs) {
  if (xs.empty()) throw InvalidArgument("pure cells need at least one argument");
  std::vector<Cell> parts;
  parts.reserve(xs.size());
  for (const auto& x : xs) parts.push_back(Cell::bar({x}));
  return Cell::join(1, std::move(parts));
}

/// {alpha_1; ...; alpha_p}_lambda. Permutations run over argument positions, so
/// repeated arguments produce repeated cells rather than being merged first.
inline Chain symmetrized_cycle(std::span<const GroupElement> args, const Composition& lambda) {
  if (args.size() != lambda.size()) throw InvalidArgument("composition and argument lists differ in length");
  if (lambda.empty()) throw InvalidArgument("empty composition");
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1) throw InvalidArgument("composition parts must be positive");
    labels.insert(labels.end(), static_cast<std::size_t>(lambda[i]), i);
  }
  Chain out;
  std::vector<GroupElement> xs(labels.size());
  do {
    for (std::size_t t = 0; t < labels.size(); ++t) xs[t] = args[labels[t]];
    out.add(pure_cell(xs), 1);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

/// Components x_1..x_d of a pure cell; throws for any other shape.
inline std::vector<GroupElement> pure_components(const Cell& c) {
  if (c.level() == 0 && c.elements().size() == 1) return c.elements();
  if (c.level() != 1) throw InvalidArgument("cochain is only defined on pure cells [x_1|...|x_d]");
  std::vector<GroupElement> xs;
  for (const auto& p : c.parts()) {
    if (p.level() != 0 || p.elements().size() != 1)
      throw InvalidArgument("cochain is only defined on pure cells [x_1|...|x_d]");
    xs.push_back(p.elements().front());
  }
  return xs;
}

/// Multilinear extension of the q-level exponents 2 t(i_1..i_d) to a pure cell over
/// Pi = Z^n: sum over index tuples of 2 t(i) prod_j (x_j)_{i_j}, reduced mod M.
inline i64 dcharacter_eval(const SqrtBraidingTensor& t, const Cell& c) {
  const auto xs = pure_components(c);
  if (static_cast<int>(xs.size()) != t.degree())
    throw InvalidArgument("pure cell has " + std::to_string(xs.size()) + " components but the tensor has degree " +
                          std::to_string(t.degree()));
  for (const auto& x : xs)
    if (static_cast<int>(x.coords.size()) != t.rank()) throw InvalidArgument("group element rank differs from tensor rank");
  const i64 M = t.modulus();
  i64 acc = 0;
  for (std::size_t off = 0; off < t.size(); ++off) {
    const i64 e = t.at_flat(off);
    if (e == 0) continue;
    const auto idx = t.index_of(off);
    i64 w = arith::mod(2 * e, M);
    for (std::size_t j = 0; j < xs.size() && w != 0; ++j)
      w = arith::mulmod(w, xs[j].coords[static_cast<std::size_t>(idx[j])], M);
    acc = arith::mod(acc + w, M);
  }
  return acc;
}

inline i64 dcharacter_eval(const SqrtBraidingTensor& t, const Chain& x) {
  const i64 M = t.modulus();
  i64 acc = 0;
  for (const auto& [c, v] : x.terms()) acc = arith::mod(acc + arith::mulmod(v, dcharacter_eval(t, c), M), M);
  return acc;
}

/// theta_lambda(alpha_1; ...; alpha_p) as a mu-exponent mod M.
inline i64 theta_lambda(const SqrtBraidingTensor& t, const Composition& lambda, std::span<const GroupElement> args) {
  return dcharacter_eval(t, symmetrized_cycle(args, lambda));
}

struct CocycleDefectReport {
  int degree = 0;
  std::size_t samples = 0;
  std::size_t nonzero = 0;
  std::vector<Cell> examples;
};

/// Evaluates the cochain that is the multilinear extension on pure cells and zero
/// elsewhere on boundaries of random level-1 cells of degree 2d. Exploratory only.
inline CocycleDefectReport cocycle_defect(const SqrtBraidingTensor& t, std::size_t samples, std::uint64_t seed) {
  const int d = t.degree();
  if (d < 2) throw InvalidArgument("cocycle check needs degree at least 2");
  const AbGroup g = AbGroup::free(static_cast<std::size_t>(t.rank()));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> coord(-1, 1);
  CocycleDefectReport rep;
  rep.degree = 2 * d;
  auto random_elem = [&] {
    std::vector<i64> c(g.dimension());
    for (auto& x : c) x = coord(rng);
    return g.element(std::move(c));
  };
  const int n = 2 * d;
  for (std::size_t s = 0; s < samples; ++s) {
    // Random composition of n - (p-1) into p parts, p >= 2.
    std::uniform_int_distribution<int> pick_p(2, d);
    int p = pick_p(rng);
    const int total = n - (p - 1);
    std::vector<int> sizes(static_cast<std::size_t>(p), 1);
    for (int extra = total - p; extra > 0; --extra)
      ++sizes[std::uniform_int_distribution<std::size_t>(0, sizes.size() - 1)(rng)];
    std::vector<Cell> parts;
    for (int sz : sizes) {
      std::vector<GroupElement> xs;
      for (int i = 0; i < sz; ++i) xs.push_back(random_elem());
      parts.push_back(Cell::bar(std::move(xs)));
    }
    const Cell c = Cell::join(1, std::move(parts));
    i64 value = 0;
    const Chain b = boundary(c, g);
    for (const auto& [term, v] : b.terms()) {
      bool pure = true;
      try {
        (void)pure_components(term);
      } catch (const InvalidArgument&) {
        pure = false;
      }
      if (pure) value = arith::mod(value + arith::mulmod(v, dcharacter_eval(t, term), t.modulus()), t.modulus());
    }
    ++rep.samples;
    if (value != 0) {
      ++rep.nonzero;
      if (rep.examples.size() < 5) rep.examples.push_back(c);
    }
  }
  return rep;
}

}  // namespace weyl::complex
