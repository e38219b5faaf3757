#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weyl/arith.hpp"
#include "weyl/error.hpp"
#include "weyl/rosso.hpp"
#include "weyl/tensor.hpp"

namespace weyl {

inline constexpr std::size_t kDefaultMaxObjects = 100000;

/// Columns of the simple reflection sigma_ell: sigma_ell(alpha_i) = alpha_i - c_{ell,i} alpha_ell.
inline std::vector<std::vector<i64>> reflection_images(int rank, int ell, std::span<const i64> c_row) {
  if (ell < 0 || ell >= rank) throw InvalidArgument("reflection index out of range");
  if (c_row.size() != static_cast<std::size_t>(rank)) throw InvalidArgument("Cartan row has wrong length");
  if (c_row[static_cast<std::size_t>(ell)] != 2) throw InvalidArgument("Cartan row must have c_{ell,ell} = 2");
  for (int i = 0; i < rank; ++i)
    if (i != ell && c_row[static_cast<std::size_t>(i)] > 0) throw InvalidArgument("Cartan row has a positive off-diagonal entry");
  std::vector<std::vector<i64>> img(static_cast<std::size_t>(rank), std::vector<i64>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    auto& col = img[static_cast<std::size_t>(i)];
    col[static_cast<std::size_t>(i)] += 1;
    col[static_cast<std::size_t>(ell)] -= c_row[static_cast<std::size_t>(i)];
  }
  return img;
}

namespace detail {

/// Visits every (k_1..k_d, coefficient) with coefficient = prod_t img[i_t][k_t] != 0.
template <class Fn>
void expand_tensor_power(const std::vector<std::vector<i64>>& img, std::span<const int> index, Fn&& fn) {
  const int d = static_cast<int>(index.size());
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int t, i64 coeff) -> void {
    if (t == d) {
      fn(std::span<const int>(k), coeff);
      return;
    }
    const auto& col = img[static_cast<std::size_t>(index[static_cast<std::size_t>(t)])];
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (col[r] == 0) continue;
      k[static_cast<std::size_t>(t)] = static_cast<int>(r);
      self(self, t + 1, arith::mul(coeff, col[r]));
    }
  };
  rec(rec, 0, 1);
}

}  // namespace detail

/// sigma_ell applied to the sqrt-exponent tensor:
/// new[i_1..i_d] = sum_k old[k_1..k_d] prod_t sigma_ell(alpha_{i_t})_{k_t} (mod M).
inline SqrtBraidingTensor reflect(const SqrtBraidingTensor& t, int ell, std::span<const i64> c_row) {
  const auto img = reflection_images(t.rank(), ell, c_row);
  const i64 M = t.modulus();
  SqrtBraidingTensor out(t.rank(), t.degree(), t.datum());
  for (std::size_t off = 0; off < t.size(); ++off) {
    const auto index = t.index_of(off);
    i64 acc = 0;
    detail::expand_tensor_power(img, index, [&](std::span<const int> k, i64 coeff) {
      acc = arith::mod(acc + arith::mulmod(coeff, t.at(k), M), M);
    });
    out.set_flat(off, acc);
  }
  return out;
}

/// sigma_ell^{(x)d} acting on an exact integer vector of (Z^n)^{(x)d}, flat layout as in
/// SqrtBraidingTensor.
inline std::vector<i64> reflect_vector(int rank, int degree, std::span<const i64> vec, int ell,
                                       std::span<const i64> c_row) {
  const auto img = reflection_images(rank, ell, c_row);
  const SqrtBraidingTensor layout(rank, degree, RootDatum(1));
  if (vec.size() != layout.size()) throw InvalidArgument("vector size differs from n^d");
  std::vector<i64> out(vec.size(), 0);
  for (std::size_t off = 0; off < vec.size(); ++off) {
    if (vec[off] == 0) continue;
    const auto index = layout.index_of(off);
    detail::expand_tensor_power(img, index, [&](std::span<const int> k, i64 coeff) {
      auto& slot = out[layout.offset(k)];
      slot = arith::add(slot, arith::mul(coeff, vec[off]));
    });
  }
  return out;
}

/// Expands sum_k (t_k/2) gamma_k for the pair (ell, j) into the full tensor basis,
/// keeping doubled coordinates.
inline std::vector<i64> gamma_to_full(int rank, const GammaVector& v, int ell, int j) {
  const int d = v.degree();
  if (ell == j) throw InvalidArgument("gamma_to_full requires ell != j");
  const SqrtBraidingTensor layout(rank, d, RootDatum(1));
  std::vector<i64> out(layout.size(), 0);
  std::vector<int> index(static_cast<std::size_t>(d));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    for (int s = 0; s < d; ++s) index[static_cast<std::size_t>(s)] = (mask >> (d - 1 - s)) & 1u ? j : ell;
    out[layout.offset(index)] = v.doubled[static_cast<std::size_t>(__builtin_popcount(mask))];
  }
  return out;
}

struct CartanGraphObject {
  SqrtBraidingTensor tensor;
  GeneralizedCartanMatrix cartan;

  /// Flattened sqrt-exponent tensor; determines the object.
  const std::vector<i64>& key() const noexcept { return tensor.flat(); }
};

/// Objects with their Cartan matrices and the reflection maps rho_i, stored as
/// edges[a][i] = rho_i(a).
struct CartanGraph {
  int rank = 0;
  std::vector<CartanGraphObject> objects;
  std::vector<std::vector<std::size_t>> edges;

  std::size_t size() const noexcept { return objects.size(); }
  std::size_t rho(std::size_t a, int i) const { return edges.at(a).at(static_cast<std::size_t>(i)); }
};

struct AxiomCheck {
  std::string axiom;
  std::size_t object = 0;
  int index = -1;
  bool ok = true;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.ok ? 0 : 1;
    return n;
  }
};

/// Itemized (M1), (M2) per object and (C1), (C2) per edge.
inline AxiomReport validate_axioms(const CartanGraph& g) {
  AxiomReport rep;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& c = g.objects[a].cartan;
    rep.checks.push_back({"M1", a, -1, c.satisfies_m1(), {}});
    rep.checks.push_back({"M2", a, -1, c.satisfies_m2(), {}});
    for (int i = 0; i < g.rank; ++i) {
      const std::size_t b = g.rho(a, i);
      const bool c1 = b < g.size() && g.rho(b, i) == a;
      rep.checks.push_back({"C1", a, i, c1, c1 ? "" : "rho_i(rho_i(a)) != a"});
      bool c2 = b < g.size();
      for (int j = 0; c2 && j < g.rank; ++j) c2 = c(i, j) == g.objects[b].cartan(i, j);
      rep.checks.push_back({"C2", a, i, c2, c2 ? "" : "c^a_{ij} != c^{rho_i(a)}_{ij}"});
    }
  }
  return rep;
}

/// Breadth-first closure of {T0} under all rho_ell; objects are numbered in
/// discovery order and reflections are tried in index order.
inline CartanGraph generate_cartan_graph(const SqrtBraidingTensor& t0, i64 m_max = kDefaultMMax,
                                         std::size_t max_objects = kDefaultMaxObjects) {
  if (t0.degree() % 2 != 0) throw OddDegree(t0.degree());
  CartanGraph g;
  g.rank = t0.rank();
  std::map<std::vector<i64>, std::size_t> index;

  auto add = [&](SqrtBraidingTensor t) -> std::size_t {
    auto it = index.find(t.flat());
    if (it != index.end()) return it->second;
    if (g.objects.size() >= max_objects)
      throw ObjectLimitExceeded("Cartan graph exceeds " + std::to_string(max_objects) +
                                " objects (possibly infinite Weyl groupoid)");
    GeneralizedCartanMatrix c = cartan_matrix(t, m_max);
    const std::size_t id = g.objects.size();
    index.emplace(t.flat(), id);
    g.objects.push_back({std::move(t), std::move(c)});
    g.edges.emplace_back(static_cast<std::size_t>(g.rank), 0);
    return id;
  };

  add(t0);
  for (std::size_t a = 0; a < g.objects.size(); ++a) {
    for (int i = 0; i < g.rank; ++i) {
      const auto row = g.objects[a].cartan.row(i);
      SqrtBraidingTensor next = reflect(g.objects[a].tensor, i, row);
      const std::size_t b = add(std::move(next));
      g.edges[a][static_cast<std::size_t>(i)] = b;
    }
  }

  const AxiomReport rep = validate_axioms(g);
  if (!rep.all_pass()) throw Error("internal error: generated Cartan graph violates the Cartan graph axioms");
  return g;
}

struct DynkinEdge {
  int i = 0;
  int j = 0;
  /// mu-exponent of q_ij q_ji.
  i64 label = 0;
  bool operator==(const DynkinEdge&) const = default;
};

/// Vertices labelled by the mu-exponent of q_ii; an edge (i,j) whenever q_ij q_ji != 1.
struct DynkinDiagram {
  i64 modulus = 1;
  std::vector<i64> vertex_labels;
  std::vector<DynkinEdge> edges;
  bool operator==(const DynkinDiagram&) const = default;
};

inline DynkinDiagram dynkin_diagram(const SqrtBraidingTensor& t) {
  if (t.degree() != 2) throw InvalidArgument("Dynkin diagrams are defined for degree-2 tensors");
  const i64 M = t.modulus();
  DynkinDiagram dd;
  dd.modulus = M;
  for (int i = 0; i < t.rank(); ++i) {
    const int ii[2] = {i, i};
    dd.vertex_labels.push_back(arith::mod(2 * t.at(ii), M));
  }
  for (int i = 0; i < t.rank(); ++i) {
    for (int j = i + 1; j < t.rank(); ++j) {
      const int ij[2] = {i, j};
      const int ji[2] = {j, i};
      const i64 label = arith::mod(2 * (t.at(ij) + t.at(ji)), M);
      if (label != 0) dd.edges.push_back({i, j, label});
    }
  }
  return dd;
}

}  // namespace weyl
