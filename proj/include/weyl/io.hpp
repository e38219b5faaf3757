#pragma once

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weyl/error.hpp"
#include "weyl/groupoid.hpp"
#include "weyl/rank2.hpp"
#include "weyl/roots.hpp"
#include "weyl/tensor.hpp"

namespace weyl::io {

using nlohmann::json;

/// "mu^k (mod M)" with k reduced.
inline std::string residue_text(i64 k, i64 M) {
  return "mu^" + std::to_string(arith::mod(k, M)) + " (mod " + std::to_string(M) + ")";
}

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

inline i64 get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<i64>();
}

inline const json& member(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace detail

/// Reads either {"modulus", "rank", "degree", "sqrt_entries": [{"index": [1-based], "exp"}]}
/// or {"modulus", "degree", "rank2_profile": [e_0..e_d]}.
inline SqrtBraidingTensor tensor_from_json(const json& j) {
  using detail::fail;
  using detail::get_int;
  if (!j.is_object()) fail("$", "expected an object");
  const i64 M = get_int(detail::member(j, "modulus", "$"), "$.modulus");
  if (M < 1) fail("$.modulus", "must be positive");
  const i64 d = get_int(detail::member(j, "degree", "$"), "$.degree");
  if (d < 2 || d > 22) fail("$.degree", "must lie in 2..22");
  const bool has_entries = j.contains("sqrt_entries");
  const bool has_profile = j.contains("rank2_profile");
  if (has_entries == has_profile) fail("$", "exactly one of 'sqrt_entries' and 'rank2_profile' is required");
  const RootDatum datum(M);

  if (has_profile) {
    if (j.contains("rank") && get_int(j["rank"], "$.rank") != 2) fail("$.rank", "rank2_profile requires rank 2");
    const json& p = j["rank2_profile"];
    if (!p.is_array()) fail("$.rank2_profile", "expected an array");
    if (p.size() != static_cast<std::size_t>(d) + 1)
      fail("$.rank2_profile", "expected " + std::to_string(d + 1) + " entries, got " + std::to_string(p.size()));
    std::vector<i64> profile;
    for (std::size_t k = 0; k < p.size(); ++k)
      profile.push_back(datum.reduce(get_int(p[k], "$.rank2_profile[" + std::to_string(k) + "]")));
    return SqrtBraidingTensor::from_rank2_profile(datum, profile);
  }

  const i64 n = get_int(detail::member(j, "rank", "$"), "$.rank");
  if (n < 1) fail("$.rank", "must be positive");
  SqrtBraidingTensor t(static_cast<int>(n), static_cast<int>(d), datum);
  const json& es = j["sqrt_entries"];
  if (!es.is_array()) fail("$.sqrt_entries", "expected an array");
  std::set<std::vector<int>> seen;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const std::string path = "$.sqrt_entries[" + std::to_string(e) + "]";
    if (!es[e].is_object()) fail(path, "expected an object");
    const json& idx = detail::member(es[e], "index", path);
    if (!idx.is_array()) fail(path + ".index", "expected an array");
    if (idx.size() != static_cast<std::size_t>(d)) fail(path + ".index", "expected " + std::to_string(d) + " indices");
    std::vector<int> index;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const i64 v = get_int(idx[s], path + ".index[" + std::to_string(s) + "]");
      if (v < 1 || v > n) fail(path + ".index[" + std::to_string(s) + "]", "index out of range 1.." + std::to_string(n));
      index.push_back(static_cast<int>(v - 1));
    }
    if (!seen.insert(index).second) fail(path + ".index", "duplicate index");
    t.set(index, get_int(detail::member(es[e], "exp", path), path + ".exp"));
  }
  return t;
}

inline SqrtBraidingTensor load_tensor(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError(file + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(file + ": malformed JSON: " + e.what());
  }
  try {
    return tensor_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(file + ": " + e.what());
  }
}

/// Full form with the non-zero entries only.
inline json tensor_to_json(const SqrtBraidingTensor& t) {
  json entries = json::array();
  for (std::size_t off = 0; off < t.size(); ++off) {
    if (t.at_flat(off) == 0) continue;
    json idx = json::array();
    for (int i : t.index_of(off)) idx.push_back(i + 1);
    entries.push_back({{"index", idx}, {"exp", t.at_flat(off)}});
  }
  return {{"modulus", t.modulus()}, {"rank", t.rank()}, {"degree", t.degree()}, {"sqrt_entries", entries}};
}

inline std::string key_text(const std::vector<i64>& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
  return s;
}

inline json matrix_json(const GeneralizedCartanMatrix& c) {
  json m = json::array();
  for (int i = 0; i < c.size(); ++i) m.push_back(c.row(i));
  return m;
}

inline json orbit_json(const CartanGraph& g) {
  json objects = json::array();
  json edges = json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    objects.push_back({{"id", a}, {"key", key_text(g.objects[a].key())}, {"cartan", matrix_json(g.objects[a].cartan)}});
    for (int i = 0; i < g.rank; ++i) edges.push_back({{"from", a}, {"reflection", i + 1}, {"to", g.rho(a, i)}});
  }
  return {{"rank", g.rank}, {"objects", objects}, {"edges", edges}};
}

/// Undirected: rho_i is an involution, so each pair is drawn once.
inline std::string orbit_dot(const CartanGraph& g) {
  std::ostringstream os;
  os << "graph weyl_groupoid {\n";
  for (std::size_t a = 0; a < g.size(); ++a) {
    os << "  n" << a << " [label=\"" << a << "\"];\n";
  }
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (int i = 0; i < g.rank; ++i) {
      const std::size_t b = g.rho(a, i);
      if (b < a) continue;
      os << "  n" << a << " -- n" << b << " [label=\"" << i + 1 << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline json dynkin_json(const DynkinDiagram& dd) {
  json v = json::array();
  for (std::size_t i = 0; i < dd.vertex_labels.size(); ++i)
    v.push_back({{"vertex", i + 1}, {"label", residue_text(dd.vertex_labels[i], dd.modulus)}});
  json e = json::array();
  for (const auto& x : dd.edges)
    e.push_back({{"from", x.i + 1}, {"to", x.j + 1}, {"label", residue_text(x.label, dd.modulus)}});
  return {{"modulus", dd.modulus}, {"vertices", v}, {"edges", e}};
}

inline std::string dynkin_dot(const DynkinDiagram& dd) {
  std::ostringstream os;
  os << "graph dynkin {\n";
  for (std::size_t i = 0; i < dd.vertex_labels.size(); ++i)
    os << "  v" << i + 1 << " [label=\"mu^" << dd.vertex_labels[i] << "\", xlabel=\"" << i + 1 << "\"];\n";
  for (const auto& e : dd.edges) os << "  v" << e.i + 1 << " -- v" << e.j + 1 << " [label=\"mu^" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

inline json triangulation_json(const Triangulation& t) {
  json diags = json::array();
  for (const auto& [a, b] : t.diagonals) diags.push_back({a + 1, b + 1});
  json tris = json::array();
  for (const auto& tr : t.triangles) tris.push_back({tr[0] + 1, tr[1] + 1, tr[2] + 1});
  return {{"vertices", t.vertices}, {"diagonals", diags}, {"triangles", tris}};
}

/// Polygon sides solid, diagonals dashed; vertices numbered from 1.
inline std::string triangulation_dot(const Triangulation& t, const std::vector<i64>& quiddity) {
  std::ostringstream os;
  os << "graph triangulation {\n  layout=circo;\n";
  for (std::size_t v = 0; v < t.vertices; ++v)
    os << "  p" << v + 1 << " [label=\"" << v + 1 << " (" << quiddity.at(v) << ")\"];\n";
  for (std::size_t v = 0; v < t.vertices; ++v) os << "  p" << v + 1 << " -- p" << (v + 1) % t.vertices + 1 << ";\n";
  for (const auto& [a, b] : t.diagonals) os << "  p" << a + 1 << " -- p" << b + 1 << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

inline json roots_json(const RootSystem& rs) {
  json objs = json::array();
  for (std::size_t a = 0; a < rs.roots.size(); ++a) objs.push_back({{"object", a}, {"positive", rs.positive(a)}});
  return {{"rank", rs.rank}, {"objects", objs}};
}

}  // namespace weyl::io
