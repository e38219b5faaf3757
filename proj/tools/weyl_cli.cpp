// weyl: Cartan graphs of higher braiding tensors and the abelian complexes A^k_n.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/complex/homology.hpp"
#include "weyl/complex/reference.hpp"
#include "weyl/complex/text.hpp"
#include "weyl/groupoid.hpp"
#include "weyl/identities.hpp"
#include "weyl/io.hpp"
#include "weyl/rank2.hpp"
#include "weyl/roots.hpp"
#include "weyl/rosso.hpp"

namespace {

using weyl::i64;
using weyl::io::json;
namespace cx = weyl::complex;

/// A report came back with failing items.
struct ValidationFailure {};

struct Config {
  std::string format = "text";
  i64 m_max = weyl::kDefaultMMax;
  std::size_t max_objects = weyl::kDefaultMaxObjects;
  int depth_max = weyl::kDefaultRootDepth;
  std::uint64_t seed = 1;

  std::string tensor_file;
  std::string tensor_inline;

  std::vector<int> pair;
  std::string diagnostics;
  std::size_t start = 1;
  std::string cycle;

  int degree = 4;
  i64 verify_m_max = 8;

  std::string expr;
  std::string group;
  std::string lambda;
  std::string args;
  int level = 1;
  int cdegree = 3;
  std::size_t samples = 100;
};

weyl::SqrtBraidingTensor tensor(const Config& c) {
  if (!c.tensor_inline.empty()) {
    try {
      return weyl::io::tensor_from_json(json::parse(c.tensor_inline));
    } catch (const json::parse_error& e) {
      throw weyl::SchemaError(std::string("inline tensor: malformed JSON: ") + e.what());
    }
  }
  if (c.tensor_file.empty()) throw weyl::InvalidArgument("a tensor is required (--tensor FILE or --tensor-json TEXT)");
  return weyl::io::load_tensor(c.tensor_file);
}

std::vector<i64> parse_ints(const std::string& text) {
  std::vector<i64> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    std::istringstream ts(tok);
    i64 v;
    std::string rest;
    if (!(ts >> v) || (ts >> rest)) throw weyl::ParseError("expected comma-separated integers, got '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw weyl::ParseError("expected comma-separated integers, got '" + text + "'");
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void require_format(const Config& c, bool dot_ok) {
  if (c.format == "dot" && !dot_ok) throw weyl::InvalidArgument("this subcommand has no DOT output");
}

std::string matrix_text(const weyl::GeneralizedCartanMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) os << (j ? " " : "") << (m(i, j) >= 0 ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

// ---- Cartan data --------------------------------------------------------

void run_cartan(const Config& c) {
  require_format(c, false);
  const auto t = tensor(c);
  const i64 M = t.modulus();
  int ell = 0, j = 1;
  if (!c.pair.empty()) {
    ell = c.pair[0] - 1;
    j = c.pair[1] - 1;
  }
  json out;
  std::ostringstream text;
  if (t.degree() % 2 == 0) {
    const auto m = weyl::cartan_matrix(t, c.m_max);
    out["cartan"] = weyl::io::matrix_json(m);
    text << matrix_text(m);
  }
  if (!c.pair.empty()) {
    const i64 e = weyl::cartan_entry(t, ell, j, c.m_max);
    out["entry"] = {{"pair", {ell + 1, j + 1}}, {"value", e}};
    text << "c_{" << ell + 1 << "," << j + 1 << "} = " << e << '\n';
  }
  if (!c.diagnostics.empty()) {
    i64 lo = 0, hi = 0;
    const auto dots = c.diagnostics.find("..");
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoll(c.diagnostics);
      } else {
        lo = std::stoll(c.diagnostics.substr(0, dots));
        hi = std::stoll(c.diagnostics.substr(dots + 2));
      }
    } catch (const std::logic_error&) {
      throw weyl::ParseError("--diagnostics expects M or LO..HI");
    }
    json rows = json::array();
    text << "pair (" << ell + 1 << "," << j + 1 << ")\n";
    text << "m  chi(v_m)  chi(w_m)  chi(s_m)  R_m=0\n";
    for (const auto& r : weyl::rosso_diagnostics(t, ell, j, lo, hi)) {
      rows.push_back({{"m", r.m},
                      {"chi_v", weyl::io::residue_text(r.chi_v, M)},
                      {"chi_w", weyl::io::residue_text(r.chi_w, M)},
                      {"chi_s", weyl::io::residue_text(r.chi_s, M)},
                      {"vanishes", r.vanishes()}});
      text << r.m << "  " << weyl::io::residue_text(r.chi_v, M) << "  " << weyl::io::residue_text(r.chi_w, M) << "  "
           << weyl::io::residue_text(r.chi_s, M) << "  " << (r.vanishes() ? "yes" : "no") << '\n';
    }
    out["diagnostics"] = {{"pair", {ell + 1, j + 1}}, {"rows", rows}};
  }
  if (t.degree() % 2 != 0 && c.pair.empty())
    throw weyl::OddDegree(t.degree());
  if (c.format == "json") {
    emit(out);
  } else {
    std::cout << text.str();
  }
}

void run_orbit(const Config& c) {
  const auto g = weyl::generate_cartan_graph(tensor(c), c.m_max, c.max_objects);
  const auto rep = weyl::validate_axioms(g);
  if (c.format == "json") {
    json j = weyl::io::orbit_json(g);
    j["axioms_pass"] = rep.all_pass();
    emit(j);
  } else if (c.format == "dot") {
    std::cout << weyl::io::orbit_dot(g);
  } else {
    std::cout << g.size() << " objects\n";
    for (std::size_t a = 0; a < g.size(); ++a) {
      std::cout << "object " << a << " key " << weyl::io::key_text(g.objects[a].key()) << '\n'
                << matrix_text(g.objects[a].cartan);
      for (int i = 0; i < g.rank; ++i) std::cout << "  rho_" << i + 1 << " -> " << g.rho(a, i) << '\n';
    }
    std::cout << "axioms M1 M2 C1 C2: " << (rep.all_pass() ? "pass" : "FAIL") << '\n';
  }
  if (!rep.all_pass()) throw ValidationFailure{};
}

void run_dynkin(const Config& c) {
  const auto dd = weyl::dynkin_diagram(tensor(c));
  if (c.format == "json") {
    emit(weyl::io::dynkin_json(dd));
  } else if (c.format == "dot") {
    std::cout << weyl::io::dynkin_dot(dd);
  } else {
    for (std::size_t i = 0; i < dd.vertex_labels.size(); ++i)
      std::cout << "vertex " << i + 1 << ": " << weyl::io::residue_text(dd.vertex_labels[i], dd.modulus) << '\n';
    for (const auto& e : dd.edges)
      std::cout << "edge " << e.i + 1 << "-" << e.j + 1 << ": " << weyl::io::residue_text(e.label, dd.modulus) << '\n';
  }
}

weyl::QuiddityCycle quiddity_of(const Config& c) {
  const auto g = weyl::generate_cartan_graph(tensor(c), c.m_max, c.max_objects);
  if (c.start < 1 || c.start > g.size()) throw weyl::InvalidArgument("--start must lie in 1.." + std::to_string(g.size()));
  return weyl::quiddity_cycle(g, c.start - 1);
}

weyl::QuiddityCycle cycle_input(const Config& c) {
  if (!c.cycle.empty()) return parse_ints(c.cycle);
  return quiddity_of(c);
}

std::string join(const std::vector<i64>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

void run_quiddity(const Config& c) {
  require_format(c, false);
  const auto q = quiddity_of(c);
  if (c.format == "json") {
    emit({{"quiddity", q}, {"length", q.size()}});
  } else {
    std::cout << join(q) << '\n';
  }
}

void run_frieze(const Config& c) {
  require_format(c, false);
  const auto q = cycle_input(c);
  const auto rows = weyl::frieze_rows(q);
  if (c.format == "json") {
    emit({{"quiddity", q}, {"rows", rows}});
  } else {
    std::cout << weyl::render_frieze(rows);
  }
}

void run_triangulate(const Config& c) {
  const auto q = cycle_input(c);
  const auto t = weyl::triangulate(q);
  if (c.format == "json") {
    json j = weyl::io::triangulation_json(t);
    j["quiddity"] = q;
    emit(j);
  } else if (c.format == "dot") {
    std::cout << weyl::io::triangulation_dot(t, q);
  } else {
    std::cout << t.vertices << "-gon, " << t.diagonals.size() << " diagonals:";
    for (const auto& [a, b] : t.diagonals) std::cout << " " << a + 1 << "-" << b + 1;
    std::cout << '\n';
  }
}

void run_roots(const Config& c) {
  require_format(c, false);
  const auto g = weyl::generate_cartan_graph(tensor(c), c.m_max, c.max_objects);
  const auto rs = weyl::real_roots(g, c.depth_max);
  const auto rep = weyl::validate_root_axioms(g, rs);
  if (c.format == "json") {
    json j = weyl::io::roots_json(rs);
    j["axioms_pass"] = rep.all_pass();
    emit(j);
  } else {
    for (std::size_t a = 0; a < rs.roots.size(); ++a) {
      const auto pos = rs.positive(a);
      std::cout << "object " << a << ": " << pos.size() << " positive roots:";
      for (const auto& r : pos) {
        std::cout << " (";
        for (std::size_t t = 0; t < r.size(); ++t) std::cout << (t ? "," : "") << r[t];
        std::cout << ")";
      }
      std::cout << '\n';
    }
    std::cout << "axioms R1-R4: " << (rep.all_pass() ? "pass" : "FAIL") << '\n';
  }
  if (!rep.all_pass()) throw ValidationFailure{};
}

void report_identities(const Config& c, const weyl::IdentityReport& rep) {
  if (c.format == "json") {
    json checks = json::array();
    for (const auto& k : rep.checks)
      checks.push_back({{"identity", k.name}, {"m", k.m}, {"holds", k.holds}, {"counterexample", k.counterexample}});
    emit({{"degree", rep.degree}, {"all_hold", rep.all_hold()}, {"checks", checks}});
  } else {
    std::cout << "degree " << rep.degree << '\n';
    for (const auto& k : rep.checks) {
      std::cout << (k.holds ? "ok   " : "FAIL ") << "m=" << k.m << "  " << k.name;
      if (!k.holds) std::cout << "  (differs at " << k.counterexample << ")";
      std::cout << '\n';
    }
    std::cout << (rep.all_hold() ? "all identities hold" : "identity check FAILED") << '\n';
  }
  if (!rep.all_hold()) throw ValidationFailure{};
}

// ---- abelian complex ------------------------------------------------------

weyl::AbGroup group_or(const Config& c, const char* fallback) {
  return weyl::AbGroup::parse(c.group.empty() ? fallback : c.group);
}

json chain_json(const weyl::AbGroup& g, const cx::Chain& x) {
  json terms = json::array();
  std::vector<std::pair<std::string, i64>> sorted;
  for (const auto& [cell, v] : x.terms()) sorted.emplace_back(cx::format_cell(g, cell), v);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [s, v] : sorted) terms.push_back({{"cell", s}, {"coeff", v}});
  return {{"text", cx::format_chain(g, x)}, {"terms", terms}};
}

void run_boundary(const Config& c) {
  require_format(c, false);
  const auto g = group_or(c, "Z^6");
  const auto x = cx::parse_chain(g, c.expr);
  const auto b = cx::boundary(x, g);
  if (c.format == "json") {
    emit({{"group", g.describe()}, {"input", cx::format_chain(g, x)}, {"boundary", chain_json(g, b)}});
  } else {
    std::cout << cx::format_chain(g, b) << '\n';
  }
}

void run_verify_table(const Config& c) {
  require_format(c, false);
  const auto rows = cx::verify_table1();
  bool ok = true;
  json arr = json::array();
  for (const auto& r : rows) {
    ok = ok && r.status != cx::RowStatus::mismatch;
    arr.push_back({{"generator", r.row.generator},
                   {"printed", r.row.printed},
                   {"computed", r.computed},
                   {"status", cx::to_string(r.status)},
                   {"note", r.row.note}});
    if (c.format != "json") {
      std::cout << cx::to_string(r.status) << "  d" << r.row.generator << " = " << r.computed << '\n';
      if (r.status != cx::RowStatus::match) std::cout << "    printed: " << r.row.printed << '\n';
      if (!r.row.note.empty()) std::cout << "    note: " << r.row.note << '\n';
    }
  }
  if (c.format == "json") emit({{"rows", arr}, {"all_consistent", ok}});
  if (!ok) throw ValidationFailure{};
}

void run_witnesses(const Config& c) {
  require_format(c, false);
  const auto res = cx::verify_lemma_witnesses();
  std::size_t exact = 0, repaired = 0;
  json arr = json::array();
  for (const auto& r : res) {
    exact += r.exact ? 1 : 0;
    repaired += r.repaired ? 1 : 0;
    arr.push_back({{"name", r.name},
                   {"degree", r.degree},
                   {"exact", r.exact},
                   {"modulo_degenerate", r.modulo_degenerate},
                   {"repaired", r.repaired},
                   {"completion_terms", r.completion_terms},
                   {"difference", r.difference},
                   {"note", r.note}});
    if (c.format != "json") {
      std::cout << (r.exact ? "exact     " : "NOT EXACT ") << r.name << " (degree " << r.degree << ")";
      if (!r.exact) {
        std::cout << "\n    d(witness) - claimed = " << r.difference
                  << "\n    modulo degenerate cells: " << (r.modulo_degenerate ? "holds" : "fails")
                  << "\n    repaired with " << r.completion_terms << " degenerate cells: " << (r.repaired ? "exact" : "FAILS");
        if (!r.note.empty()) std::cout << "\n    note: " << r.note;
      }
      std::cout << '\n';
    }
  }
  if (c.format == "json") {
    emit({{"witnesses", arr}, {"exact", exact}, {"repaired", repaired}, {"total", res.size()}});
  } else {
    std::cout << exact << "/" << res.size() << " exact as stated, " << repaired << "/" << res.size()
              << " exact after repair\n";
  }
  if (exact != res.size()) throw ValidationFailure{};
}

std::vector<weyl::GroupElement> element_list(const weyl::AbGroup& g, const std::string& text) {
  std::vector<weyl::GroupElement> out;
  for (const auto& piece : cx::detail::split_top(cx::detail::strip_spaces(text), ','))
    out.push_back(cx::parse_element(g, piece));
  return out;
}

void run_symcycle(const Config& c) {
  require_format(c, false);
  const auto g = group_or(c, "Z^6");
  cx::Composition lambda;
  for (i64 v : parse_ints(c.lambda)) lambda.push_back(static_cast<int>(v));
  const auto args = element_list(g, c.args);
  const auto x = cx::symmetrized_cycle(args, lambda);
  const bool cycle = cx::boundary(x, g).is_zero();
  if (c.format == "json") {
    emit({{"cycle", chain_json(g, x)}, {"boundary_zero", cycle}});
  } else {
    std::cout << cx::format_chain(g, x) << '\n' << "boundary: " << (cycle ? "0" : "NONZERO") << '\n';
  }
  if (!cycle) throw ValidationFailure{};
}

void run_membership(const Config& c) {
  require_format(c, false);
  const auto g = group_or(c, "Z/2");
  const auto x = cx::parse_chain(g, c.expr);
  const auto r = cx::boundary_membership(x, g, c.level);
  if (c.format == "json") {
    json j{{"group", g.describe()}, {"level", c.level}, {"is_boundary", r.is_boundary},
           {"source_cells", r.source_cells}, {"target_cells", r.target_cells}};
    if (r.is_boundary) j["witness"] = chain_json(g, r.witness);
    emit(j);
  } else {
    std::cout << (r.is_boundary ? "boundary" : "not a boundary") << " in A^" << c.level << " over " << g.describe()
              << " (" << r.source_cells << " x " << r.target_cells << " cells)\n";
    if (r.is_boundary) std::cout << "witness: " << cx::format_chain(g, r.witness) << '\n';
  }
}

void run_homology(const Config& c) {
  require_format(c, false);
  const auto g = group_or(c, "Z/2");
  const auto h = cx::homology(g, c.level, c.cdegree);
  const std::string name = "H^" + std::to_string(c.level) + "_" + std::to_string(c.cdegree) + "(" + g.describe() + ")";
  if (c.format == "json") {
    emit({{"group", g.describe()}, {"level", c.level}, {"degree", c.cdegree}, {"free_rank", h.free_rank},
          {"torsion", h.torsion}, {"text", h.describe()}});
  } else {
    std::cout << name << " = " << h.describe() << '\n';
  }
}

void run_cocycle(const Config& c) {
  require_format(c, false);
  const auto rep = cx::cocycle_defect(tensor(c), c.samples, c.seed);
  const weyl::AbGroup g = weyl::AbGroup::free(static_cast<std::size_t>(tensor(c).rank()));
  if (c.format == "json") {
    json ex = json::array();
    for (const auto& e : rep.examples) ex.push_back(cx::format_cell(g, e));
    emit({{"degree", rep.degree}, {"samples", rep.samples}, {"nonzero", rep.nonzero}, {"examples", ex}});
  } else {
    std::cout << "degree " << rep.degree << ": " << rep.nonzero << "/" << rep.samples
              << " sampled boundaries with nonzero value\n";
    for (const auto& e : rep.examples) std::cout << "  " << cx::format_cell(g, e) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan graphs of higher braiding tensors and abelian cell complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--m-max", cfg.m_max, "Largest m searched for a Cartan entry")->check(CLI::NonNegativeNumber);
  app.add_option("--max-objects", cfg.max_objects, "Object limit for orbit closure");
  app.add_option("--depth-max", cfg.depth_max, "Composition limit for real roots");
  app.add_option("--seed", cfg.seed, "Seed for randomized reports");

  auto tensor_opts = [&](CLI::App* s) {
    s->add_option("--tensor", cfg.tensor_file, "Tensor JSON file");
    s->add_option("--tensor-json", cfg.tensor_inline, "Tensor JSON text");
  };

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and Rosso diagnostics");
  tensor_opts(cartan);
  cartan->add_option("--pair", cfg.pair, "Pair ell j (1-based)")->expected(2);
  cartan->add_option("--diagnostics", cfg.diagnostics, "m range LO..HI for chi(v), chi(w), chi(s)");

  auto* orbit = app.add_subcommand("orbit", "Cartan graph closure");
  tensor_opts(orbit);
  auto* dynkin = app.add_subcommand("dynkin", "Dynkin diagram of a degree-2 tensor");
  tensor_opts(dynkin);
  auto* quiddity = app.add_subcommand("quiddity", "Quiddity cycle of a rank-2 Weyl groupoid");
  tensor_opts(quiddity);
  quiddity->add_option("--start", cfg.start, "Start object (1-based)");
  auto* frieze = app.add_subcommand("frieze", "Frieze pattern of a quiddity cycle");
  tensor_opts(frieze);
  frieze->add_option("--cycle", cfg.cycle, "Quiddity cycle, comma separated");
  auto* tri = app.add_subcommand("triangulate", "Polygon triangulation of a quiddity cycle");
  tensor_opts(tri);
  tri->add_option("--cycle", cfg.cycle, "Quiddity cycle, comma separated");
  auto* roots = app.add_subcommand("roots", "Real roots and root system axioms");
  tensor_opts(roots);

  auto* verify = app.add_subcommand("verify", "Symbolic identity checks");
  verify->require_subcommand(1);
  auto* recursion = verify->add_subcommand("recursion", "Recursion for (1-chi(v_m))(1-chi(w_m))");
  auto* divisibility = verify->add_subcommand("divisibility", "chi(v_m) = g_m^(m+1) and its consequences");
  for (auto* s : {recursion, divisibility}) {
    s->add_option("--degree", cfg.degree, "Tensor degree d")->required();
    s->add_option("--m-max", cfg.verify_m_max, "Largest m checked");
  }

  auto* cplx = app.add_subcommand("complex", "Abelian cell complexes A^k_n");
  cplx->require_subcommand(1);
  auto* bnd = cplx->add_subcommand("boundary", "Boundary of a chain");
  bnd->add_option("--expr", cfg.expr, "Chain, e.g. \"[a,b|c]\"")->required();
  bnd->add_option("--group", cfg.group, "Group, default Z^6");
  auto* vt = cplx->add_subcommand("verify-table", "Boundaries of the low-degree generators");
  auto* wit = cplx->add_subcommand("witnesses", "Explicit bounding chains of the symmetrized-cycle identities");
  auto* sym = cplx->add_subcommand("symcycle", "Symmetrized cycle");
  sym->add_option("--lambda", cfg.lambda, "Composition, e.g. 2,2")->required();
  sym->add_option("--args", cfg.args, "Arguments, e.g. a,b")->required();
  sym->add_option("--group", cfg.group, "Group, default Z^6");
  auto* mem = cplx->add_subcommand("membership", "Decide whether a chain is a boundary");
  mem->add_option("--expr", cfg.expr, "Chain")->required();
  mem->add_option("--group", cfg.group, "Finite group, default Z/2");
  mem->add_option("--level", cfg.level, "Level k");
  auto* hom = cplx->add_subcommand("homology", "H^k_n of a finite group");
  hom->add_option("--group", cfg.group, "Finite group, default Z/2");
  hom->add_option("--level", cfg.level, "Level k");
  hom->add_option("--degree", cfg.cdegree, "Degree n");
  auto* coc = cplx->add_subcommand("cocycle", "Sampled cocycle defect of the pure-cell cochain");
  tensor_opts(coc);
  coc->add_option("--samples", cfg.samples, "Number of random cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cartan) run_cartan(cfg);
    else if (*orbit) run_orbit(cfg);
    else if (*dynkin) run_dynkin(cfg);
    else if (*quiddity) run_quiddity(cfg);
    else if (*frieze) run_frieze(cfg);
    else if (*tri) run_triangulate(cfg);
    else if (*roots) run_roots(cfg);
    else if (*recursion) report_identities(cfg, weyl::verify_recursion(cfg.degree, cfg.verify_m_max));
    else if (*divisibility) report_identities(cfg, weyl::verify_divisibility(cfg.degree, cfg.verify_m_max));
    else if (*bnd) run_boundary(cfg);
    else if (*vt) run_verify_table(cfg);
    else if (*wit) run_witnesses(cfg);
    else if (*sym) run_symcycle(cfg);
    else if (*mem) run_membership(cfg);
    else if (*hom) run_homology(cfg);
    else if (*coc) run_cocycle(cfg);
  } catch (const ValidationFailure&) {
    return 1;
  } catch (const weyl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
