// Copyright 2026 The pvlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pvlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "pvlab/diagram.hpp"
#include "pvlab/errors.hpp"
#include "pvlab/rootsys.hpp"

namespace pvlab::cli {

namespace {

constexpr const char* kDiagramGrammar =
    "DIAGRAM := FAMILY RANK '[' INDEX (',' INDEX)* ']'   e.g. D9[2,3,5,8]\n"
    "FAMILY  := A | B | C | D | E | F | G";

struct Format {
  bool json = false;
  bool markdown = false;
  bool quiet = false;
};

struct Output {
  Json results;
  std::string text;
  std::string markdown;
};

Json rat(const Rational& q) { return to_string(q); }

template <typename T>
Json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

std::string set_text(const std::vector<int>& xs) { return "{" + join(xs) + "}"; }

std::string verdict_text(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "unknown"; }

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

Json split_json(const AdjacentSplit& s) {
  return Json{{"alpha1", s.alpha1}, {"alpha2", s.alpha2}, {"psi1", s.psi1},
              {"psi2", s.psi2},     {"circled1", s.circled1}, {"circled2", s.circled2}};
}

std::string row_constraints(Table1Row row) {
  switch (row) {
    case Table1Row::A: return "p2 > p1 >= 0";
    case Table1Row::B: return "p2 > p1, 2p3 = p1, p3 >= 0";
    case Table1Row::C: return "p2 > p1, 2p3 = p1 + 1, p3 > 0, p2 odd";
    case Table1Row::D1: return "p2 > p1, 2p3 = p1 + 1, p3 >= 2, p2 even";
    case Table1Row::D2: return "p2 >= 2, p1 = p2 - 1, p2 even";
    case Table1Row::D3: return "p1 = 1, p2 > 1";
    default: return "-";
  }
}

std::string param_cell(const Table1Family& t, std::size_t i) {
  return i < t.params.size() ? std::to_string(t.params[i]) : "";
}

}  // namespace

Json to_json(const Table1Family& t) {
  return Json{{"row", to_string(t.row)}, {"params", t.params}, {"diagram", render_compact(t.diagram)}};
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["diagram"] = render_compact(r.diagram);
  j["method"] = to_string(r.method);
  j["seed"] = r.seed;
  const Verdicts& v = r.verdicts;
  j["verdicts"] = Json{{"prehomogeneous", opt(v.prehomogeneous)},
                       {"regular", opt(v.regular)},
                       {"n_invariants", opt(v.n_invariants)},
                       {"one_irreducible", opt(v.one_irreducible)},
                       {"q_irreducible", opt(v.q_irreducible)},
                       {"completely_q_reducible", opt(v.completely_q_reducible)}};
  j["table1_match"] = r.table1_match ? to_json(*r.table1_match) : Json(nullptr);
  j["adjacent_split"] = r.adjacent_split ? split_json(*r.adjacent_split) : Json(nullptr);
  if (r.oracle) {
    const OracleWitness& w = *r.oracle;
    Json o{{"dim_v", w.dim_v},
           {"dim_algebra", w.dim_algebra},
           {"n_components", w.n_components},
           {"generic_point", vector_json(w.generic_point)},
           {"orbit_rank", w.orbit_rank},
           {"isotropy_dim", w.isotropy_dim}};
    o["regular_subspace"] = opt(w.regular_subspace);
    o["non_reductive"] = w.non_reductive ? Json{{"isotropy_dim", w.non_reductive->isotropy_dim},
                                                {"form_determinant", rat(w.non_reductive->form_determinant)}}
                                         : Json(nullptr);
    o["q_partition"] = opt(w.q_partition);
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  return j;
}

Json to_json(const Grading& g) {
  Json levels = Json::array();
  std::size_t total = 0;
  for (const auto& [lvl, dim] : g.dim_by_level) {
    levels.push_back(Json{{"level", lvl}, {"dim", dim}});
    total += dim;
  }
  return Json{{"diagram", render_compact(g.diagram)},
              {"h_theta", vector_json(g.h_theta)},
              {"levels", levels},
              {"dim_g", total}};
}

Json to_json(const Component& c) {
  Json hw = Json::array(), rules = Json::array();
  for (const auto& [b, val] : c.highest_weight) hw.push_back(Json{{"beta", b}, {"value", val}});
  for (const auto& [b, val] : c.rules) rules.push_back(Json{{"beta", b}, {"value", val}});
  return Json{{"alpha", c.alpha},
              {"name", "V" + std::to_string(c.alpha)},
              {"dim", c.dim},
              {"j_alpha", c.j_alpha},
              {"highest_weight", hw},
              {"rules", rules}};
}

Json to_json(const FiltrationReport& f) {
  Json stages = Json::array();
  for (const auto& s : f.stages)
    stages.push_back(Json{{"components", s.components},
                          {"names", s.names},
                          {"dim", s.dim},
                          {"algebra_dim", s.algebra_dim},
                          {"isotropy_dim", s.isotropy_dim},
                          {"reductive", s.reductive},
                          {"form_determinant", rat(s.form_determinant)}});
  return Json{{"seed", f.seed}, {"complete", f.complete}, {"stages", stages}};
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("PV_LAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t v = 0;
  std::string s(env);
  std::size_t pos = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.front() == '-') throw InvalidParameter("PV_LAB_SEED must be a non-negative integer");
  return v;
}

namespace {

// ---------------------------------------------------------------- commands

std::string component_line(const Component& c) {
  std::ostringstream os;
  os << "  V" << c.alpha << "  dim " << c.dim << "  highest weight:";
  if (c.highest_weight.empty()) os << " trivial";
  for (const auto& [b, val] : c.highest_weight) os << " " << b << ":" << val;
  return os.str();
}

Output cmd_describe(const WeightedDiagram& d) {
  const RootSystem rs(d.type());
  const Grading g = compute_grading(d, rs);
  const auto comps = components(d, rs);
  const auto pieces = rs.connected_components(d.theta());
  Output o;
  Json theta_parts = Json::array();
  std::string theta_line;
  for (const auto& p : pieces) {
    theta_parts.push_back(Json{{"type", p.label()}, {"nodes", p.nodes}});
    theta_line += " " + p.label() + set_text(p.nodes);
  }
  const std::size_t dim_l = g.dim_by_level.at(0);
  const std::size_t dim_v = g.dim_by_level.contains(1) ? g.dim_by_level.at(1) : 0;
  Json cj = Json::array();
  for (const auto& c : comps) cj.push_back(to_json(c));
  o.results = Json{{"diagram", render_compact(d)}, {"type", d.type().name()}, {"rank", d.rank()},
                   {"circled", d.circled()}, {"theta", d.theta()}, {"theta_components", theta_parts},
                   {"ascii", render_ascii(d)}, {"dim_g", to_json(g)["dim_g"]}, {"dim_l", dim_l},
                   {"dim_v", dim_v}, {"components", cj}};
  std::ostringstream t;
  t << render_compact(d) << "\n" << render_ascii(d) << "\n";
  t << "type " << d.type().name() << ", dim g = " << o.results["dim_g"].get<std::size_t>() << "\n";
  t << "circled: " << join(d.circled(), ", ") << "\n";
  t << "theta components:" << (theta_line.empty() ? " none" : theta_line) << "\n";
  t << "dim l = " << dim_l << ", dim V = " << dim_v << "\n";
  t << "components:\n";
  for (const auto& c : comps) t << component_line(c) << "\n";
  o.text = t.str();
  std::ostringstream m;
  m << "## " << render_compact(d) << "\n\n```\n" << render_ascii(d) << "\n```\n\n";
  m << "| component | dim | highest weight |\n|---|---|---|\n";
  for (const auto& c : comps) {
    std::string hw;
    for (const auto& [b, val] : c.highest_weight) hw += (hw.empty() ? "" : ", ") + std::to_string(b) + ":" + std::to_string(val);
    m << "| V" << c.alpha << " | " << c.dim << " | " << hw << " |\n";
  }
  o.markdown = m.str();
  return o;
}

Output cmd_grade(const WeightedDiagram& d) {
  const Grading g = compute_grading(d);
  Output o;
  o.results = to_json(g);
  std::ostringstream t, m;
  t << render_compact(d) << "\nH_theta:";
  for (const auto& x : g.h_theta) t << " " << to_string(x);
  t << "\n";
  m << "## Grading of " << render_compact(d) << "\n\n| level | dim |\n|---|---|\n";
  for (const auto& [lvl, dim] : g.dim_by_level) {
    t << "level " << lvl << ": " << dim << "\n";
    m << "| " << lvl << " | " << dim << " |\n";
  }
  t << "dim g = " << o.results["dim_g"].get<std::size_t>() << "\n";
  o.text = t.str();
  o.markdown = m.str();
  return o;
}

Output cmd_components(const WeightedDiagram& d) {
  const auto comps = components(d);
  Output o;
  Json cj = Json::array();
  std::ostringstream t, m;
  t << render_compact(d) << "\n";
  m << "## Components of " << render_compact(d) << "\n\n| component | dim | neighbours | highest weight | rule R |\n|---|---|---|---|---|\n";
  for (const auto& c : comps) {
    cj.push_back(to_json(c));
    t << component_line(c) << "\n";
    std::string hw, rr;
    for (const auto& [b, val] : c.highest_weight) hw += (hw.empty() ? "" : ", ") + std::to_string(b) + ":" + std::to_string(val);
    for (const auto& [b, val] : c.rules) rr += (rr.empty() ? "" : ", ") + std::to_string(b) + ":" + std::to_string(val);
    t << "    neighbours " << set_text(c.j_alpha) << "  rule R " << (rr.empty() ? "-" : rr) << "\n";
    m << "| V" << c.alpha << " | " << c.dim << " | " << join(c.j_alpha) << " | " << hw << " | " << rr << " |\n";
  }
  o.results = Json{{"diagram", render_compact(d)}, {"components", cj}};
  o.text = t.str();
  o.markdown = m.str();
  return o;
}

Output cmd_subdiagram(const WeightedDiagram& d, const std::vector<int>& gamma) {
  const Subdiagram s = subdiagram(d, gamma);
  Output o;
  Json pieces = Json::array();
  std::ostringstream t, m;
  t << "subdiagram of " << render_compact(d) << " for gamma = " << set_text(s.gamma) << "\n";
  t << "psi_gamma = " << set_text(s.psi_gamma) << "\n";
  t << "theta_gamma = " << set_text(s.theta_gamma) << "\n";
  m << "## Subdiagram of " << render_compact(d) << " for " << set_text(s.gamma) << "\n\n";
  for (std::size_t i = 0; i < s.pieces.size(); ++i) {
    const auto& p = s.pieces[i];
    const std::string pic = render_ascii(p.diagram);
    pieces.push_back(Json{{"type", p.segment.label()},
                          {"nodes", p.segment.order},
                          {"diagram", render_compact(p.diagram)},
                          {"ascii", pic}});
    t << "piece " << i + 1 << ": " << render_compact(p.diagram) << "  nodes " << set_text(p.segment.order) << "\n"
      << pic << "\n";
    m << "### " << render_compact(p.diagram) << " on nodes " << set_text(p.segment.order) << "\n\n```\n"
      << pic << "\n```\n\n";
  }
  o.results = Json{{"diagram", render_compact(d)}, {"gamma", s.gamma},        {"psi_gamma", s.psi_gamma},
                   {"theta_gamma", s.theta_gamma}, {"pieces", pieces}};
  o.text = t.str();
  o.markdown = m.str();
  return o;
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream t;
  const Verdicts& v = r.verdicts;
  t << render_compact(r.diagram) << "  (method " << to_string(r.method) << ", seed " << r.seed << ")\n";
  t << "  prehomogeneous: " << verdict_text(v.prehomogeneous) << "\n";
  t << "  regular: " << verdict_text(v.regular) << "\n";
  t << "  fundamental invariants: " << (v.n_invariants ? std::to_string(*v.n_invariants) : "unknown") << "\n";
  t << "  1-irreducible: " << verdict_text(v.one_irreducible) << "\n";
  t << "  Q-irreducible: " << verdict_text(v.q_irreducible) << "\n";
  t << "  completely Q-reducible: " << verdict_text(v.completely_q_reducible) << "\n";
  if (r.table1_match)
    t << "  table row: " << to_string(r.table1_match->row) << " params (" << join(r.table1_match->params, ", ")
      << ") as " << render_compact(r.table1_match->diagram) << "\n";
  if (r.adjacent_split)
    t << "  adjacent circles " << r.adjacent_split->alpha1 << "," << r.adjacent_split->alpha2 << ": psi1 = "
      << set_text(r.adjacent_split->psi1) << ", psi2 = " << set_text(r.adjacent_split->psi2) << "\n";
  if (r.oracle) {
    const OracleWitness& w = *r.oracle;
    t << "  dim V = " << w.dim_v << ", dim l = " << w.dim_algebra << ", orbit rank " << w.orbit_rank
      << ", isotropy dim " << w.isotropy_dim << "\n";
    if (w.regular_subspace) t << "  regular proper subspace from circles " << set_text(*w.regular_subspace) << "\n";
    if (w.non_reductive)
      t << "  non-reductive isotropy: form determinant " << to_string(w.non_reductive->form_determinant) << "\n";
  }
  return t.str();
}

std::string report_markdown(const ClassificationReport& r) {
  std::ostringstream m;
  const Verdicts& v = r.verdicts;
  m << "## " << render_compact(r.diagram) << "\n\n| verdict | value |\n|---|---|\n";
  m << "| prehomogeneous | " << verdict_text(v.prehomogeneous) << " |\n";
  m << "| regular | " << verdict_text(v.regular) << " |\n";
  m << "| fundamental invariants | " << (v.n_invariants ? std::to_string(*v.n_invariants) : "unknown") << " |\n";
  m << "| 1-irreducible | " << verdict_text(v.one_irreducible) << " |\n";
  m << "| Q-irreducible | " << verdict_text(v.q_irreducible) << " |\n";
  m << "| completely Q-reducible | " << verdict_text(v.completely_q_reducible) << " |\n";
  m << "\nmethod " << to_string(r.method) << ", seed " << r.seed << "\n";
  return m.str();
}

Output cmd_classify(const WeightedDiagram& d, Method mode, std::uint64_t seed) {
  const ClassificationReport r = classify(d, mode, seed);
  return Output{Json{{"report", to_json(r)}}, report_text(r), report_markdown(r)};
}

std::vector<SimpleType> parse_types(const std::vector<std::string>& tokens, int max_rank) {
  std::vector<SimpleType> out;
  for (const auto& tok : tokens) {
    if (tok.size() == 1 && std::string("ABCD").find(tok[0]) != std::string::npos) {
      const Family f = static_cast<Family>(tok[0]);
      for (int n = 1; n <= max_rank; ++n)
        if (is_admissible(f, n)) out.push_back(make_type(f, n));
    } else if (tok == "E") {
      for (int n = 6; n <= 8; ++n) out.push_back(make_type(Family::E, n));
    } else {
      out.push_back(parse_type(tok));
    }
  }
  return out;
}

std::string markdown_table1(const std::vector<ClassificationReport>& reports) {
  std::ostringstream m;
  m << "| Row | Constraints | Diagram | p1 | p2 | p3 |\n|---|---|---|---|---|---|\n";
  for (const auto& r : reports)
    if (r.table1_match)
      m << "| " << to_string(r.table1_match->row) << " | " << row_constraints(r.table1_match->row) << " | "
        << render_compact(r.diagram) << " | " << param_cell(*r.table1_match, 0) << " | "
        << param_cell(*r.table1_match, 1) << " | " << param_cell(*r.table1_match, 2) << " |\n";
  return m.str();
}

Output cmd_enumerate(const std::vector<SimpleType>& types, Method mode, std::uint64_t seed, std::size_t jobs,
                     bool include_irreducible) {
  AlgebraCache cache;
  const auto reports = enumerate(types, mode, seed, {include_irreducible, jobs}, cache);
  Output o;
  Json summary = Json::array(), hits = Json::array(), all = Json::array();
  std::ostringstream t, m;
  m << "## Enumeration (mode " << to_string(mode) << ", seed " << seed << ")\n\n";
  m << "| type | diagrams | Q-irreducible |\n|---|---|---|\n";
  std::size_t i = 0;
  for (const auto& type : types) {
    std::vector<std::string> qirr;
    std::size_t count = 0;
    for (; i < reports.size() && reports[i].diagram.type() == type; ++i) {
      ++count;
      if (reports[i].verdicts.q_irreducible.value_or(false)) qirr.push_back(render_compact(reports[i].diagram));
    }
    summary.push_back(Json{{"type", type.name()}, {"diagrams", count}, {"q_irreducible", qirr}});
    std::string list;
    for (const auto& s : qirr) list += (list.empty() ? "" : " ") + s;
    t << type.name() << ": " << count << " diagrams, Q-irreducible: " << (list.empty() ? "none" : list) << "\n";
    m << "| " << type.name() << " | " << count << " | " << list << " |\n";
  }
  for (const auto& r : reports) {
    if (r.table1_match) hits.push_back(to_json(*r.table1_match));
    all.push_back(to_json(r));
  }
  t << "total: " << reports.size() << " diagrams\n";
  m << "\n### Table rows found\n\n" << markdown_table1(reports);
  o.results = Json{{"summary", summary}, {"total_diagrams", reports.size()}, {"table1_hits", hits}, {"reports", all}};
  o.text = t.str();
  o.markdown = m.str();
  return o;
}

Json invariant_json(const InvariantCheck& ic) {
  Json j{{"description", ic.description}, {"degree", ic.degree}};
  if (ic.report) {
    const InvariantReport& r = *ic.report;
    j["homogeneous"] = r.homogeneous;
    j["relatively_invariant"] = r.relatively_invariant;
    j["points_checked"] = r.points_checked;
    j["group_elements_checked"] = r.group_elements_checked;
    j["hessian_nonzero"] = r.hessian_nonzero;
    j["dlog_full_rank"] = r.dlog_full_rank;
    Json chi = Json::array();
    for (const auto& c : r.infinitesimal_character) chi.push_back(rat(c));
    j["infinitesimal_character"] = chi;
    j["error"] = nullptr;
  } else {
    j["relatively_invariant"] = false;
    j["error"] = ic.error;
  }
  return j;
}

Output cmd_verify_model(const ModelSpec& spec, std::uint64_t seed, bool& passed) {
  const ModelVerification mv = verify_model(spec, seed);
  passed = mv.passed;
  Output o;
  Json seeds = Json::array(), checks = Json::array(), invs = Json::array();
  for (const auto& s : mv.seeds)
    seeds.push_back(Json{{"seed", s.seed},
                         {"prehomogeneous", s.prehomogeneous},
                         {"regular", s.regular},
                         {"q_irreducible", s.q_irreducible},
                         {"n_invariants", s.n_invariants},
                         {"isotropy_dim", s.isotropy_dim},
                         {"orbit_rank", s.orbit_rank},
                         {"form_determinant", rat(s.form_determinant)}});
  std::ostringstream t, m;
  t << spec.name << "  dim V = " << spec.instance.dim_v << ", dim g = " << spec.instance.dim_algebra() << "\n";
  m << "## " << spec.name << "\n\n| check | expected | observed | result |\n|---|---|---|---|\n";
  for (const auto& c : mv.checks) {
    checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
    t << (c.pass ? "  PASS " : "  FAIL ") << c.name << ": expected " << c.expected << ", observed " << c.observed
      << "\n";
    m << "| " << c.name << " | " << c.expected << " | " << c.observed << " | " << (c.pass ? "pass" : "FAIL") << " |\n";
  }
  for (const auto& ic : mv.invariants) invs.push_back(invariant_json(ic));
  t << (mv.passed ? "all certificates reproduced" : "certificate failure") << "\n";
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = v;
  o.results = Json{{"model", spec.name},
                   {"family", spec.family},
                   {"params", params},
                   {"dim_v", spec.instance.dim_v},
                   {"dim_algebra", spec.instance.dim_algebra()},
                   {"seeds", seeds},
                   {"invariants", invs},
                   {"checks", checks},
                   {"provenance", spec.expected.provenance},
                   {"passed", mv.passed}};
  o.text = t.str();
  o.markdown = m.str();
  return o;
}

bool looks_like_diagram(const std::string& s) {
  return s.size() >= 2 && std::string("ABCDEFG").find(s[0]) != std::string::npos &&
         std::isdigit(static_cast<unsigned char>(s[1]));
}

std::string filtration_text(const FiltrationReport& f) {
  std::ostringstream t;
  for (std::size_t i = 0; i < f.stages.size(); ++i) {
    const auto& s = f.stages[i];
    std::string names;
    for (const auto& n : s.names) names += (names.empty() ? "" : " + ") + n;
    t << "stage " << i + 1 << ": " << names << "  (dim " << s.dim << ", algebra dim " << s.algebra_dim
      << ", isotropy dim " << s.isotropy_dim << ", " << (s.reductive ? "reductive" : "not reductive") << ")\n";
  }
  return t.str();
}

Output cmd_decompose(const std::string& target, std::uint64_t seed, Json& kind) {
  PVInstance pv;
  if (looks_like_diagram(target)) {
    const WeightedDiagram d = parse_diagram(target);
    const ChevalleyAlgebra alg{RootSystem(d.type())};
    pv = build_parabolic_pv(d, alg);
    kind = "diagram";
  } else {
    pv = make_model(target).instance;
    kind = "model";
  }
  const FiltrationReport f = decompose_filtration(pv, seed);
  Output o;
  o.results = Json{{"target", pv.name}, {"kind", kind}, {"filtration", to_json(f)}};
  o.text = pv.name + "\n" + filtration_text(f);
  std::ostringstream m;
  m << "## Filtration of " << pv.name << "\n\n| stage | components | dim | isotropy dim | reductive |\n|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < f.stages.size(); ++i) {
    std::string names;
    for (const auto& n : f.stages[i].names) names += (names.empty() ? "" : " + ") + n;
    m << "| " << i + 1 << " | " << names << " | " << f.stages[i].dim << " | " << f.stages[i].isotropy_dim << " | "
      << (f.stages[i].reductive ? "yes" : "no") << " |\n";
  }
  o.markdown = m.str();
  return o;
}

// ---------------------------------------------------------------- plumbing

Json document(const std::string& command, const Json& inputs) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", inputs}};
}

void emit(const Format& fmt, std::ostream& out, Json doc, const Output& o) {
  if (fmt.quiet) return;
  if (fmt.json) {
    doc["results"] = o.results;
    out << doc.dump(2) << "\n";
  } else if (fmt.markdown) {
    out << o.markdown;
  } else {
    out << o.text;
  }
}

void emit_error(const Format& fmt, std::ostream& out, std::ostream& err, Json doc, const std::string& kind,
                const std::string& message, Json extra = Json::object()) {
  err << "error: " << message << "\n";
  if (fmt.json && !fmt.quiet) {
    Json e{{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) e[k] = v;
    doc["error"] = std::move(e);
    out << doc.dump(2) << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pvlab: prehomogeneous vector spaces of parabolic type", "pvlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Format fmt;
  app.add_flag("--json", fmt.json, "Emit a JSON report document");
  app.add_flag("--markdown", fmt.markdown, "Emit markdown");
  app.add_flag("--quiet", fmt.quiet, "Suppress normal output");

  std::string diagram_text, target, model_name, mode_text = "both", types_text, gamma_text;
  std::optional<std::uint64_t> seed_flag;
  int max_rank = 7;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  bool include_irreducible = false;

  auto* describe = app.add_subcommand("describe", "Picture and component summary of a diagram");
  describe->add_option("diagram", diagram_text, "Weighted diagram, e.g. D9[2,3,5,8]")->required();
  auto* grade = app.add_subcommand("grade", "Dimensions of the graded pieces");
  grade->add_option("diagram", diagram_text)->required();
  auto* comps = app.add_subcommand("components", "Irreducible components of the level-one space");
  comps->add_option("diagram", diagram_text)->required();
  auto* sub = app.add_subcommand("subdiagram", "Subdiagram attached to a set of circled nodes");
  sub->add_option("diagram", diagram_text)->required();
  sub->add_option("--gamma", gamma_text, "Comma separated circled nodes")->required();
  auto* cls = app.add_subcommand("classify", "Decide Q-irreducibility of a diagram");
  cls->add_option("diagram", diagram_text)->required();
  cls->add_option("--mode", mode_text, "pattern, oracle or both")->capture_default_str();
  cls->add_option("--seed", seed_flag, "Genericity seed (default PV_LAB_SEED or 0)");
  auto* en = app.add_subcommand("enumerate", "Classify every diagram with at least two circles");
  en->add_option("--types", types_text, "Comma separated: A,B,C,D and exceptional names")->required();
  en->add_option("--max-rank", max_rank, "Largest classical rank")->capture_default_str();
  en->add_option("--mode", mode_text, "pattern, oracle or both")->capture_default_str();
  en->add_option("--seed", seed_flag, "Genericity seed");
  en->add_option("--jobs", jobs, "Worker threads");
  en->add_flag("--include-irreducible", include_irreducible, "Also classify single-circle diagrams");
  auto* vm = app.add_subcommand("verify-model", "Check a matrix model against its expected certificates");
  vm->add_option("model", model_name, "family or family:k=v,...")->required();
  vm->add_option("--seed", seed_flag, "Genericity seed");
  auto* dec = app.add_subcommand("decompose", "Filtration into completely Q-reducible stages");
  dec->add_option("target", target, "Diagram or model name")->required();
  dec->add_option("--seed", seed_flag, "Genericity seed");

  std::string footer = "Models:";
  for (const auto& f : model_families()) {
    std::string ps;
    for (const auto& p : f.params) ps += (ps.empty() ? ":" : ",") + p + "=N";
    footer += "\n  " + f.family + ps + "  " + f.summary;
  }
  app.footer(footer + "\n\nExit codes: 0 ok, 1 usage or parse error, 2 classification mismatch, 3 certificate failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  Json inputs = Json::object();
  std::uint64_t seed = 0;
  try {
    seed = resolve_seed(seed_flag);
  } catch (const Error& e) {
    emit_error(fmt, out, err, document(name, inputs), e.kind(), e.what());
    return kUsage;
  }
  inputs["seed"] = seed;
  try {
    if (name == "verify-model") {
      inputs["model"] = model_name;
      const ModelSpec spec = make_model(model_name);
      bool passed = false;
      const Output o = cmd_verify_model(spec, seed, passed);
      emit(fmt, out, document(name, inputs), o);
      if (!passed) err << "error: certificate failure for " << spec.name << "\n";
      return passed ? kOk : kCertificate;
    }
    if (name == "decompose") {
      inputs["target"] = target;
      Json kind;
      try {
        emit(fmt, out, document(name, inputs), cmd_decompose(target, seed, kind));
      } catch (const PartialFiltration& e) {
        emit_error(fmt, out, err, document(name, inputs), e.kind(), e.what(),
                   Json{{"partial", to_json(e.report())}});
        return kCertificate;
      } catch (const NotRegular& e) {
        emit_error(fmt, out, err, document(name, inputs), e.kind(), e.what());
        return kCertificate;
      }
      return kOk;
    }
    if (name == "enumerate") {
      std::vector<std::string> tokens;
      std::stringstream ss(types_text);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) tokens.push_back(tok);
      inputs["types"] = tokens;
      inputs["max_rank"] = max_rank;
      inputs["mode"] = mode_text;
      inputs["include_irreducible"] = include_irreducible;
      const Method mode = parse_method(mode_text);
      const auto types = parse_types(tokens, max_rank);
      emit(fmt, out, document(name, inputs), cmd_enumerate(types, mode, seed, jobs, include_irreducible));
      return kOk;
    }
    inputs["diagram"] = diagram_text;
    const WeightedDiagram d = parse_diagram(diagram_text);
    Output o;
    if (name == "describe") {
      o = cmd_describe(d);
    } else if (name == "grade") {
      o = cmd_grade(d);
    } else if (name == "components") {
      o = cmd_components(d);
    } else if (name == "subdiagram") {
      std::vector<int> gamma;
      std::stringstream ss(gamma_text);
      for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t pos = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
          pos = std::string::npos;
        }
        if (pos != tok.size()) throw InvalidParameter("gamma entry '" + tok + "' is not an integer");
        gamma.push_back(v);
      }
      inputs["gamma"] = gamma;
      o = cmd_subdiagram(d, gamma);
    } else {
      inputs["mode"] = mode_text;
      o = cmd_classify(d, parse_method(mode_text), seed);
    }
    emit(fmt, out, document(name, inputs), o);
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << e.caret() << "\ngrammar:\n" << kDiagramGrammar << "\n";
    if (fmt.json && !fmt.quiet) {
      Json doc = document(name, inputs);
      doc["error"] = Json{{"kind", e.kind()}, {"message", e.what()}, {"column", e.column()}, {"expected", e.expected()}};
      out << doc.dump(2) << "\n";
    }
    return kUsage;
  } catch (const MismatchError& e) {
    emit_error(fmt, out, err, document(name, inputs), e.kind(), e.what(),
               Json{{"pattern", to_json(e.pattern())}, {"oracle", to_json(e.oracle())}});
    return kMismatch;
  } catch (const NotRelativeInvariant& e) {
    emit_error(fmt, out, err, document(name, inputs), e.kind(), e.what());
    return kCertificate;
  } catch (const Error& e) {
    emit_error(fmt, out, err, document(name, inputs), e.kind(), e.what());
    return kUsage;
  }
}

}  // namespace pvlab::cli
