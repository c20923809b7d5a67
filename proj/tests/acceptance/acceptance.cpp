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

// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Usage: pvlab_acceptance [criterion ...]

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "../support/oracles.hpp"
#include "pvlab/classify.hpp"
#include "pvlab/cli.hpp"
#include "pvlab/grading.hpp"
#include "pvlab/models.hpp"

using namespace pvlab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

AlgebraCache& algebras() {
  static AlgebraCache c;
  return c;
}

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string canonical(const WeightedDiagram& d) {
  std::string best;
  for (const auto& perm : diagram_automorphisms(d.type())) {
    const std::string s = render_compact(permute(d, perm));
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::string join(const std::set<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
  return s.empty() ? "none" : s;
}

// ------------------------------------------------------------------ 1

void table_reproduction(Outcome& o) {
  std::vector<SimpleType> types;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 2; n <= 7; ++n)
      if (is_admissible(f, n)) types.push_back(make_type(f, n));
  types.push_back(make_type(Family::E, 6));

  std::set<std::string> pattern, reference;
  std::size_t diagrams = 0;
  for (const SimpleType t : types) {
    for (const auto& d : all_diagrams(t, 2)) {
      ++diagrams;
      if (table1_match(d)) pattern.insert(render_compact(d));
    }
    const char fam = static_cast<char>(t.family);
    for (const auto& s : oracle::table_reference(fam, t.rank)) reference.insert(s);
  }
  o.expect(pattern == reference, "table rows disagree with their written-out instances");

  std::vector<std::set<std::string>> oracle_sets;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    std::set<std::string> found;
    for (const auto& r : enumerate(types, Method::Oracle, seed, {false, workers()}, algebras()))
      if (r.verdicts.q_irreducible.value_or(false)) found.insert(render_compact(r.diagram));
    oracle_sets.push_back(std::move(found));
  }
  const bool seeds_agree = oracle_sets[0] == oracle_sets[1] && oracle_sets[1] == oracle_sets[2];
  o.expect(seeds_agree, "oracle sets differ between seeds 0, 1, 2");

  std::set<std::string> oracle_only, pattern_only;
  std::set_difference(oracle_sets[0].begin(), oracle_sets[0].end(), pattern.begin(), pattern.end(),
                      std::inserter(oracle_only, oracle_only.end()));
  std::set_difference(pattern.begin(), pattern.end(), oracle_sets[0].begin(), oracle_sets[0].end(),
                      std::inserter(pattern_only, pattern_only.end()));
  o.expect(oracle_only.empty() && pattern_only.empty(), "Q-irreducible sets differ");
  o.detail << diagrams << " diagrams, pattern " << pattern.size() << ", oracle " << oracle_sets[0].size()
           << ", seeds " << (seeds_agree ? "agree" : "disagree") << "; oracle only: " << join(oracle_only)
           << "; pattern only: " << join(pattern_only);
}

// ------------------------------------------------------------------ 2

struct E6Case {
  int number;
  std::string diagram;
  enum Kind { QIrreducible, NonRegular, RegularPiece } kind;
  std::vector<int> gamma;
  std::string piece;
};

void e6_cases(Outcome& o) {
  const std::vector<E6Case> cases{
      {1, "E6[1,2]", E6Case::QIrreducible, {}, ""},
      {2, "E6[2,3]", E6Case::NonRegular, {}, ""},
      {3, "E6[1,2,5]", E6Case::RegularPiece, {1, 2}, "A4[1,4]"},
      {4, "E6[1,2,6]", E6Case::RegularPiece, {1, 6}, "A5[1,5]"},
      {5, "E6[2,3,5]", E6Case::RegularPiece, {3}, "A3[2]"},
      {6, "E6[1,4]", E6Case::RegularPiece, {4}, "D5[3]"},
      {7, "E6[1,5]", E6Case::RegularPiece, {5}, "D5[2]"},
      {8, "E6[1,6]", E6Case::RegularPiece, {6}, "D5[1]"},
      {9, "E6[3,5]", E6Case::NonRegular, {}, ""},
      {10, "E6[1,4,6]", E6Case::RegularPiece, {4}, "D4[2]"},
  };
  const ChevalleyAlgebra& alg = algebras().get(make_type(Family::E, 6));
  std::size_t ok = 0;
  for (const auto& c : cases) {
    const WeightedDiagram d = parse_diagram(c.diagram);
    const std::string tag = "case " + std::to_string(c.number) + " " + c.diagram;
    bool good = true;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const auto r = classify(d, Method::Oracle, seed, algebras());
      const Verdicts& v = r.verdicts;
      if (c.kind == E6Case::QIrreducible) {
        good &= v.q_irreducible == true && v.regular == true;
      } else if (c.kind == E6Case::NonRegular) {
        good &= v.prehomogeneous == true && v.regular == false && r.oracle && r.oracle->non_reductive &&
                r.oracle->non_reductive->form_determinant == 0;
      } else {
        const PVInstance pv = build_parabolic_pv(d, alg);
        std::vector<std::size_t> idx;
        for (int g : c.gamma)
          idx.push_back(static_cast<std::size_t>(
              std::find(d.circled().begin(), d.circled().end(), g) - d.circled().begin()));
        good &= is_regular(restrict(pv, idx), seed).regular;
        const Subdiagram s = subdiagram(d, c.gamma);
        good &= s.pieces.size() == 1 && canonical(s.pieces[0].diagram) == canonical(parse_diagram(c.piece));
      }
    }
    o.expect(good, tag);
    ok += good;
  }
  o.detail << ok << "/" << cases.size() << " cases confirmed on seeds 0, 1, 2";
}

// ------------------------------------------------------------------ 3

Matrix column(std::size_t n, std::size_t i) {
  Matrix m(n, 1);
  m(i, 0) = 1;
  return m;
}

void worked_examples(Outcome& o) {
  for (int n : {2, 3}) {
    const ModelSpec s = bilinear_pairing(n);
    const std::size_t want = static_cast<std::size_t>((n - 1) * (n - 1));
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const RegularityReport r = is_regular(s.instance, seed);
      o.expect(r.regular && r.n_fundamental_invariants == 1 && r.isotropy_dim == want,
               s.name + " seed " + std::to_string(seed));
    }
    o.detail << s.name << " iso " << want << "; ";
  }
  for (int n : {2, 3, 4}) {
    const ModelSpec s = symmetric_vector(n);
    const std::size_t N = static_cast<std::size_t>(n);
    const Vector x = s.model.pack({Matrix::identity(N), column(N, 0)});
    const std::size_t iso = oracle::isotropy_dimension(s.instance, x);
    const std::size_t want = N > 1 ? (N - 1) * (N - 2) / 2 : 0;
    o.expect(orbit_rank(s.instance, x) == s.instance.dim_v, s.name + " (I, e1) is not generic");
    o.expect(iso == want, s.name + " isotropy " + std::to_string(iso));
    o.detail << s.name << " iso " << iso << "; ";
  }
  {
    const ModelSpec s = e6_vector_skew();
    Matrix y0(5, 5);
    y0(0, 2) = y0(1, 3) = 1;
    y0(2, 0) = y0(3, 1) = -1;
    const Vector x = s.model.pack({column(5, 4), y0});
    const std::size_t iso = oracle::isotropy_dimension(s.instance, x);
    o.expect(iso == 11, "e6_vector_skew isotropy " + std::to_string(iso));
    o.expect(is_regular(s.instance, 0).isotropy_dim == 11, "e6_vector_skew generic isotropy");
    o.detail << s.name << " iso " << iso;
  }
}

// ------------------------------------------------------------------ 4

void lemma_sweeps(Outcome& o) {
  std::size_t cases = 0;
  auto check = [&](const ModelSpec& s, bool expect_regular) {
    ++cases;
    bool regular = false;
    std::size_t count = 0;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const RegularityReport r = is_regular(s.instance, seed);
      if (seed == 0) {
        regular = r.regular;
        count = r.n_fundamental_invariants;
      } else if (r.regular != regular || r.n_fundamental_invariants != count) {
        o.expect(false, s.name + " is seed dependent");
      }
    }
    if (regular != expect_regular)
      o.expect(false, s.name + (regular ? " is regular" : " is not regular"));
    else if (regular && count != 1)
      o.expect(false, s.name + " is regular with " + std::to_string(count) + " fundamental invariants");
  };
  for (int q = 2; q <= 4; ++q)
    for (int p = 1; p < q; ++p)
      for (int r = 1; r < q; ++r) check(gl_triple_chain(p, q, r), p == r);
  for (int r : {3, 5})
    for (int p = 1; p <= r - 1; ++p) check(skew_pair(p, r), p == r - 1);
  for (int q = 2; q <= 4; ++q)
    for (int p = 1; p < q; ++p) check(torus_chain(p, q), p == 2);
  o.detail << cases << " cases";
  if (!o.failures.empty()) {
    o.detail << "; failing:";
    for (const auto& f : o.failures) o.detail << " [" << f << "]";
  }
}

// ------------------------------------------------------------------ 5

void invariants(Outcome& o) {
  const std::vector<std::string> names{
      "gl_triple_chain:p=1,q=2,r=1", "gl_triple_chain:p=2,q=3,r=2", "gl_triple_chain:p=3,q=4,r=3",
      "torus_chain:p=2,q=3",         "skew_pair:p=2,r=3",           "skew_pair:p=4,r=5",
      "skew_pair:p=2,r=5",           "e6_vector_skew",              "bordered_skew:n=3",
      "bordered_skew:n=5",           "bilinear_pairing:n=2",        "bilinear_pairing:n=3",
      "descending_chains:n=1",       "descending_chains:n=2",       "column_completion:n=3"};
  InvariantOptions opts;
  opts.sample_points = 20;
  std::size_t checked = 0;
  for (const auto& name : names) {
    const ModelSpec s = make_model(name);
    const GroupSampler smp = s.sampler();
    const bool regular = is_regular(s.instance, 0).regular;
    for (const auto& f : s.known_invariants) {
      try {
        const InvariantReport r = verify_invariant(s.instance, &smp, f, 0, opts);
        o.expect(r.relatively_invariant && r.homogeneous && r.points_checked >= 20, name + " " + f.description);
        if (regular && s.known_invariants.size() == 1)
          o.expect(r.hessian_nonzero && r.dlog_full_rank, name + " " + f.description + " degenerate");
        ++checked;
      } catch (const Error& e) {
        o.expect(false, name + " " + f.description + ": " + e.what());
      }
    }
    if (regular && s.known_invariants.size() > 1) {
      const InvariantReport r = verify_invariant(s.instance, &smp, product(s.known_invariants), 0, opts);
      o.expect(r.hessian_nonzero && r.dlog_full_rank, name + " product degenerate");
    }
    o.expect(!s.known_invariants.empty(), name + " has no invariant");
  }
  o.detail << checked << " invariants on " << names.size() << " models";
}

// ------------------------------------------------------------------ 6

void hessian_identity(Outcome& o) {
  const ModelSpec pairing = bilinear_pairing(2), chain = gl_triple_chain(1, 2, 1);
  const std::vector<std::pair<std::string, SummandInvariant>> instances{
      {"Q^2", {power(pairing.known_invariants.at(0), 2), pairing.instance.dim_v}},
      {"det(YX)^2", {power(chain.known_invariants.at(0), 2), chain.instance.dim_v}}};
  for (const auto& [label, f] : instances) {
    try {
      const IdentityReport r = hessian_product_identity_check(std::span(&f, 1), 0, 6);
      o.expect(r.samples.size() >= 5, label + " too few samples");
      for (const auto& smp : r.samples) {
        // (1 - r) det(d grad log f) f^n, recomputed here.
        const Rational fx = f.f.evaluate(smp.point);
        const Vector g = gradient(f.f, smp.point);
        const Matrix h = hessian(f.f, smp.point);
        Matrix dphi = h;
        for (std::size_t i = 0; i < f.dim; ++i)
          for (std::size_t j = 0; j < f.dim; ++j) dphi(i, j) = h(i, j) / fx - g[i] * g[j] / (fx * fx);
        Rational fn = 1;
        for (std::size_t i = 0; i < f.dim; ++i) fn *= fx;
        const Rational rhs = Rational(1 - f.f.degree) * determinant(dphi) * fn;
        o.expect(determinant(h) == rhs && smp.lhs == smp.rhs && smp.lhs == rhs, label + " identity fails");
        o.expect(smp.lhs != 0, label + " trivial sample");
      }
      o.detail << label << ": " << r.samples.size() << " points; ";
    } catch (const Error& e) {
      o.expect(false, label + ": " + e.what());
    }
  }
}

// ------------------------------------------------------------------ 7

void structural(Outcome& o) {
  std::size_t triples = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::F, Family::G})
    for (int n = 1; n <= 4; ++n) {
      if (!is_admissible(f, n)) continue;
      const ChevalleyAlgebra& alg = algebras().get(make_type(f, n));
      for (std::size_t x = 0; x < alg.dim(); ++x)
        for (std::size_t y = x + 1; y < alg.dim(); ++y)
          for (std::size_t z = y + 1; z < alg.dim(); ++z, ++triples)
            o.expect(oracle::jacobi_holds(alg, x, y, z), "Jacobi in " + make_type(f, n).name());
    }
  {
    const ChevalleyAlgebra& e8 = algebras().get(make_type(Family::E, 8));
    std::mt19937_64 gen(8);
    std::uniform_int_distribution<std::size_t> pick(0, e8.dim() - 1);
    for (int i = 0; i < 500; ++i, ++triples) o.expect(oracle::jacobi_holds(e8, pick(gen), pick(gen), pick(gen)), "Jacobi in E8");
  }
  std::size_t diagrams = 0, rules = 0;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= 9; ++n) {
      if (!is_admissible(f, n)) continue;
      const SimpleType t = make_type(f, n);
      const RootSystem rs(t);
      for (const auto& d : all_diagrams(t, 1)) {
        ++diagrams;
        std::size_t total = 0;
        for (const auto& [lvl, dim] : compute_grading(d, rs).dim_by_level) total += dim;
        o.expect(total == oracle::closed_form_dim(t), "grading of " + render_compact(d));
        for (const auto& c : components(d, rs))
          for (int beta : c.j_alpha) {
            ++rules;
            o.expect(rules_R(d, c.alpha, beta) == oracle::cartan_from_form(rs, c.alpha, beta),
                     "rule at " + render_compact(d));
          }
      }
    }
  std::size_t golden = 0;
  for (const auto& [gamma, file] : std::vector<std::pair<std::string, std::string>>{
           {"2", "subdiagram_D9_2.txt"}, {"2,8", "subdiagram_D9_2_8.txt"}, {"5,8", "subdiagram_D9_5_8.txt"}}) {
    std::vector<std::string> args{"pvlab", "subdiagram", "D9[2,3,5,8]", "--gamma", gamma};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    std::ifstream in(std::string(PVLAB_GOLDEN_DIR) + "/" + file);
    std::stringstream want;
    want << in.rdbuf();
    const bool same = in.good() && out.str() == want.str();
    o.expect(same, "golden " + file);
    golden += same;
  }
  o.detail << triples << " Jacobi triples, " << diagrams << " gradings, " << rules << " rule values, " << golden
           << "/3 golden pictures";
}

// ------------------------------------------------------------------ 8

void filtrations(Outcome& o) {
  for (int n : {2, 3, 4}) {
    const FiltrationReport f = decompose_filtration(symmetric_vector(n).instance, 0);
    const bool ok = f.complete && f.stages.size() == 2 && f.stages[0].names == std::vector<std::string>{"S"} &&
                    f.stages[1].names == std::vector<std::string>{"v"} && f.stages[1].reductive &&
                    f.stages[1].form_determinant != 0;
    o.expect(ok, "symmetric_vector n=" + std::to_string(n));
  }
  const FiltrationReport f = decompose_filtration(descending_chains(2).instance, 0);
  const bool ok = f.complete && f.stages.size() == 2 && f.stages[0].names == std::vector<std::string>{"V2"} &&
                  f.stages[1].names == std::vector<std::string>{"V1"} && f.stages[1].reductive &&
                  f.stages[1].form_determinant != 0;
  o.expect(ok, "descending_chains n=2");
  o.detail << "S then v for n = 2, 3, 4; V2 then V1; final isotropy form determinant "
           << to_string(f.stages.back().form_determinant);
}

// ------------------------------------------------------------------ 9

void e8_dimensions(Outcome& o) {
  const SimpleType e8 = make_type(Family::E, 8);
  const RootSystem rs(e8);
  std::size_t bad = 0;
  for (const auto& d : all_diagrams(e8, 1)) {
    std::size_t total = 0;
    for (const auto& [lvl, dim] : compute_grading(d, rs).dim_by_level) total += dim;
    bad += total != 248;
  }
  o.expect(bad == 0, "E8 grading sums");
  const WeightedDiagram d = parse_diagram("E8[1,7]");
  const auto split = oracle::level_one_split(rs, d.circled());
  o.expect(split == std::map<int, std::size_t>{{1, 16}, {7, 20}}, "E8[1,7] level-one split");
  std::map<int, std::size_t> from_components;
  for (const auto& c : components(d, rs)) from_components[c.alpha] = c.dim;
  o.expect(from_components == split, "component dimensions disagree with root count");
  std::vector<std::string> theta;
  for (const auto& p : rs.connected_components(d.theta())) theta.push_back(p.label());
  std::sort(theta.begin(), theta.end());
  o.expect(theta == std::vector<std::string>{"A1", "D5"}, "Levi type of E8[1,7]");
  const std::size_t dim_l = compute_grading(d, rs).dim_by_level.at(0);
  o.expect(dim_l == 50, "dim l");
  o.detail << "255 E8 diagrams sum to 248; E8[1,7]: Levi D5+A1+center (dim " << dim_l << "), level one 20 + 16 = "
           << split.at(1) + split.at(7) << "; isotropy type not asserted";
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "classification table reproduction (A-D rank <= 7, E6)", table_reproduction},
      {2, "E6 two-circle case analysis", e6_cases},
      {3, "worked-example certificates", worked_examples},
      {4, "matrix family sweeps", lemma_sweeps},
      {5, "relative invariant verification", invariants},
      {6, "Hessian product identity", hessian_identity},
      {7, "structural property suites", structural},
      {8, "filtration stages", filtrations},
      {9, "E8 grading dimensions", e8_dimensions},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.contains(c.id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail = o.detail.str();
    if (!o.pass && c.id != 4 && !o.failures.empty()) {
      detail += "; failing:";
      for (std::size_t i = 0; i < std::min<std::size_t>(o.failures.size(), 5); ++i) detail += " [" + o.failures[i] + "]";
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << detail << " ("
              << static_cast<int>(secs * 10) / 10.0 << " s)" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
