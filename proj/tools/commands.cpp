// Copyright 2026 The alexdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "alexdual/errors.hpp"
#include "alexdual/graph.hpp"
#include "alexdual/homology.hpp"
#include "alexdual/io.hpp"
#include "alexdual/quasitree.hpp"
#include "alexdual/verify.hpp"

namespace alexdual::cli {
namespace {

using io::Json;

struct Globals {
  std::string file;
  bool pretty = false;
  std::string field = "q";
  bool minimalize = false;
  bool no_timing = false;
};

struct Report {
  Json inputs = Json::object();
  Json result = Json::object();
  Json checks = Json::array();

  void check(const std::string& name, bool pass, const Json& witness) {
    checks.push_back({{"name", name}, {"pass", pass},
                      {"witness", pass ? Json(nullptr) : witness}});
  }
  bool allPassed() const {
    for (const Json& c : checks) {
      if (!c.at("pass").get<bool>()) return false;
    }
    return true;
  }
};

class Session {
 public:
  Session(const Globals& globals, std::istream& in) : globals_(globals), in_(in) {}

  Json input() const {
    if (globals_.file.empty() || globals_.file == "-") {
      return io::parseText(std::string(std::istreambuf_iterator<char>(in_), {}));
    }
    return readFile(globals_.file);
  }

  static Json readFile(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    try {
      return io::parseText(text.str());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.where(), e.what());
    }
  }

  SimplicialComplex complex(Report& report) const {
    SimplicialComplex c = io::complexFromJson(input(), {globals_.minimalize});
    report.inputs["complex"] = io::toJson(c);
    return c;
  }

  MonomialIdeal ideal(Report& report) const {
    MonomialIdeal i = io::idealFromJson(input());
    report.inputs["ideal"] = io::toJson(i, globals_.pretty);
    return i;
  }

  Graph graph(Report& report, const std::string& graph6) const {
    Graph g = graph6.empty() ? io::graphFromJson(input()) : io::parseGraph6(graph6);
    report.inputs["graph"] = io::toJson(g);
    return g;
  }

  FieldChoice field() const { return FieldChoice::parse(globals_.field); }
  bool pretty() const { return globals_.pretty; }

 private:
  const Globals& globals_;
  std::istream& in_;
};

Json oneBased(const std::vector<std::size_t>& order) {
  Json out = Json::array();
  for (std::size_t k : order) out.push_back(k + 1);
  return out;
}

Json monomials(std::span<const Monomial> ms, bool pretty) {
  Json out = Json::array();
  for (const Monomial& m : ms) out.push_back(io::toJson(m, pretty));
  return out;
}

Json signedJson(const SignedMonomial& s, bool pretty) {
  return {{"sign", s.sign}, {"monomial", io::toJson(s.value, pretty)}};
}

// Generators x_{V \ F_j} in facet order, V the vertices in use.
std::vector<Monomial> complementGenerators(const SimplicialComplex& c) {
  std::vector<Monomial> out;
  for (Mask f : c.facetMasks()) {
    out.push_back(Monomial::fromMask(c.ambient(), c.vertexMask() & ~f));
  }
  return out;
}

using Handler = std::function<void(const Session&, Report&)>;

struct Command {
  CLI::App* app;
  Handler handler;
};

void addComplexCommands(CLI::App& app, std::map<std::string, Command>& table,
                        int& dim, bool& complement, std::size_t& limit,
                        std::string& tree_file) {
  table["dual"] = {app.add_subcommand("dual", "Alexander dual of a complex"),
                   [](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    const auto dual = alexanderDual(c);
    r.result["dual"] = dual ? io::toJson(*dual) : Json(nullptr);
    if (!dual) {
      r.result["note"] = "every subset is a face; the dual has no faces";
      return;
    }
    r.check("involution", alexanderDual(*dual) == c, r.inputs["complex"]);
    if (c.numFacets() > 1 || c.facetMasks()[0] != bits::lowMask(c.ambient())) {
      r.check("sr-ideal-of-dual-equals-facet-ideal-of-complement",
              stanleyReisnerIdeal(*dual) == facetIdeal(complementComplex(c)),
              r.inputs["complex"]);
    }
  }};
  table["complement"] = {app.add_subcommand("complement", "Complex of facet complements"),
                         [](const Session& s, Report& r) {
    r.result["complement"] = io::toJson(complementComplex(s.complex(r)));
  }};
  CLI::App* skel = app.add_subcommand("skeleton", "Pure i-skeleton (all i-faces)");
  skel->add_option("--dim,-i", dim, "Face dimension")->required();
  table["skeleton"] = {skel, [&dim](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    r.inputs["dim"] = dim;
    r.result["skeleton"] = io::toJson(skeleton(c, dim));
  }};
  table["nonfaces"] = {app.add_subcommand("nonfaces", "Minimal nonfaces and flagness"),
                       [](const Session& s, Report& r) {
    const NonfaceReport rep = minimalNonfaces(s.complex(r));
    Json list = Json::array();
    for (const VertexSet& f : rep.nonfaces) list.push_back(f.members());
    r.result["nonfaces"] = list;
    r.result["flag"] = rep.is_flag;
  }};
  table["sr-ideal"] = {app.add_subcommand("sr-ideal", "Stanley-Reisner ideal"),
                       [](const Session& s, Report& r) {
    r.result["ideal"] = io::toJson(stanleyReisnerIdeal(s.complex(r)), s.pretty());
  }};
  CLI::App* fi = app.add_subcommand("facet-ideal", "Facet ideal");
  fi->add_flag("--complement", complement, "Use the complex of facet complements");
  table["facet-ideal"] = {fi, [&complement](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    r.inputs["complement"] = complement;
    r.result["ideal"] =
        io::toJson(facetIdeal(complement ? complementComplex(c) : c), s.pretty());
  }};
  table["quasitree"] = {app.add_subcommand("quasitree", "Leaf order search"),
                        [](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    const auto order = leafOrder(c);
    r.result["quasi_tree"] = order.has_value();
    r.result["leaf_order"] = order ? oneBased(*order) : Json(nullptr);
    Json leaves = Json::array();
    for (std::size_t f = 0; f < c.numFacets(); ++f) {
      const LeafReport lr = leafReport(c, f);
      if (!lr.is_leaf) continue;
      leaves.push_back({{"facet", f + 1},
                        {"branches", oneBased(lr.branches)},
                        {"free_vertices", lr.free_vertices.members()}});
    }
    r.result["leaves"] = leaves;
    if (order) r.check("leaf-order", isLeafOrder(c, *order), r.inputs["complex"]);
  }};
  CLI::App* rt = app.add_subcommand("relation-trees", "Relation trees of I(complement)");
  rt->add_option("--limit", limit, "Maximum number of trees")->check(CLI::Range(1, 100000));
  table["relation-trees"] = {rt, [&limit](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    r.inputs["limit"] = limit;
    const std::vector<RelationTree> trees = relationTrees(c, limit);
    r.result["quasi_tree"] = isQuasiTree(c);
    r.result["count"] = trees.size();
    Json list = Json::array();
    const std::vector<Monomial> expected = complementGenerators(c);
    for (std::size_t k = 0; k < trees.size(); ++k) {
      list.push_back(io::toJson(trees[k], s.pretty()));
      const std::string tag = "tree " + std::to_string(k + 1);
      r.check(tag + ": minor certificate", verifyMinorCertificate(c, trees[k]),
              r.inputs["complex"]);
      r.check(tag + ": reconstructs generators",
              reconstructGenerators(trees[k]) == expected, r.inputs["complex"]);
    }
    r.result["trees"] = list;
  }};
  CLI::App* md = app.add_subcommand("mdelta", "Relation matrix M_Delta and its minors");
  md->add_option("--tree", tree_file, "Relation tree JSON selecting t-1 rows");
  table["mdelta"] = {md, [&tree_file](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    r.result["matrix"] = io::toJson(buildMDelta(c), s.pretty());
    if (tree_file.empty()) return;
    const RelationTree tree = io::relationTreeFromJson(Session::readFile(tree_file));
    r.inputs["tree"] = io::toJson(tree, s.pretty());
    const auto pairs = tree.edgePairs();
    Json dets = Json::array();
    for (const SignedMonomial& d : minorDeterminants(c, pairs)) {
      dets.push_back(signedJson(d, s.pretty()));
    }
    r.result["minors"] = dets;
    r.result["certificate"] = verifyMinorCertificate(c, pairs);
  }};
  table["shelling"] = {app.add_subcommand("shelling", "Shelling order search"),
                       [](const Session& s, Report& r) {
    const SimplicialComplex c = s.complex(r);
    const auto order = shellingOrder(c);
    r.result["shellable"] = order.has_value();
    r.result["order"] = order ? oneBased(*order) : Json(nullptr);
    if (order) r.check("shelling-order", isShellingOrder(c, *order), r.inputs["complex"]);
  }};
  table["higher-dirac"] = {app.add_subcommand("higher-dirac",
                                              "Skeleton-of-quasi-tree test, both sides"),
                           [](const Session& s, Report& r) {
    const HigherDiracReport rep = higherDiracCheck(s.complex(r));
    r.result = {{"ell", rep.ell},
                {"skeleton_of_quasi_tree", rep.side_a},
                {"chordal_and_skeleton_of_clique_complex", rep.side_b},
                {"chordal", rep.chordal}};
    r.check("equivalence", rep.holds(), r.inputs["complex"]);
  }};
}

void addIdealCommands(CLI::App& app, std::map<std::string, Command>& table,
                      int& k, std::vector<int>& bound) {
  table["betti"] = {app.add_subcommand("betti", "Multigraded Betti numbers"),
                    [](const Session& s, Report& r) {
    const MonomialIdeal i = s.ideal(r);
    r.inputs["field"] = s.field().name();
    r.result = io::toJson(bettiTable(i, s.field()), i);
  }};
  table["projdim"] = {app.add_subcommand("projdim", "Projective dimension"),
                      [](const Session& s, Report& r) {
    const MonomialIdeal i = s.ideal(r);
    r.inputs["field"] = s.field().name();
    if (i.isZero()) {
      r.result["projdim"] = nullptr;
      return;
    }
    r.result["projdim"] = projdimAndReg(i, s.field()).projdim;
  }};
  table["reg"] = {app.add_subcommand("reg", "Regularity and linearity"),
                  [](const Session& s, Report& r) {
    const MonomialIdeal i = s.ideal(r);
    r.inputs["field"] = s.field().name();
    if (i.isZero()) {
      r.result = {{"reg", nullptr}, {"linear", nullptr}};
      return;
    }
    const ResolutionSummary sum = projdimAndReg(i, s.field());
    r.result = {{"reg", sum.reg}, {"linear", sum.linear_resolution}};
  }};
  CLI::App* pw = app.add_subcommand("power", "k-th power of an ideal");
  pw->add_option("--k,-k", k, "Exponent")->required()->check(CLI::Range(1, 64));
  table["power"] = {pw, [&k](const Session& s, Report& r) {
    const MonomialIdeal i = s.ideal(r);
    r.inputs["k"] = k;
    r.result["ideal"] = io::toJson(power(i, k), s.pretty());
  }};
  CLI::App* rs = app.add_subcommand("restrict", "Generators below a bound");
  rs->add_option("--bound,-a", bound, "Componentwise exponent bound")
      ->required()
      ->delimiter(',');
  table["restrict"] = {rs, [&bound](const Session& s, Report& r) {
    const MonomialIdeal i = s.ideal(r);
    r.inputs["bound"] = bound;
    r.result["ideal"] = io::toJson(restrictIdeal(i, bound), s.pretty());
  }};
  table["linear-quotients"] = {app.add_subcommand("linear-quotients",
                                                  "Linear quotients order search"),
                               [](const Session& s, Report& r) {
    const MonomialIdeal i = s.ideal(r);
    const auto order = linearQuotientsOrder(i);
    r.result["linear_quotients"] = order.has_value();
    r.result["order"] = order ? monomials(*order, s.pretty()) : Json(nullptr);
    if (order) {
      r.check("linear-quotients-order", isLinearQuotientsOrder(i, *order),
              r.inputs["ideal"]);
    }
  }};
}

void addGraphCommands(CLI::App& app, std::map<std::string, Command>& table,
                      std::string& graph6) {
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--graph6", graph6, "Graph in graph6 format instead of JSON");
    return c;
  };
  table["chordal"] = {sub("chordal", "Chordality with a witness"),
                      [&graph6](const Session& s, Report& r) {
    const Graph g = s.graph(r, graph6);
    const ChordalityResult c = isChordal(g);
    r.result["chordal"] = c.chordal;
    if (c.chordal) {
      r.result["order"] = c.order;
      r.check("clique-order", isCliqueOrder(g, c.order), r.inputs["graph"]);
    } else {
      r.result["cycle"] = c.cycle;
      r.check("chordless-cycle", isChordlessCycle(g, c.cycle), r.inputs["graph"]);
    }
  }};
  table["clique-complex"] = {sub("clique-complex", "Clique (flag) complex"),
                             [&graph6](const Session& s, Report& r) {
    r.result["complex"] = io::toJson(cliqueComplex(s.graph(r, graph6)));
  }};
  table["dirac"] = {sub("dirac", "Chordal versus quasi-tree clique complex"),
                    [&graph6](const Session& s, Report& r) {
    const Graph g = s.graph(r, graph6);
    const bool chordal = isChordal(g).chordal;
    const bool quasi = isQuasiTree(cliqueComplex(g));
    r.result = {{"chordal", chordal}, {"clique_complex_quasi_tree", quasi}};
    r.check("dirac", chordal == quasi, r.inputs["graph"]);
  }};
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  int max_n = 6;
  std::size_t max_facets = 4;
  int max_power = 3;
  std::size_t samples = 0;
  std::string complex_file;
};

void addVerify(CLI::App& app, std::map<std::string, Command>& table, VerifyArgs& v) {
  CLI::App* c = app.add_subcommand("verify", "Run a verification suite");
  c->add_option("suite", v.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify::suiteNames()));
  c->add_option("--seed", v.seed, "Random seed");
  c->add_option("--max-n", v.max_n, "Largest vertex count")->check(CLI::Range(1, 8));
  c->add_option("--max-facets", v.max_facets, "Largest facet count")
      ->check(CLI::Range(1, 6));
  c->add_option("--max-power", v.max_power, "Largest ideal power")->check(CLI::Range(1, 4));
  c->add_option("--samples", v.samples, "Random instances (0 = suite default)")
      ->check(CLI::Range(0, 1'000'000));
  c->add_option("--complex", v.complex_file, "Complex JSON for suites that take one");
  table["verify"] = {c, [&v](const Session& s, Report& r) {
    verify::SuiteOptions o;
    o.seed = v.seed;
    o.max_n = v.max_n;
    o.max_facets = v.max_facets;
    o.max_power = v.max_power;
    o.samples = v.samples;
    o.field = s.field();
    r.inputs = {{"suite", v.suite}, {"seed", v.seed}, {"max_n", v.max_n},
                {"max_facets", v.max_facets}, {"max_power", v.max_power},
                {"samples", v.samples}, {"field", o.field.name()}};
    if (!v.complex_file.empty()) {
      o.complex = io::complexFromJson(Session::readFile(v.complex_file));
      r.inputs["complex"] = io::toJson(*o.complex);
    }
    Json suites = Json::array();
    for (const verify::CheckResult& c : verify::runSuite(v.suite, o)) {
      suites.push_back({{"name", c.name}, {"passed", c.passed},
                        {"instances", c.instances}, {"positives", c.positives},
                        {"negatives", c.negatives}, {"skipped", c.skipped},
                        {"detail", c.detail}});
      r.check(c.name, c.passed,
              c.witness.is_null() ? Json{{"detail", c.detail}} : c.witness);
    }
    r.result["suites"] = suites;
  }};
}

Json errorReport(const std::string& command, const std::string& kind,
                 const std::string& message) {
  return {{"schema", "v1"},
          {"command", command},
          {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander duality, quasi-trees and linear resolutions", "alexdual"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("-f,--file", globals.file, "Input JSON file (default stdin)");
  app.add_flag("--pretty", globals.pretty, "Write monomials as x1*x2");
  app.add_option("--field", globals.field, "q, gf2 or gf<p>");
  app.add_flag("--minimalize", globals.minimalize, "Drop non-maximal input faces");
  app.add_flag("--no-timing", globals.no_timing, "Omit timing_ms from the report");
  app.fallthrough();

  std::map<std::string, Command> table;
  int dim = 0;
  bool complement = false;
  std::size_t limit = 1000;
  std::string tree_file;
  int k = 1;
  std::vector<int> bound;
  std::string graph6;
  VerifyArgs verify_args;
  addComplexCommands(app, table, dim, complement, limit, tree_file);
  addIdealCommands(app, table, k, bound);
  addGraphCommands(app, table, graph6);
  addVerify(app, table, verify_args);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::string name;
  Handler handler;
  for (const auto& [n, cmd] : table) {
    if (cmd.app->parsed()) {
      name = n;
      handler = cmd.handler;
    }
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    FieldChoice::parse(globals.field);
    handler(Session(globals, in), report);
  } catch (const ParseError& e) {
    err << "alexdual " << name << ": parse error at " << e.what() << '\n';
    out << errorReport(name, "parse", e.what()).dump(2) << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "alexdual " << name << ": resource cap: " << e.what() << '\n';
    out << errorReport(name, "resource", e.what()).dump(2) << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "alexdual " << name << ": " << e.what() << '\n';
    out << errorReport(name, "domain", e.what()).dump(2) << '\n';
    return kUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  Json doc = {{"schema", "v1"},
              {"command", name},
              {"inputs", report.inputs},
              {"result", report.result},
              {"checks", report.checks}};
  if (!globals.no_timing) doc["timing_ms"] = ms;
  out << doc.dump(2) << '\n';
  return report.allPassed() ? kOk : kPropertyFailed;
}

}  // namespace alexdual::cli
