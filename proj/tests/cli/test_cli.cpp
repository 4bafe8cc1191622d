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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace {

using Json = nlohmann::json;

struct Outcome {
  int code;
  Json report;
  std::string err;
};

std::string data(const std::string& name) { return std::string(ALEXDUAL_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = alexdual::cli::run(args, in, out, err);
  Json report = out.str().empty() ? Json() : Json::parse(out.str(), nullptr, false);
  return {code, report, err.str()};
}

TEST(Cli, QuasitreeOnDeltaQ) {
  const Outcome o = run({"quasitree", "-f", data("dq.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.report["schema"], "v1");
  EXPECT_EQ(o.report["command"], "quasitree");
  EXPECT_EQ(o.report["result"]["leaf_order"], Json::parse("[1,2,3,4]"));
  EXPECT_TRUE(o.report.contains("timing_ms"));
}

TEST(Cli, RelationTreesOnDeltaQ) {
  const Outcome o = run({"relation-trees", "-f", data("dq.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.report["result"]["count"], 3);
  for (const Json& c : o.report["checks"]) EXPECT_TRUE(c["pass"].get<bool>());
}

TEST(Cli, BettiOnIdealEx) {
  const Outcome o = run({"betti", "-f", data("iex.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.report["result"]["projdim"], 1);
  EXPECT_EQ(o.report["result"]["reg"], 3);
  EXPECT_EQ(o.report["result"]["linear"], true);
}

TEST(Cli, FacetIdealOfComplement) {
  const Outcome o = run({"--pretty", "facet-ideal", "--complement", "-f", data("dq.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.report["result"]["ideal"]["generators"],
            Json::parse(R"(["x4*x5*x6","x1*x5*x6","x1*x2*x6","x1*x2*x5"])"));
}

TEST(Cli, ReadsStdin) {
  const Outcome o = run({"dual"}, R"({"ambient":3,"facets":[[1,2],[2,3]]})");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.report["result"]["dual"], Json::parse(R"({"ambient":3,"facets":[[2]]})"));
}

TEST(Cli, EveryComplexCommandRuns) {
  for (const char* cmd : {"dual", "complement", "nonfaces", "sr-ideal", "facet-ideal",
                          "quasitree", "relation-trees", "mdelta", "shelling"}) {
    const Outcome o = run({cmd, "-f", data("dq.json"), "--no-timing"});
    EXPECT_EQ(o.code, 0) << cmd << o.err;
    EXPECT_EQ(o.report["command"], cmd);
  }
  EXPECT_EQ(run({"skeleton", "--dim", "1", "-f", data("dq.json")}).code, 0);
  EXPECT_EQ(run({"higher-dirac", "-f", data("dn.json")}).code, 0);
}

TEST(Cli, EveryIdealCommandRuns) {
  for (const char* cmd : {"betti", "projdim", "reg", "linear-quotients"}) {
    EXPECT_EQ(run({cmd, "-f", data("iex.json")}).code, 0) << cmd;
  }
  const Outcome p = run({"power", "-k", "2", "-f", data("iex.json")});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.report["result"]["ideal"]["generators"].size(), 10U);
  const Outcome r = run({"restrict", "--bound", "1,1,1,1,1,0", "-f", data("iex.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["result"]["ideal"]["generators"].size(), 1U);
}

TEST(Cli, GraphCommands) {
  const Outcome c = run({"chordal", "-f", data("c4.json")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.report["result"]["chordal"], false);
  EXPECT_EQ(c.report["result"]["cycle"].size(), 4U);
  EXPECT_EQ(run({"dirac", "-f", data("c4.json")}).code, 0);
  const Outcome k = run({"clique-complex", "--graph6", "C~"});
  EXPECT_EQ(k.code, 0);
  EXPECT_EQ(k.report["result"]["complex"]["facets"], Json::parse("[[1,2,3,4]]"));
}

TEST(Cli, MdeltaWithTree) {
  const Outcome trees = run({"relation-trees", "-f", data("dq.json")});
  ASSERT_EQ(trees.code, 0);
  const std::string tree_path = ::testing::TempDir() + "tree.json";
  std::ofstream(tree_path) << trees.report["result"]["trees"][0].dump();
  const Outcome o = run({"mdelta", "--tree", tree_path, "-f", data("dq.json")});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.report["result"]["certificate"], true);
  EXPECT_EQ(o.report["result"]["minors"].size(), 4U);
}

TEST(Cli, FieldOptionChangesHomologicalAnswers) {
  const std::string rp2 = data("rp2.json");
  // Stanley-Reisner ideal of the projective plane: linear only over Q.
  const Outcome sr = run({"--pretty", "sr-ideal", "-f", rp2});
  const std::string ideal = sr.report["result"]["ideal"].dump();
  const Outcome over_q = run({"--field", "q", "reg"}, ideal);
  const Outcome over_2 = run({"--field", "gf2", "reg"}, ideal);
  EXPECT_EQ(over_q.report["result"]["linear"], true);
  EXPECT_EQ(over_2.report["result"]["linear"], false);
}

TEST(Cli, ParseErrorsExitOne) {
  const Outcome bad_json = run({"dual"}, R"({"ambient": 3,)");
  EXPECT_EQ(bad_json.code, 1);
  EXPECT_EQ(bad_json.report["error"]["kind"], "parse");
  EXPECT_NE(bad_json.err.find("byte"), std::string::npos);
  const Outcome bad_vertex = run({"dual"}, R"({"ambient":3,"facets":[[1,2],[4]]})");
  EXPECT_EQ(bad_vertex.code, 1);
  EXPECT_NE(bad_vertex.err.find("/facets/1/0"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"verify", "lemma-9.9"}).code, 1);
  EXPECT_EQ(run({"skeleton", "-f", data("dq.json")}).code, 1);
  EXPECT_EQ(run({"--field", "gf4", "betti", "-f", data("iex.json")}).code, 1);
  EXPECT_EQ(run({"quasitree", "-f", data("missing.json")}).code, 1);
  EXPECT_EQ(run({"skeleton", "--dim", "5", "-f", data("dq.json")}).code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ResourceCapExitsThree) {
  // Thirteen generators exceed the default Betti generator cap.
  Json big = {{"vars", 20}, {"generators", Json::array()}};
  for (int k = 1; k <= 13; ++k) {
    std::vector<int> e(20, 0);
    e[k - 1] = 1;
    e[k] = 1;
    e[k + 5] = 1;
    big["generators"].push_back(e);
  }
  const Outcome o = run({"betti"}, big.dump());
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.report["error"]["kind"], "resource");
}

TEST(Cli, VerifyPassesAndReportsCounts) {
  const Outcome o = run({"verify", "thm-3.3", "--seed", "7", "--max-n", "6", "--no-timing"});
  EXPECT_EQ(o.code, 0);
  EXPECT_GT(o.report["result"]["suites"][0]["instances"].get<int>(), 30000);
  const Outcome c = run({"verify", "cor-2.2", "--max-facets", "4", "--max-n", "6"});
  EXPECT_EQ(c.code, 0);
  const Outcome p = run({"verify", "thm-4.4", "--complex", data("dq.json"), "--max-power", "3"});
  EXPECT_EQ(p.code, 0);
}

TEST(Cli, VerifyFailureExitsTwoWithWitness) {
  const Outcome o = run({"verify", "thm-4.4", "--complex", data("dn.json"), "--max-power", "1"});
  EXPECT_EQ(o.code, 2);
  bool found = false;
  for (const Json& c : o.report["checks"]) {
    if (!c["pass"].get<bool>()) {
      found = true;
      ASSERT_FALSE(c["witness"].is_null());
      // The witness reproduces the failure through the single operation.
      const Outcome again = run({"quasitree"}, c["witness"].dump());
      EXPECT_EQ(again.code, 0);
      EXPECT_EQ(again.report["result"]["quasi_tree"], false);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, ReportsAreDeterministic) {
  const auto args = std::vector<std::string>{"verify", "thm-1.4c", "--seed", "3",
                                             "--samples", "50", "--no-timing"};
  std::istringstream in1, in2;
  std::ostringstream out1, out2, err;
  alexdual::cli::run(args, in1, out1, err);
  alexdual::cli::run(args, in2, out2, err);
  EXPECT_EQ(out1.str(), out2.str());
}

}  // namespace
