#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "ndlogic/entailment.hpp"
#include "ndlogic/json_io.hpp"

using namespace testing_helpers;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = ndlogic::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::string kGolden = NDLOGIC_GOLDEN_DIR;

}  // namespace

TEST(Cli, CheckParaconsistency) {
  const Result r = run({"check", "--matrix", "builtin:mci5", "--statement",
                     R"js({"antecedent":["p","neg(p)"],"succedent":["q"]})js"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("invalid\ncountermodel:\n", 0), 0u) << r.out;
  // the printed countermodel is the library's
  const auto v = ndlogic::entails_1d(ndlogic::logics::mci_artifacts().m5, st(S({"p", "neg(p)"}), S({"q"})));
  const auto& a = ndlogic::logics::mci_artifacts().m5.algebra;
  EXPECT_TRUE(has(r.out, "  p = " + a.name((*v.countermodel)(F("p")))));
  EXPECT_TRUE(has(r.out, "  q = " + a.name((*v.countermodel)(F("q")))));
}

TEST(Cli, CheckValidAndAspects) {
  EXPECT_EQ(run({"check", "--matrix", "builtin:mci5", "--statement",
                 R"js({"antecedent":["cons(p)","p","neg(p)"],"succedent":[]})js"})
                .out,
            "valid\n");
  EXPECT_EQ(run({"check", "--matrix", "builtin:mci-b", "--bstatement", R"js({"acc":["p"],"rej":["p"]})js"}).code, 1);
  EXPECT_EQ(run({"check", "--matrix", "builtin:ex2", "--bstatement", R"js({"acc":["p"],"rej":["p"]})js"}).code, 0);
  EXPECT_EQ(run({"check", "--matrix", "builtin:mci-b", "--aspect", "f", "--statement",
                 R"js({"antecedent":["p"],"succedent":["p"]})js"})
                .code,
            0);
  EXPECT_EQ(run({"check", "--matrix", "builtin:mk:1", "--statement",
                 R"js({"antecedent":[],"succedent":["cons(neg(neg(cons(p))))"]})js"})
                .code,
            1);
}

TEST(Cli, ProveThirdDerivation) {
  const Result r = run({"prove", "--calculus", "builtin:hmci2d", "--bstatement",
                     R"js({"acc":[],"nacc":["cons(neg(cons(p)))"],"rej":[],"nrej":[]})js"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("proved: ", 0), 0u) << r.out;
  EXPECT_TRUE(has(r.out, "+acc cons(neg(cons(p)))"));
}

TEST(Cli, ProveOutputsAreMachineReadable) {
  const std::vector<std::string> base = {"prove", "--calculus", "builtin:hmci2d", "--bstatement",
                                         R"js({"acc":["and(p,neg(p))"],"nacc":["neg(cons(p))"]})js"};
  auto dot_args = base;
  dot_args.push_back("--dot");
  const Result dot = run(dot_args);
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph proof {", 0), 0u) << dot.out;
  EXPECT_TRUE(has(dot.err, "proved: "));

  auto json_args = base;
  json_args.push_back("--json");
  const Result json = run(json_args);
  EXPECT_EQ(json.code, 0);
  const auto tree = ndlogic::proof_from_json(json.out, mci_sig());
  EXPECT_TRUE(ndlogic::check_proof(ndlogic::logics::hmci2d(),
                                   bst(S({"and(p,neg(p))"}), S({"neg(cons(p))"}), {}, {}), tree));

  auto both = base;
  both.push_back("--dot");
  both.push_back("--json");
  EXPECT_EQ(run(both).code, 2);
}

TEST(Cli, ProveSaturatedAndTheta) {
  const Result r = run({"prove", "--calculus", "builtin:hmci2d", "--bstatement", R"js({"acc":["p"],"nacc":["q"]})js"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("saturated", 0), 0u) << r.out;
  EXPECT_TRUE(has(r.out, "open label: acc {"));

  const Result ex = run({"prove", "--calculus", "builtin:ex2-calc", "--theta", R"js(["p"])js", "--bstatement",
                      R"js({"acc":["h(h(h(p)))"],"nacc":["p","g(p)"]})js"});
  EXPECT_EQ(ex.code, 0) << ex.out << ex.err;

  const Result one = run({"prove", "--calculus", "builtin:ex1-rules:2", "--statement",
                       R"js({"antecedent":["h(h(p))"],"succedent":["p","g(p)"]})js"});
  EXPECT_EQ(one.code, 0) << one.out << one.err;

  const Result limited = run({"prove", "--calculus", "builtin:hmci2d", "--max-nodes", "2", "--bstatement",
                           R"js({"nacc":["cons(neg(cons(p)))"]})js"});
  EXPECT_EQ(limited.code, 1);
  EXPECT_EQ(limited.out.rfind("limit", 0), 0u) << limited.out;
}

TEST(Cli, CheckProofGoldenFile) {
  const Result r = run({"check-proof", "--calculus", "builtin:hmci2d", "--bstatement",
                     R"js({"acc":["and(p,neg(p))"],"nacc":["neg(cons(p))"]})js", "--proof",
                     "@" + kGolden + "/derivation-and-neg-to-neg-cons.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "proof checks")) << r.out;
  const Result wrong = run({"check-proof", "--calculus", "builtin:hmci2d", "--bstatement",
                         R"js({"acc":["and(p,neg(p))"],"nacc":["q"]})js", "--proof",
                         kGolden + "/derivation-and-neg-to-neg-cons.json"});
  EXPECT_EQ(wrong.code, 1);
  EXPECT_TRUE(has(wrong.out, "does not check"));
}

TEST(Cli, ProductThenSeparators) {
  const auto dir = std::filesystem::temp_directory_path() / "ndlogic_cli_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "b.json").string();
  const Result p = run({"product", "builtin:mci5", "builtin:mci5-rej", "-o", path});
  ASSERT_EQ(p.code, 0) << p.err;
  const Result s = run({"separators", "--matrix", path, "--depth", "1"});
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_TRUE(has(s.out, "\nsufficiently expressive up to depth 1\n")) << s.out;
  EXPECT_EQ(s.out, run({"separators", "--matrix", "builtin:mci-b", "--depth", "1"}).out);

  const Result m5 = run({"separators", "--matrix", "builtin:mci5", "--depth", "2"});
  EXPECT_EQ(m5.code, 1);
  EXPECT_TRUE(has(m5.out, "none up to depth 2"));
  std::filesystem::remove_all(dir);

  EXPECT_EQ(run({"product", "builtin:mci5", "builtin:mk:1"}).code, 2);
}

TEST(Cli, ValidateCalculus) {
  const Result r = run({"validate-calculus", "--calculus", "builtin:hmci2d", "--matrix", "builtin:mci-b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "28/28 rules valid"));
  const Result bad = run({"validate-calculus", "--calculus", "builtin:hmci:3", "--matrix", "builtin:mk:1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has(bad.out, "ci_2: invalid")) << bad.out;
  EXPECT_EQ(run({"validate-calculus", "--calculus", "builtin:hmci2d", "--matrix", "builtin:mci5"}).code, 2);
}

TEST(Cli, Builtins) {
  const Result list = run({"builtin"});
  EXPECT_EQ(list.code, 0);
  for (const char* n : {"mci5", "hmci2d", "ex2-calc"}) EXPECT_TRUE(has(list.out, std::string(n) + "\n")) << n;
  const Result m = run({"builtin", "mci5"});
  EXPECT_EQ(std::get<ndlogic::NdMatrix>(ndlogic::matrix_from_json(m.out)), ndlogic::logics::mci_artifacts().m5);
  const Result c = run({"builtin", "cplpos", "--calculus"});
  EXPECT_EQ(ndlogic::calculus_from_json(c.out).rules.size(), 10u);
  EXPECT_EQ(run({"builtin", "nope"}).code, 2);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "--bogus"}).code, 2);
  EXPECT_EQ(run({"check", "--matrix", "builtin:mci5"}).code, 2);
  const Result missing = run({"check", "--matrix", "/no/such/file.json", "--statement", "{}"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err.rfind("ndlogic: ", 0), 0u);
  EXPECT_EQ(std::count(missing.err.begin(), missing.err.end(), '\n'), 1);
  EXPECT_EQ(run({"check", "--matrix", "builtin:mci5", "--statement", R"js({"antecedent":["and(p)"]})js"}).code, 2);
  EXPECT_EQ(run({"check", "--matrix", "builtin:mci5", "--bstatement", R"js({"acc":["p"]})js"}).code, 2);
  EXPECT_EQ(run({"prove", "--calculus", "builtin:hmci2d", "--statement", R"js({"antecedent":["p"]})js"}).code, 2);
  EXPECT_EQ(run({"prove", "--calculus", "builtin:hmci2d", "--theta", R"js(["q"])js", "--bstatement", "{}"}).code, 2);
  EXPECT_EQ(run({"separators", "--matrix", "builtin:mci5", "--depth", "-1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"prove", "--calculus", "builtin:hmci2d", "--bstatement",
                                         R"js({"acc":["neg(cons(p))"],"nacc":["and(p,neg(p))"]})js"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
