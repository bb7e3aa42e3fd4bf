#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "ndlogic/error.hpp"
#include "ndlogic/json_io.hpp"
#include "ndlogic/random.hpp"

using namespace ndlogic;
using namespace testing_helpers;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(NDLOGIC_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kTiny = R"js({
  "signature": {"connectives": {"neg": 1}},
  "values": ["0", "1"],
  "designated": ["1"],
  "interpretation": {"neg": {"0": ["1"], "1": ["0", "1"]}}
})js";

}  // namespace

TEST(MatrixJson, GoldenFilesMatchBuiltins) {
  const auto& mci = logics::mci_artifacts();
  EXPECT_EQ(std::get<NdMatrix>(matrix_from_json(golden("mci5.json"))), mci.m5);
  EXPECT_EQ(std::get<NdMatrix>(matrix_from_json(golden("mci5-rej.json"))), mci.m5_rej);
  EXPECT_EQ(std::get<BMatrix>(matrix_from_json(golden("mci-b.json"))), mci.b5);
}

TEST(MatrixJson, RoundTrip) {
  const auto& mci = logics::mci_artifacts();
  EXPECT_EQ(std::get<NdMatrix>(matrix_from_json(matrix_to_json(mci.m5))), mci.m5);
  EXPECT_EQ(std::get<BMatrix>(matrix_from_json(matrix_to_json(mci.b5))), mci.b5);
  const auto m2 = logics::mk_matrix(2).matrix;
  EXPECT_EQ(std::get<NdMatrix>(matrix_from_json(matrix_to_json(m2))), m2);
  EXPECT_EQ(matrix_to_json(mci.b5), matrix_to_json(std::get<BMatrix>(matrix_from_json(matrix_to_json(mci.b5)))));
}

TEST(MatrixJson, Tiny) {
  const auto m = std::get<NdMatrix>(matrix_from_json(kTiny));
  EXPECT_EQ(m.algebra.values(), (std::vector<std::string>{"0", "1"}));
  const std::array<ValueId, 1> one{1};
  EXPECT_EQ(m.algebra.interpret("neg", one), ValueSet(0b11));
}

TEST(MatrixJson, Errors) {
  EXPECT_THROW(matrix_from_json("{"), InputError);
  EXPECT_THROW(matrix_from_json("[]"), InputError);
  // missing cell
  EXPECT_THROW(matrix_from_json(R"js({"signature":{"connectives":{"neg":1}},"values":["0","1"],"designated":[],
    "interpretation":{"neg":{"0":["1"]}}})js"),
               InputError);
  // unknown value in a cell
  EXPECT_THROW(matrix_from_json(R"js({"signature":{"connectives":{"neg":1}},"values":["0","1"],"designated":[],
    "interpretation":{"neg":{"0":["2"],"1":["0"]}}})js"),
               InputError);
  // unknown key
  EXPECT_THROW(matrix_from_json(R"js({"signature":{"connectives":{}},"values":["0"],"designated":[],
    "interpretation":{},"extra":1})js"),
               InputError);
  // table for an undeclared connective
  EXPECT_THROW(matrix_from_json(R"js({"signature":{"connectives":{}},"values":["0"],"designated":[],
    "interpretation":{"neg":{"0":["0"]}}})js"),
               InputError);
  // wrong tuple arity
  EXPECT_THROW(matrix_from_json(R"js({"signature":{"connectives":{"neg":1}},"values":["0"],"designated":[],
    "interpretation":{"neg":{"0,0":["0"]}}})js"),
               InputError);
}

TEST(SignatureJson, RoundTripAndInference) {
  const Signature& sig = mci_sig();
  EXPECT_EQ(signature_from_json(signature_to_json(sig)), sig);
  const std::vector<std::string> texts = {"g(p)", "imp(h(q),p)"};
  const Signature inferred = infer_signature(texts);
  EXPECT_EQ(inferred.arity("g"), 1);
  EXPECT_EQ(inferred.arity("imp"), 2);
  EXPECT_EQ(inferred.names().size(), 3u);
  const std::vector<std::string> clash = {"g(p)", "g(p,q)"};
  EXPECT_THROW(infer_signature(clash), ArityError);
}

TEST(StatementJson, OneAndTwoDimensional) {
  const Statement1D s = statement_from_json(R"js({"antecedent":["p","neg(p)"],"succedent":["q"]})js", mci_sig());
  EXPECT_EQ(s, st(S({"p", "neg(p)"}), S({"q"})));
  EXPECT_EQ(statement_from_json(statement_to_json(s), mci_sig()), s);

  const BStatement b = bstatement_from_json(R"js({"nacc":["cons(neg(cons(p)))"]})js", mci_sig());
  EXPECT_EQ(b, bst({}, S({"cons(neg(cons(p)))"}), {}, {}));
  FormulaSampler gen(mci_sig(), {"p", "q"}, 3, 99);
  for (int i = 0; i < 50; ++i) {
    const BStatement r = gen.bstatement(3);
    EXPECT_EQ(bstatement_from_json(bstatement_to_json(r), mci_sig()), r);
  }
  EXPECT_EQ(formulas_from_json(R"js(["p","(p -> q)"])js", mci_sig()), S({"p", "imp(p,q)"}));
  EXPECT_EQ(statement_formula_texts(R"js({"acc":["g(p)"],"nrej":["h(q)"]})js"), (std::vector<std::string>{"g(p)", "h(q)"}));
}

TEST(StatementJson, Errors) {
  EXPECT_THROW(statement_from_json(R"js({"antecedent":["and(p)"],"succedent":[]})js", mci_sig()), ArityError);
  // an absent side is empty
  EXPECT_EQ(statement_from_json(R"js({"antecedent":["p"]})js", mci_sig()), st(S({"p"}), {}));
  EXPECT_THROW(statement_from_json(R"js({"antecedent":["p"],"acc":[]})js", mci_sig()), InputError);
  EXPECT_THROW(bstatement_from_json(R"js({"acc":["p"],"bogus":[]})js", mci_sig()), InputError);
  EXPECT_THROW(bstatement_from_json(R"js({"acc":"p"})js", mci_sig()), InputError);
  EXPECT_THROW(formulas_from_json(R"js("p")js", mci_sig()), InputError);
}

TEST(CalculusJson, RoundTrip) {
  const Calculus c = logics::hmci2d();
  const Calculus back = calculus_from_json(calculus_to_json(c));
  EXPECT_EQ(back.name, c.name);
  EXPECT_EQ(back.dimension, 2);
  EXPECT_EQ(back.rules, c.rules);
  ASSERT_TRUE(back.theta);
  EXPECT_EQ(back.theta->formulas(), c.theta->formulas());

  const Calculus ex = logics::example2().calculus;
  EXPECT_EQ(calculus_from_json(calculus_to_json(ex)).rules, ex.rules);
  EXPECT_EQ(signature_of(ex).names(), (std::vector<std::string>{"g", "h"}));
}

TEST(CalculusJson, SpecShape) {
  const Calculus c = calculus_from_json(R"js({"name":"tiny","dimension":2,"theta":["p","cons(p)"],
    "rules":[{"name":"neg2","acc":["neg(p)","cons(p)","p"],"nacc":[],"rej":[],"nrej":[]}]})js");
  ASSERT_EQ(c.rules.size(), 1u);
  EXPECT_EQ(c.rules[0], *logics::hmci2d().find("neg2"));
}

TEST(CalculusJson, Errors) {
  EXPECT_THROW(calculus_from_json(R"js({"name":"x","dimension":3,"rules":[]})js"), InputError);
  EXPECT_THROW(calculus_from_json(R"js({"name":"x","dimension":1,"rules":[{"name":"r","acc":[],"nacc":["p"],"rej":["p"],"nrej":[]}]})js"),
               InputError);
  EXPECT_THROW(calculus_from_json(R"js({"name":"x","dimension":2,"rules":[{"name":"r"},{"name":"r"}]})js"), InputError);
  EXPECT_THROW(calculus_from_json(R"js({"name":"x","dimension":2,"theta":["q"],"rules":[]})js"), InputError);
}

TEST(ProofJson, GoldenTreesMatchTranscriptions) {
  const auto proofs = logics::reference_derivations();
  const Calculus c = logics::hmci2d();
  for (const auto& p : proofs) {
    const DerivationTree t = proof_from_json(golden("derivation-" + p.name + ".json"), mci_sig());
    EXPECT_EQ(t, p.tree) << p.name;
    EXPECT_TRUE(check_proof(c, p.statement, t)) << p.name;
    EXPECT_EQ(proof_from_json(proof_to_json(p.tree), mci_sig()), p.tree);
  }
}

TEST(ProofJson, Errors) {
  EXPECT_THROW(proof_from_json(R"js({"acc":["p"],"rej":[],"children":[{"star":false}]})js", mci_sig()), InputError);
  EXPECT_THROW(proof_from_json(R"js({"acc":["p"],"rej":[],"rule":"x","subst":{"p":"and(p)"},"children":[]})js", mci_sig()),
               InputError);
}
