#include <gtest/gtest.h>

#include <array>

#include "ndlogic/error.hpp"
#include "ndlogic/logics.hpp"
#include "ndlogic/matrix.hpp"

using namespace ndlogic;

namespace {

NdAlgebra two_valued_neg() {
  Signature s;
  s.add("neg", 1);
  return NdAlgebra(s, {"0", "1"});
}

ValueSet vs(const NdAlgebra& a, std::initializer_list<const char*> names) {
  ValueSet out;
  for (auto n : names) out.insert(a.value_id(n));
  return out;
}

}  // namespace

TEST(ValueSet, BasicOps) {
  ValueSet s;
  EXPECT_TRUE(s.empty());
  s.insert(0);
  s.insert(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.members(), (std::vector<ValueId>{0, 3}));
  EXPECT_EQ(s.complement(4), ValueSet(0b0110));
  EXPECT_TRUE(ValueSet(0b0001).subset_of(s));
  EXPECT_EQ(ValueSet::all(64).size(), 64u);
  EXPECT_EQ((ValueSet(0b11) & ValueSet(0b10)), ValueSet(0b10));
}

TEST(NdAlgebra, ConstructionErrors) {
  Signature s;
  EXPECT_THROW(NdAlgebra(s, {}), InputError);
  EXPECT_THROW(NdAlgebra(s, {"a", "a"}), InputError);
  EXPECT_THROW(NdAlgebra(s, {"a,b"}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
  EXPECT_THROW(NdAlgebra(s, many), InputError);
}

TEST(NdAlgebra, SetAndInterpret) {
  NdAlgebra a = two_valued_neg();
  const std::array<ValueId, 1> zero{0};
  EXPECT_TRUE(a.interpret("neg", zero).empty());
  a.set("neg", zero, ValueSet::single(1));
  EXPECT_EQ(a.interpret("neg", zero), ValueSet::single(1));
  EXPECT_THROW(a.set("neg", zero, ValueSet(0b100)), InputError);
  EXPECT_THROW(a.interpret("and", zero), InputError);
  const std::array<ValueId, 2> two{0, 1};
  EXPECT_THROW(a.interpret("neg", two), ArityError);
  EXPECT_THROW(a.value_id("2"), InputError);
}

TEST(NdAlgebra, CellIndexRoundTrip) {
  const auto& alg = logics::mci_artifacts().m5.algebra;
  const auto& t = alg.table("imp");
  for (std::size_t i = 0; i < t.cells.size(); ++i) EXPECT_EQ(alg.cell_index(t, alg.cell_args(t, i)), i);
  // first argument most significant
  const std::array<ValueId, 2> args{1, 2};
  EXPECT_EQ(alg.cell_index(t, args), 1u * 5 + 2);
}

TEST(CheckTotal, Examples) {
  EXPECT_TRUE(check_total(logics::mci_artifacts().m5.algebra));
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(check_total(logics::mk_matrix(k).matrix.algebra));
  NdAlgebra a = two_valued_neg();
  const std::array<ValueId, 1> zero{0}, one{1};
  a.set("neg", zero, ValueSet::single(1));
  EXPECT_FALSE(check_total(a));
  a.set("neg", one, ValueSet::single(0));
  EXPECT_TRUE(check_total(a));
  EXPECT_TRUE(is_deterministic(a));
  EXPECT_FALSE(is_deterministic(logics::mci_artifacts().m5.algebra));
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_deterministic(logics::mk_matrix(k).matrix.algebra));
}

TEST(BProduct, MciProduct) {
  const auto& mci = logics::mci_artifacts();
  const BMatrix b = b_product(mci.m5, mci.m5_rej);
  const auto& alg = b.algebra;
  EXPECT_EQ(b.designated, vs(alg, {"I", "T", "t"}));
  EXPECT_EQ(b.antidesignated, vs(alg, {"f", "I", "T"}));
  EXPECT_EQ(b, mci.b5);
}

TEST(BProduct, SameMatrixTwice) {
  const auto& m5 = logics::mci_artifacts().m5;
  const BMatrix b = b_product(m5, m5);
  EXPECT_EQ(b.designated, b.antidesignated);
}

TEST(BProduct, ExampleOneWithRejection) {
  const auto ex1 = logics::example1().matrix;
  NdMatrix rej = ex1;
  rej.designated = ValueSet::single(ex1.algebra.value_id("f"));
  const BMatrix b = b_product(ex1, rej);
  EXPECT_EQ(b, logics::example2().matrix);
}

TEST(BProduct, RejectsDifferentAlgebras) {
  const auto& mci = logics::mci_artifacts();
  NdMatrix other = mci.m5_rej;
  const std::array<ValueId, 1> f{0};
  other.algebra.set("neg", f, ValueSet::single(4));
  EXPECT_THROW(b_product(mci.m5, other), AlgebraMismatchError);
  EXPECT_THROW(b_product(mci.m5, logics::mk_matrix(1).matrix), AlgebraMismatchError);
  EXPECT_THROW(b_product(logics::example1().matrix, logics::mk_matrix(1).matrix), AlgebraMismatchError);
}

TEST(StrongHom, PositiveFragmentOntoBoolean) {
  const NdMatrix m1 = logics::mk_matrix(1).matrix;
  const NdMatrix boolean = logics::boolean_positive();
  const std::map<std::string, std::string> h{{"1", "F"}, {"2", "F"}, {"3", "T"}, {"4", "T"}};
  Signature positive;
  positive.add("and", 2);
  positive.add("or", 2);
  positive.add("imp", 2);
  const auto r = check_strong_hom(m1, boolean, h, positive);
  EXPECT_TRUE(r.holds) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_TRUE(is_surjective(m1, boolean, h));
}

TEST(StrongHom, ConsistencyBreaksIt) {
  const NdMatrix m1 = logics::mk_matrix(1).matrix;
  NdMatrix boolean = logics::boolean_positive();
  // Give the target a consistency operator so the failure is about the
  // designation split, not a missing table.
  Signature sig = boolean.algebra.signature();
  sig.add("cons", 1);
  NdAlgebra alg(sig, boolean.algebra.values());
  for (const auto& name : boolean.algebra.signature().names()) {
    const auto& t = boolean.algebra.table(name);
    for (std::size_t i = 0; i < t.cells.size(); ++i) alg.set(name, boolean.algebra.cell_args(t, i), t.cells[i]);
  }
  for (ValueId v = 0; v < 2; ++v) {
    const std::array<ValueId, 1> a{v};
    alg.set("cons", a, ValueSet::single(alg.value_id("T")));
  }
  const NdMatrix target{alg, boolean.designated};
  const std::map<std::string, std::string> h{{"1", "F"}, {"2", "F"}, {"3", "T"}, {"4", "T"}};
  Signature with_cons;
  with_cons.add("and", 2);
  with_cons.add("cons", 1);
  const auto r = check_strong_hom(m1, target, h, with_cons);
  EXPECT_FALSE(r.holds);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("cons"), std::string::npos);

  // the bundled two-valued matrix has no cons table at all
  EXPECT_FALSE(check_strong_hom(m1, logics::boolean_positive(), h, with_cons).holds);
}

TEST(StrongHom, IdentityAndDesignation) {
  const auto& m5 = logics::mci_artifacts().m5;
  std::map<std::string, std::string> id;
  for (const auto& v : m5.algebra.values()) id[v] = v;
  EXPECT_TRUE(check_strong_hom(m5, m5, id, m5.algebra.signature()).holds);
  EXPECT_TRUE(is_surjective(m5, m5, id));
  // identity into the rejection matrix fails on designation only
  const auto r = check_strong_hom(m5, logics::mci_artifacts().m5_rej, id, Signature{});
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.violations.size(), 2u);  // f and t flip
  std::map<std::string, std::string> partial = id;
  partial.erase("I");
  EXPECT_FALSE(check_strong_hom(m5, m5, partial, Signature{}).holds);
  EXPECT_FALSE(is_surjective(m5, m5, partial));
}
