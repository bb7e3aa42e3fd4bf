#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ndlogic/error.hpp"
#include "ndlogic/separation.hpp"

using namespace ndlogic;
using namespace testing_helpers;

namespace {

const logics::MciArtifacts& mci() { return logics::mci_artifacts(); }

const PairSeparation& pair(const ExpressivenessReport& r, const NdAlgebra& a, const char* x, const char* y) {
  const ValueId i = a.value_id(x), j = a.value_id(y);
  for (const auto& p : r.pairs) {
    if ((p.first == i && p.second == j) || (p.first == j && p.second == i)) return p;
  }
  throw std::logic_error("pair not in report");
}

}  // namespace

TEST(UnaryImages, NegationAndConsistency) {
  const auto& a = mci().m5.algebra;
  const auto neg = unary_images(a, F("neg(p)"));
  ASSERT_EQ(neg.size(), 5u);
  EXPECT_EQ(a.names(neg[a.value_id("f")]), (std::vector<std::string>{"I", "t"}));
  EXPECT_EQ(a.names(neg[a.value_id("t")]), (std::vector<std::string>{"f"}));
  const auto cons = unary_images(a, F("cons(p)"));
  EXPECT_EQ(a.names(cons[a.value_id("I")]), (std::vector<std::string>{"F"}));
  EXPECT_EQ(a.names(cons[a.value_id("T")]), (std::vector<std::string>{"T"}));
}

TEST(SeparatorForPair, Examples) {
  const auto& b5 = mci().b5;
  const auto& a = b5.algebra;
  const auto it = separator_for_pair(b5, a.value_id("I"), a.value_id("T"), 1);
  ASSERT_TRUE(it);
  EXPECT_EQ(it->separator, F("cons(p)"));
  EXPECT_EQ(it->set, Attitude::acc);
  EXPECT_FALSE(it->first_inside);  // cons(I) = F is outside, cons(T) = T inside

  const auto tt = separator_for_pair(b5, a.value_id("t"), a.value_id("T"), 0);
  ASSERT_TRUE(tt);
  EXPECT_EQ(tt->separator, F("p"));
  EXPECT_EQ(tt->set, Attitude::rej);
  EXPECT_FALSE(tt->first_inside);

  EXPECT_FALSE(separator_for_pair(mci().m5, a.value_id("t"), a.value_id("T"), 3));
  EXPECT_FALSE(separator_for_pair(b5, a.value_id("I"), a.value_id("T"), 0));
  EXPECT_THROW(separator_for_pair(b5, 1, 1, 2), InputError);
}

TEST(ExpressivenessReport, MciProduct) {
  const auto& b5 = mci().b5;
  const auto r = expressiveness_report(b5, 1);
  EXPECT_TRUE(r.sufficiently_expressive());
  ASSERT_EQ(r.pairs.size(), 10u);
  for (const auto& p : r.pairs) {
    ASSERT_TRUE(p.separation);
    const bool it = b5.algebra.name(p.first) == "I" && b5.algebra.name(p.second) == "T";
    EXPECT_EQ(p.separation->separator, it ? F("cons(p)") : F("p"));
  }
  EXPECT_FALSE(expressiveness_report(b5, 0).sufficiently_expressive());
}

TEST(ExpressivenessReport, MciAcceptanceOnly) {
  const auto& m5 = mci().m5;
  const auto r = expressiveness_report(m5, 3);
  EXPECT_FALSE(r.sufficiently_expressive());
  EXPECT_FALSE(pair(r, m5.algebra, "t", "T").separation);
  EXPECT_FALSE(pair(r, m5.algebra, "f", "F").separation);
  EXPECT_TRUE(pair(r, m5.algebra, "I", "T").separation);
}

TEST(ExpressivenessReport, ExampleOne) {
  const auto m = logics::example1().matrix;
  const auto r = expressiveness_report(m, 2);
  EXPECT_FALSE(r.sufficiently_expressive());
  EXPECT_FALSE(pair(r, m.algebra, "f", "bot").separation);
  EXPECT_TRUE(pair(r, m.algebra, "t", "f").separation);
}

TEST(ExpressivenessReport, ExampleTwoAtDepthZero) {
  const auto b = logics::example2().matrix;
  const auto r = expressiveness_report(b, 0);
  EXPECT_TRUE(r.sufficiently_expressive());
  for (const auto& p : r.pairs) EXPECT_EQ(p.separation->separator, F("p"));
}

TEST(ExpressivenessReport, TextMentionsBound) {
  const auto& m5 = mci().m5;
  const std::string text = to_string(expressiveness_report(m5, 1), m5.algebra);
  EXPECT_NE(text.find("none up to depth 1"), std::string::npos) << text;
  const std::string ok = to_string(expressiveness_report(mci().b5, 1), mci().b5.algebra);
  EXPECT_NE(ok.find("sufficiently expressive up to depth 1"), std::string::npos) << ok;
  EXPECT_EQ(ok.find("not shown"), std::string::npos) << ok;
}

// A separator reported by the search really separates, checked from the images.
TEST(ExpressivenessReport, ReportedSeparatorsSeparate) {
  const auto& b5 = mci().b5;
  for (const auto& p : expressiveness_report(b5, 1).pairs) {
    const auto& s = *p.separation;
    const auto img = unary_images(b5.algebra, s.separator);
    const ValueSet X = s.set == Attitude::acc ? b5.designated : b5.antidesignated;
    const ValueSet out = X.complement(5);
    const ValueId in_id = s.first_inside ? p.first : p.second;
    const ValueId out_id = s.first_inside ? p.second : p.first;
    EXPECT_TRUE(img[in_id].subset_of(X));
    EXPECT_TRUE(img[out_id].subset_of(out));
  }
}
