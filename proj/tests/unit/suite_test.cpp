#include <gtest/gtest.h>

#include <set>

#include "ndlogic/suite.hpp"

using namespace ndlogic;

namespace {

const SuiteReport& fresh() {
  static const SuiteReport r = verify_paper_suite();
  return r;
}

const SuiteItem* item(const SuiteReport& r, const std::string& name) {
  for (const auto& i : r.items) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

}  // namespace

TEST(Suite, FreshCheckoutPasses) {
  const auto& r = fresh();
  for (const auto& i : r.items) EXPECT_TRUE(i.passed) << i.name << ": " << i.detail;
  EXPECT_TRUE(r.all_passed());
  for (int c = 1; c <= 11; ++c) EXPECT_TRUE(r.criterion_passed(c)) << c;
  EXPECT_FALSE(r.criterion_passed(12));
}

TEST(Suite, HasAtLeastTwelveDistinctItems) {
  std::set<std::string> names;
  for (const auto& i : fresh().items) names.insert(i.name);
  EXPECT_GE(names.size(), 12u);
  EXPECT_EQ(names.size(), fresh().items.size());
}

TEST(Suite, ReportText) {
  const std::string text = to_string(fresh(), false);
  EXPECT_EQ(text.rfind("PASS", 0), 0u);
  EXPECT_EQ(text.find(" ms)"), std::string::npos);
  EXPECT_NE(to_string(fresh(), true).find(" ms)"), std::string::npos);
  // stable apart from timings
  EXPECT_EQ(text, to_string(verify_paper_suite(), false));
}

TEST(Suite, CorruptedDesignationFails) {
  SuiteInputs in;
  auto& b5 = in.mci.b5;
  b5.designated = ValueSet::single(b5.algebra.value_id("I")) | ValueSet::single(b5.algebra.value_id("T"));
  const SuiteReport r = verify_paper_suite(in);
  EXPECT_FALSE(r.all_passed());
  for (const char* name : {"b5-separators", "hmci2d-soundness", "mci-tables"}) {
    const SuiteItem* i = item(r, name);
    ASSERT_NE(i, nullptr) << name;
    EXPECT_FALSE(i->passed) << name;
  }
  // the one-dimensional items do not look at b5
  EXPECT_TRUE(item(r, "itneg-closed-form")->passed);
  EXPECT_TRUE(item(r, "chain-axioms")->passed);
}
