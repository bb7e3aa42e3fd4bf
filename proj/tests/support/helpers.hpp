#pragma once

#include <initializer_list>
#include <string_view>

#include "ndlogic/logics.hpp"
#include "ndlogic/statement.hpp"
#include "ndlogic/syntax.hpp"

namespace testing_helpers {

using namespace ndlogic;

inline const Signature& mci_sig() {
  static const Signature s = logics::sigma_mci();
  return s;
}

inline const Signature& ex1_sig() {
  static const Signature s = logics::sigma_ex1();
  return s;
}

inline Formula F(std::string_view s, const Signature& sig = mci_sig()) { return parse_formula(s, sig); }

inline FormulaSet S(std::initializer_list<std::string_view> xs, const Signature& sig = mci_sig()) {
  FormulaSet out;
  for (auto x : xs) out.insert(parse_formula(x, sig));
  return out;
}

inline Statement1D st(FormulaSet ante, FormulaSet succ) { return Statement1D{std::move(ante), std::move(succ)}; }

inline BStatement bst(FormulaSet acc, FormulaSet nacc, FormulaSet rej, FormulaSet nrej) {
  return BStatement::make(std::move(acc), std::move(nacc), std::move(rej), std::move(nrej));
}

}  // namespace testing_helpers
