#pragma once

#include <string>
#include <vector>

#include "ndlogic/statement.hpp"

namespace ndlogic {

/// Schematic rule. Dimension-1 rules use only the acc (antecedent) and nacc
/// (succedent) slots. An instance's succedent formulas spawn one branch
/// each: nacc formulas join the accepted component of the node label, nrej
/// formulas the rejected one.
struct RuleSchema {
  std::string name;
  int dimension = 2;
  BStatement body;

  static RuleSchema one_dim(std::string name, FormulaSet antecedent, FormulaSet succedent);
  static RuleSchema two_dim(std::string name, FormulaSet acc, FormulaSet nacc, FormulaSet rej, FormulaSet nrej);

  Statement1D as_statement_1d() const;
  /// Number of branches an instance opens (succedent size).
  std::size_t branching() const;
  /// Schema variables, sorted.
  std::vector<std::string> variables() const;

  friend bool operator==(const RuleSchema&, const RuleSchema&) = default;
};

RuleSchema instantiate_rule(const RuleSchema& r, const Substitution& s);

std::string to_string(const RuleSchema& r);

}  // namespace ndlogic
