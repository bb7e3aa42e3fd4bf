#include "ndlogic/rule.hpp"

#include <set>

#include "ndlogic/error.hpp"

namespace ndlogic {

RuleSchema RuleSchema::one_dim(std::string name, FormulaSet antecedent, FormulaSet succedent) {
  return RuleSchema{std::move(name), 1, BStatement::make(std::move(antecedent), std::move(succedent), {}, {})};
}

RuleSchema RuleSchema::two_dim(std::string name, FormulaSet acc, FormulaSet nacc, FormulaSet rej, FormulaSet nrej) {
  return RuleSchema{std::move(name), 2,
                    BStatement::make(std::move(acc), std::move(nacc), std::move(rej), std::move(nrej))};
}

Statement1D RuleSchema::as_statement_1d() const {
  if (dimension != 1 || !body[Attitude::rej].empty() || !body[Attitude::nrej].empty()) {
    throw DimensionMismatchError("rule '" + name + "' is not one-dimensional");
  }
  return {body[Attitude::acc], body[Attitude::nacc]};
}

std::size_t RuleSchema::branching() const { return body[Attitude::nacc].size() + body[Attitude::nrej].size(); }

std::vector<std::string> RuleSchema::variables() const {
  std::set<std::string> vars;
  for (const auto& s : body.sets) {
    for (const auto& f : s) collect_variables(f, vars);
  }
  return {vars.begin(), vars.end()};
}

RuleSchema instantiate_rule(const RuleSchema& r, const Substitution& s) {
  return RuleSchema{r.name, r.dimension, substitute(r.body, s)};
}

std::string to_string(const RuleSchema& r) {
  if (r.dimension == 1) return r.name + ": " + to_string(r.as_statement_1d());
  return r.name + ": " + to_string(r.body);
}

}  // namespace ndlogic
