#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndlogic/rule.hpp"
#include "ndlogic/statement.hpp"

namespace ndlogic {

/// A schematic Hilbert-style system of dimension 1 (SET-SET) or 2.
struct Calculus {
  std::string name;
  int dimension = 2;
  std::vector<RuleSchema> rules;
  std::optional<ThetaSet> theta;

  /// nullptr if absent.
  const RuleSchema* find(std::string_view rule) const;
  /// Throws InputError on duplicate names or rules of the wrong dimension.
  void validate() const;
};

/// The same rules read as a two-dimensional system with empty rej/nrej slots.
Calculus as_two_dimensional(const Calculus& c);

/// Pair of formula sets labelling a non-discontinued node. One-dimensional
/// derivations leave `rej` empty.
struct NodeLabel {
  FormulaSet acc;
  FormulaSet rej;

  bool contains(const NodeLabel& other) const;
  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Derivation tree node. `label` is empty for the discontinuation mark (*).
/// An expanded node records the rule, the substitution, and one child per
/// succedent formula of the instance (a single * child when the succedent
/// is empty).
struct DerivationTree {
  std::optional<NodeLabel> label;
  std::string rule;
  Substitution substitution;
  std::vector<DerivationTree> children;

  static DerivationTree star() { return {}; }
  static DerivationTree leaf(NodeLabel l) { return DerivationTree{std::move(l), {}, {}, {}}; }

  bool is_star() const { return !label.has_value(); }
  bool is_leaf() const { return children.empty(); }
  std::size_t node_count() const;

  friend bool operator==(const DerivationTree&, const DerivationTree&) = default;
};

/// Labels of the children produced by expanding `parent` with `instance`:
/// nacc formulas first (joining acc), then nrej formulas (joining rej).
std::vector<std::optional<NodeLabel>> expansion_labels(const NodeLabel& parent, const RuleSchema& instance);

/// Every expansion matches its recorded rule instance and no * node has
/// children. Throws UnknownRuleError for rule names outside the calculus.
bool check_derivation(const Calculus& c, const DerivationTree& t);

/// Derivation check plus: root label within the antecedent pair and every
/// branch ending in * or in a label meeting the succedent pair.
/// Throws DimensionMismatchError if the calculus is not two-dimensional.
bool check_proof(const Calculus& c, const BStatement& s, const DerivationTree& t);
/// Throws DimensionMismatchError if the calculus is not one-dimensional.
bool check_proof(const Calculus& c, const Statement1D& s, const DerivationTree& t);

/// Concrete rule instance, remembering its schema and substitution.
struct RuleInstance {
  std::size_t rule_index = 0;
  Substitution substitution;
  RuleSchema instance;
};

/// All instances with every formula inside `fence`, in rule order then
/// substitution order (variables sorted, fence formulas in set order).
std::vector<RuleInstance> fence_instances(const Calculus& c, const FormulaSet& fence);

/// Antecedent contained in the label, and either closing (empty succedent)
/// or introducing only formulas absent from their target component.
bool is_applicable(const RuleSchema& instance, const NodeLabel& label);

/// Orders instances: closing first, then fewer branches, keeping rule and
/// substitution order among equals.
void order_instances(std::vector<RuleInstance>& instances);

/// Applicable instances at `label` restricted to `fence`, ordered by
/// order_instances.
std::vector<RuleInstance> applicable_instances(const Calculus& c, const NodeLabel& label, const FormulaSet& fence);

}  // namespace ndlogic
