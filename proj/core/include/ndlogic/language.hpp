#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ndlogic {

/// A finite propositional signature: connective names with their arities,
/// plus optional infix spellings for binary connectives.
class Signature {
 public:
  Signature() = default;

  /// Throws InputError if the name is not an identifier, is already
  /// declared, or clashes with a grammar token.
  void add(std::string name, int arity);
  void set_notation(const std::string& connective, std::string infix);

  bool contains(std::string_view name) const;
  /// Arity of a declared connective; throws InputError otherwise.
  int arity(std::string_view name) const;

  /// Connective names in lexicographic order.
  std::vector<std::string> names() const;
  const std::map<std::string, int, std::less<>>& connectives() const { return arities_; }
  const std::map<std::string, std::string, std::less<>>& notation() const { return notation_; }

  /// Connective spelled by an infix token, or empty.
  std::string connective_for_infix(std::string_view token) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, int, std::less<>> arities_;
  std::map<std::string, std::string, std::less<>> notation_;
};

/// Immutable propositional formula: a variable or a connective applied to
/// arguments. Copies share structure; equality and ordering are syntactic.
///
/// Ordering puts variables first (by name), then compounds by size, then by
/// connective name and arguments. A subformula therefore always sorts before
/// the formulas containing it.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula apply(std::string connective, std::vector<Formula> args);

  bool is_var() const { return node_->is_var; }
  const std::string& symbol() const { return node_->symbol; }
  std::span<const Formula> args() const { return node_->args; }
  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    bool is_var = false;
    std::string symbol;
    std::vector<Formula> args;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

/// Simultaneous replacement of variables; unmapped variables stay put.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Formula>> init) : map_(init) {}

  void bind(const std::string& var, Formula f);
  /// Image of a variable (the variable itself if unbound).
  Formula operator()(const std::string& var) const;
  const std::map<std::string, Formula>& bindings() const { return map_; }
  bool empty() const { return map_.empty(); }

  /// The substitution applying `first` and then `this`.
  Substitution after(const Substitution& first) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Formula> map_;
};

Formula substitute(const Formula& f, const Substitution& s);
FormulaSet substitute(const FormulaSet& fs, const Substitution& s);

/// Distinct variables in order of first occurrence (left to right).
std::vector<std::string> variables(const Formula& f);
void collect_variables(const Formula& f, std::set<std::string>& out);

FormulaSet subformulas(const Formula& f);
FormulaSet subformulas(const FormulaSet& fs);

/// The canonical single variable of unary formulas.
inline constexpr std::string_view kUnaryVar = "p";

/// Unary formulas used to widen the subformula relation. Always holds `p`.
class ThetaSet {
 public:
  /// {p}
  ThetaSet();
  /// Throws InputError unless `p` is a member and no member mentions
  /// another variable.
  explicit ThetaSet(const FormulaSet& formulas);

  const FormulaSet& formulas() const { return formulas_; }

 private:
  FormulaSet formulas_;
};

/// Union over fs and theta of { sigma(theta) | sigma : p -> sub(phi) }.
FormulaSet gen_subformulas(const ThetaSet& theta, const FormulaSet& fs);

/// All formulas over `p` of nesting depth <= max_depth: depth-major, then by
/// connective name, then by argument positions in this same list.
std::vector<Formula> enumerate_unary_formulas(const Signature& sig, int max_depth);

}  // namespace ndlogic

template <>
struct std::hash<ndlogic::Formula> {
  std::size_t operator()(const ndlogic::Formula& f) const noexcept { return f.hash(); }
};
