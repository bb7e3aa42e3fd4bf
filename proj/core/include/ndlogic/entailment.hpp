#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndlogic/matrix.hpp"
#include "ndlogic/rule.hpp"
#include "ndlogic/statement.hpp"

namespace ndlogic {

/// Coherent assignment of values to a subformula-closed set of formulas.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::vector<Formula> domain, std::vector<ValueId> values);

  /// Domain in canonical formula order (variables first).
  const std::vector<Formula>& domain() const { return domain_; }
  const std::vector<ValueId>& values() const { return values_; }
  /// Throws InputError if f is outside the domain.
  ValueId operator()(const Formula& f) const;
  std::optional<ValueId> find(const Formula& f) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Formula> domain_;
  std::vector<ValueId> values_;
};

/// True iff the domain is closed under immediate subformulas and every
/// compound's value lies in its connective's cell.
bool is_coherent(const NdAlgebra& alg, const Valuation& v);

struct Verdict {
  bool valid = true;
  std::optional<Valuation> countermodel;
};

/// All coherent valuations on sub(fs), in lexicographic order over the
/// canonical domain order and declared value order.
/// Throws NonTotalAlgebraError for partial algebras.
std::vector<Valuation> coherent_valuations(const NdAlgebra& alg, const FormulaSet& fs);

/// { v(f) | v coherent, v(x_i) = inputs_i } where x_1 < x_2 < ... are the
/// variables of f in canonical (sorted) order.
/// Throws ArityError if inputs.size() differs from the number of variables.
ValueSet induced_multifunction(const NdAlgebra& alg, const Formula& f, std::span<const ValueId> inputs);

Verdict entails_1d(const NdMatrix& m, const Statement1D& s);
Verdict b_entails(const BMatrix& b, const BStatement& s);

enum class Aspect { t, f };
Verdict aspect_entails(const BMatrix& b, Aspect aspect, const Statement1D& s);

/// The distinguished value region a formula with attitude `a` must fall in
/// for a valuation to witness a countermodel.
ValueSet region(const BMatrix& b, Attitude a);

/// True iff `v` is coherent and places every formula of s in its region.
bool is_countermodel(const BMatrix& b, const BStatement& s, const Valuation& v);
bool is_countermodel(const NdMatrix& m, const Statement1D& s, const Valuation& v);

/// Checks a schema as a statement over atoms. Throws DimensionMismatchError
/// when the rule's dimension does not match the matrix kind.
Verdict validate_rule(const NdMatrix& m, const RuleSchema& rule);
Verdict validate_rule(const BMatrix& b, const RuleSchema& rule);

std::string to_string(const Valuation& v, const NdAlgebra& alg);

}  // namespace ndlogic
