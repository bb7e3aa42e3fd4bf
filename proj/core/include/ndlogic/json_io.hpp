#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ndlogic/derivation.hpp"
#include "ndlogic/matrix.hpp"
#include "ndlogic/statement.hpp"

namespace ndlogic {

// Every reader throws InputError (or a subclass) on malformed JSON, unknown
// keys, missing fields, or formulas that fail to parse.

/// {"connectives": {"neg":1, ...}, "notation": {"imp":"->", ...}}
Signature signature_from_json(std::string_view text);
std::string signature_to_json(const Signature& sig);

/// Connectives applied in prefix form across `formulas`, with their arities.
/// Throws ArityError if one name is used with two arities.
Signature infer_signature(std::span<const std::string> formulas);

/// A matrix is a BMatrix exactly when "antidesignated" is present.
AnyMatrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const NdMatrix& m);
std::string matrix_to_json(const BMatrix& b);

/// {"antecedent": [...], "succedent": [...]}
Statement1D statement_from_json(std::string_view text, const Signature& sig);
std::string statement_to_json(const Statement1D& s);
/// {"acc": [...], "nacc": [...], "rej": [...], "nrej": [...]}; absent keys are empty.
BStatement bstatement_from_json(std::string_view text, const Signature& sig);
std::string bstatement_to_json(const BStatement& s);

/// A JSON array of formula strings.
FormulaSet formulas_from_json(std::string_view text, const Signature& sig);

/// Formula strings mentioned by a statement document, for infer_signature.
std::vector<std::string> statement_formula_texts(std::string_view text);

/// {"name", "dimension", "theta" (optional), "signature" (optional),
///  "rules": [{"name", "acc", "nacc", "rej", "nrej"}]}. Without a
/// "signature" key the connectives are inferred from the formulas, or taken
/// from `sig` when one is given.
Calculus calculus_from_json(std::string_view text, const Signature* sig = nullptr);
std::string calculus_to_json(const Calculus& c);
/// Every connective used by the rules and theta, with arities.
Signature signature_of(const Calculus& c);

/// Nested delta form: the root lists its full label, each child only the
/// formulas it adds. {"acc":[...], "rej":[...], "rule":..., "subst":{...},
/// "children":[...]}; the discontinuation mark is {"star": true}.
DerivationTree proof_from_json(std::string_view text, const Signature& sig);
std::string proof_to_json(const DerivationTree& t);

}  // namespace ndlogic
