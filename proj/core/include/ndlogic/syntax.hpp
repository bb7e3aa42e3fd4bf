#pragma once

#include <string>
#include <string_view>

#include "ndlogic/language.hpp"

namespace ndlogic {

/// Parses `name(arg, ...)` prefix syntax, bare identifiers, and
/// `(a OP b)` for binary connectives with a notation alias.
/// Identifiers not declared in `sig` are variables.
/// Throws ParseError (with offset) or ArityError.
Formula parse_formula(std::string_view text, const Signature& sig);

/// Canonical prefix rendering; parse_formula inverts it.
std::string to_string(const Formula& f);

/// Rendering with infix sugar wherever `sig` declares a notation alias.
std::string to_string(const Formula& f, const Signature& sig);

std::string to_string(const FormulaSet& fs);

}  // namespace ndlogic
