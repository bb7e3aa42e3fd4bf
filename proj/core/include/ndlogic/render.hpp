#pragma once

#include <string>

#include "ndlogic/derivation.hpp"

namespace ndlogic {

/// `{p := q, q := neg(p)}`; formulas use infix sugar when `sig` is given.
std::string format_substitution(const Substitution& s, const Signature* sig = nullptr);
std::string format_label(const NodeLabel& l, const Signature* sig = nullptr);

/// One node per line, indented two spaces per level. The root shows its
/// full label, every other node the formulas it adds to its parent
/// (`+acc f`, `+rej f`). Expanded nodes end with `[rule {subst}]`; the
/// discontinuation mark prints as `*`.
std::string render_text(const DerivationTree& t, const Signature* sig = nullptr);

/// DOT digraph with nodes numbered in preorder; edges carry rule names.
std::string render_dot(const DerivationTree& t, const Signature* sig = nullptr);

}  // namespace ndlogic
