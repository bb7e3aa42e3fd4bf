#include "ndlogic/render.hpp"

#include <algorithm>
#include <iterator>

#include "ndlogic/syntax.hpp"

namespace ndlogic {

namespace {

std::string fmt(const Formula& f, const Signature* sig) { return sig ? to_string(f, *sig) : to_string(f); }

std::string fmt_set(const FormulaSet& fs, const Signature* sig) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : fs) {
    if (!first) out += ", ";
    first = false;
    out += fmt(f, sig);
  }
  return out + "}";
}

FormulaSet minus(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string delta(const NodeLabel& parent, const NodeLabel& child, const Signature* sig) {
  std::string out;
  for (const auto& f : minus(child.acc, parent.acc)) out += (out.empty() ? "" : " ") + std::string("+acc ") + fmt(f, sig);
  for (const auto& f : minus(child.rej, parent.rej)) out += (out.empty() ? "" : " ") + std::string("+rej ") + fmt(f, sig);
  return out.empty() ? "(no change)" : out;
}

std::string rule_note(const DerivationTree& t, const Signature* sig) {
  if (t.is_leaf()) return {};
  return "  [" + t.rule + " " + format_substitution(t.substitution, sig) + "]";
}

void text_node(const DerivationTree& t, const NodeLabel* parent, int depth, const Signature* sig, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (t.is_star()) {
    out += "*\n";
    return;
  }
  out += parent ? delta(*parent, *t.label, sig) : format_label(*t.label, sig);
  out += rule_note(t, sig) + "\n";
  for (const auto& c : t.children) text_node(c, &*t.label, depth + 1, sig, out);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int dot_node(const DerivationTree& t, const NodeLabel* parent, const Signature* sig, int& next, std::string& out) {
  const int id = next++;
  std::string label;
  if (t.is_star()) {
    label = "*";
  } else {
    label = parent ? delta(*parent, *t.label, sig) : format_label(*t.label, sig);
  }
  out += "  n" + std::to_string(id) + " [label=\"" + dot_escape(label) + "\"];\n";
  for (const auto& c : t.children) {
    const int cid = dot_node(c, t.label ? &*t.label : nullptr, sig, next, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) + " [label=\"" + dot_escape(t.rule) + "\"];\n";
  }
  return id;
}

}  // namespace

std::string format_substitution(const Substitution& s, const Signature* sig) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, f] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += v + " := " + fmt(f, sig);
  }
  return out + "}";
}

std::string format_label(const NodeLabel& l, const Signature* sig) {
  return "acc " + fmt_set(l.acc, sig) + " rej " + fmt_set(l.rej, sig);
}

std::string render_text(const DerivationTree& t, const Signature* sig) {
  std::string out;
  text_node(t, nullptr, 0, sig, out);
  return out;
}

std::string render_dot(const DerivationTree& t, const Signature* sig) {
  std::string out = "digraph proof {\n  node [shape=box, fontname=\"monospace\"];\n";
  int next = 0;
  dot_node(t, nullptr, sig, next, out);
  return out + "}\n";
}

}  // namespace ndlogic
