#include "ndlogic/derivation.hpp"

#include <algorithm>
#include <set>

#include "ndlogic/error.hpp"

namespace ndlogic {

namespace {

bool includes(const FormulaSet& big, const FormulaSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool meets(const FormulaSet& a, const FormulaSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

bool branches_closed(const DerivationTree& t, const FormulaSet& nacc, const FormulaSet& nrej) {
  if (t.is_star()) return true;
  if (t.is_leaf()) return meets(t.label->acc, nacc) || meets(t.label->rej, nrej);
  return std::all_of(t.children.begin(), t.children.end(),
                     [&](const DerivationTree& c) { return branches_closed(c, nacc, nrej); });
}

bool check_node(const Calculus& c, const DerivationTree& t) {
  if (t.is_leaf()) return true;
  if (t.is_star()) return false;
  const RuleSchema* schema = c.find(t.rule);
  if (schema == nullptr) throw UnknownRuleError("unknown rule '" + t.rule + "' in calculus " + c.name);
  const RuleSchema inst = instantiate_rule(*schema, t.substitution);
  const NodeLabel& label = *t.label;
  if (!includes(label.acc, inst.body[Attitude::acc]) || !includes(label.rej, inst.body[Attitude::rej])) return false;
  // Children may appear in any order, but must match the succedent one-to-one.
  const auto expected = expansion_labels(label, inst);
  if (expected.size() != t.children.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& child : t.children) {
    bool matched = false;
    for (std::size_t i = 0; i < expected.size() && !matched; ++i) {
      if (!used[i] && expected[i] == child.label) used[i] = matched = true;
    }
    if (!matched || !check_node(c, child)) return false;
  }
  return true;
}

}  // namespace

const RuleSchema* Calculus::find(std::string_view rule) const {
  auto it = std::find_if(rules.begin(), rules.end(), [&](const RuleSchema& r) { return r.name == rule; });
  return it == rules.end() ? nullptr : &*it;
}

void Calculus::validate() const {
  if (dimension != 1 && dimension != 2) throw InputError("calculus dimension must be 1 or 2");
  std::set<std::string> names;
  for (const auto& r : rules) {
    if (!names.insert(r.name).second) throw InputError("duplicate rule name '" + r.name + "'");
    if (r.dimension != dimension) {
      throw InputError("rule '" + r.name + "' does not match the calculus dimension");
    }
    if (dimension == 1 && (!r.body[Attitude::rej].empty() || !r.body[Attitude::nrej].empty())) {
      throw InputError("one-dimensional rule '" + r.name + "' uses rej/nrej slots");
    }
  }
}

Calculus as_two_dimensional(const Calculus& c) {
  Calculus out = c;
  out.dimension = 2;
  for (auto& r : out.rules) r.dimension = 2;
  return out;
}

bool NodeLabel::contains(const NodeLabel& other) const {
  return includes(acc, other.acc) && includes(rej, other.rej);
}

std::size_t DerivationTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

std::vector<std::optional<NodeLabel>> expansion_labels(const NodeLabel& parent, const RuleSchema& instance) {
  std::vector<std::optional<NodeLabel>> out;
  for (const auto& f : instance.body[Attitude::nacc]) {
    NodeLabel l = parent;
    l.acc.insert(f);
    out.emplace_back(std::move(l));
  }
  for (const auto& f : instance.body[Attitude::nrej]) {
    NodeLabel l = parent;
    l.rej.insert(f);
    out.emplace_back(std::move(l));
  }
  if (out.empty()) out.emplace_back(std::nullopt);
  return out;
}

bool check_derivation(const Calculus& c, const DerivationTree& t) { return check_node(c, t); }

bool check_proof(const Calculus& c, const BStatement& s, const DerivationTree& t) {
  if (c.dimension != 2) throw DimensionMismatchError("calculus " + c.name + " is not two-dimensional");
  if (!check_derivation(c, t)) return false;
  if (t.is_star()) return false;
  const NodeLabel antecedent{s[Attitude::acc], s[Attitude::rej]};
  if (!antecedent.contains(*t.label)) return false;
  return branches_closed(t, s[Attitude::nacc], s[Attitude::nrej]);
}

bool check_proof(const Calculus& c, const Statement1D& s, const DerivationTree& t) {
  if (c.dimension != 1) throw DimensionMismatchError("calculus " + c.name + " is not one-dimensional");
  if (!check_derivation(c, t)) return false;
  if (t.is_star()) return false;
  if (!t.label->rej.empty() || !includes(s.antecedent, t.label->acc)) return false;
  return branches_closed(t, s.succedent, {});
}

std::vector<RuleInstance> fence_instances(const Calculus& c, const FormulaSet& fence) {
  std::vector<RuleInstance> out;
  const std::vector<Formula> pool(fence.begin(), fence.end());
  for (std::size_t ri = 0; ri < c.rules.size(); ++ri) {
    const RuleSchema& r = c.rules[ri];
    const auto vars = r.variables();
    const FormulaSet body = r.body.all_formulas();
    if (vars.empty()) {
      if (includes(fence, body)) out.push_back({ri, {}, r});
      continue;
    }
    if (pool.empty()) continue;
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Substitution s;
      for (std::size_t k = 0; k < vars.size(); ++k) s.bind(vars[k], pool[idx[k]]);
      bool inside = std::all_of(body.begin(), body.end(), [&](const Formula& f) {
        return fence.contains(substitute(f, s));
      });
      if (inside) out.push_back({ri, s, instantiate_rule(r, s)});
      std::size_t k = idx.size();
      while (k > 0 && ++idx[k - 1] == pool.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

bool is_applicable(const RuleSchema& instance, const NodeLabel& label) {
  const auto& b = instance.body;
  if (!includes(label.acc, b[Attitude::acc]) || !includes(label.rej, b[Attitude::rej])) return false;
  return !meets(label.acc, b[Attitude::nacc]) && !meets(label.rej, b[Attitude::nrej]);
}

void order_instances(std::vector<RuleInstance>& instances) {
  std::stable_sort(instances.begin(), instances.end(), [](const RuleInstance& a, const RuleInstance& b) {
    return a.instance.branching() < b.instance.branching();
  });
}

std::vector<RuleInstance> applicable_instances(const Calculus& c, const NodeLabel& label, const FormulaSet& fence) {
  auto all = fence_instances(c, fence);
  std::vector<RuleInstance> out;
  for (auto& inst : all) {
    if (is_applicable(inst.instance, label)) out.push_back(std::move(inst));
  }
  order_instances(out);
  return out;
}

}  // namespace ndlogic
