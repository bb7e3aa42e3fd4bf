#include "ndlogic/prover.hpp"

#include <algorithm>

#include "ndlogic/error.hpp"

namespace ndlogic {

namespace {

bool meets(const FormulaSet& a, const FormulaSet& b) {
  return std::any_of(b.begin(), b.end(), [&](const Formula& f) { return a.contains(f); });
}

// Any progressing instance preserves provability within the fence (labels
// only grow, and a proof of a label is a proof of every larger label), so
// the first applicable instance is taken without backtracking.
class Search {
 public:
  Search(std::vector<RuleInstance> instances, FormulaSet nacc, FormulaSet nrej, const SearchLimits& limits,
         std::size_t fence_size)
      : instances_(std::move(instances)), nacc_(std::move(nacc)), nrej_(std::move(nrej)), limits_(limits) {
    max_depth_ = limits.max_depth.value_or(4 * fence_size);
    outcome_.fence_size = fence_size;
  }

  ProofOutcome run(const NodeLabel& root) {
    DerivationTree tree = DerivationTree::leaf(root);
    if (expand(tree, 0)) {
      outcome_.kind = ProofOutcome::Kind::proved;
      outcome_.tree = std::move(tree);
    }
    return std::move(outcome_);
  }

 private:
  bool count_node() {
    if (++outcome_.nodes > limits_.max_nodes) {
      outcome_.kind = ProofOutcome::Kind::limit_exceeded;
      outcome_.detail = "node limit " + std::to_string(limits_.max_nodes) + " exceeded";
      return false;
    }
    return true;
  }

  // Returns true when every branch below `node` closed.
  bool expand(DerivationTree& node, std::size_t depth) {
    if (!count_node()) return false;
    const NodeLabel& label = *node.label;
    if (meets(label.acc, nacc_) || meets(label.rej, nrej_)) return true;
    if (depth >= max_depth_) {
      outcome_.kind = ProofOutcome::Kind::limit_exceeded;
      outcome_.detail = "depth limit " + std::to_string(max_depth_) + " exceeded";
      return false;
    }
    auto it = std::find_if(instances_.begin(), instances_.end(),
                           [&](const RuleInstance& r) { return is_applicable(r.instance, label); });
    if (it == instances_.end()) {
      outcome_.kind = ProofOutcome::Kind::saturated;
      outcome_.open_label = label;
      return false;
    }
    node.rule = it->instance.name;
    node.substitution = it->substitution;
    for (auto& l : expansion_labels(label, it->instance)) {
      node.children.push_back(l ? DerivationTree::leaf(std::move(*l)) : DerivationTree::star());
    }
    for (auto& child : node.children) {
      if (child.is_star()) {
        if (!count_node()) return false;
        continue;
      }
      if (!expand(child, depth + 1)) return false;
    }
    return true;
  }

  std::vector<RuleInstance> instances_;
  FormulaSet nacc_;
  FormulaSet nrej_;
  SearchLimits limits_;
  std::size_t max_depth_ = 0;
  ProofOutcome outcome_;
};

bool closed(const DerivationTree& t, const FormulaSet& nacc, const FormulaSet& nrej) {
  if (t.is_star()) return true;
  if (t.is_leaf()) return meets(t.label->acc, nacc) || meets(t.label->rej, nrej);
  return std::all_of(t.children.begin(), t.children.end(),
                     [&](const DerivationTree& k) { return closed(k, nacc, nrej); });
}

void strip(DerivationTree& t, const Formula& f, bool acc_side) {
  if (t.is_star()) return;
  (acc_side ? t.label->acc : t.label->rej).erase(f);
  for (auto& k : t.children) strip(k, f, acc_side);
}

// Greedy search happily takes expansions that later turn out irrelevant.
// Bottom-up, replace an expansion by one of its child subtrees whenever that
// subtree still checks and closes without the formula the child added.
void prune(const Calculus& c, DerivationTree& t, const FormulaSet& nacc, const FormulaSet& nrej) {
  if (t.is_leaf()) return;
  for (auto& k : t.children) prune(c, k, nacc, nrej);
  bool changed = true;
  while (changed && !t.is_leaf()) {
    changed = false;
    for (const auto& k : t.children) {
      if (k.is_star()) continue;
      DerivationTree candidate = k;
      for (const auto& f : k.label->acc) {
        if (!t.label->acc.contains(f)) strip(candidate, f, true);
      }
      for (const auto& f : k.label->rej) {
        if (!t.label->rej.contains(f)) strip(candidate, f, false);
      }
      if (candidate.label == t.label && check_derivation(c, candidate) && closed(candidate, nacc, nrej)) {
        t = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
}

ProofOutcome run_search(const Calculus& c, const BStatement& s, const ThetaSet& theta, const SearchLimits& limits) {
  const FormulaSet fence = gen_subformulas(theta, s.all_formulas());
  auto instances = fence_instances(c, fence);
  order_instances(instances);
  Search search(std::move(instances), s[Attitude::nacc], s[Attitude::nrej], limits, fence.size());
  ProofOutcome out = search.run(NodeLabel{s[Attitude::acc], s[Attitude::rej]});
  if (out.tree) prune(c, *out.tree, s[Attitude::nacc], s[Attitude::nrej]);
  return out;
}

}  // namespace

std::string_view to_string(ProofOutcome::Kind k) {
  switch (k) {
    case ProofOutcome::Kind::proved: return "proved";
    case ProofOutcome::Kind::saturated: return "saturated";
    case ProofOutcome::Kind::limit_exceeded: return "limit-exceeded";
  }
  return "?";
}

ProofOutcome prove(const Calculus& c, const BStatement& s, const ThetaSet& theta, const SearchLimits& limits) {
  if (c.dimension != 2) throw DimensionMismatchError("calculus " + c.name + " is not two-dimensional");
  return run_search(c, s, theta, limits);
}

ProofOutcome prove(const Calculus& c, const Statement1D& s, const ThetaSet& theta, const SearchLimits& limits) {
  if (c.dimension != 1) throw DimensionMismatchError("calculus " + c.name + " is not one-dimensional");
  return run_search(c, as_t_aspect(s), theta, limits);
}

}  // namespace ndlogic
