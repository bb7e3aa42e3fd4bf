#include "ndlogic/entailment.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ndlogic/error.hpp"
#include "ndlogic/syntax.hpp"

namespace ndlogic {

namespace {

// Depth-first enumeration of coherent valuations over a subformula-closed
// domain. Nodes are in canonical formula order, so every child index is
// smaller than its parent's and assignments proceed bottom-up.
class ClosureSearch {
 public:
  ClosureSearch(const NdAlgebra& alg, const FormulaSet& fs) : alg_(alg) {
    if (!check_total(alg)) throw NonTotalAlgebraError("semantic checks require a total algebra");
    FormulaSet closure = subformulas(fs);
    domain_.assign(closure.begin(), closure.end());
    std::map<Formula, std::size_t> index;
    for (std::size_t i = 0; i < domain_.size(); ++i) index.emplace(domain_[i], i);
    nodes_.resize(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      const Formula& f = domain_[i];
      if (f.is_var()) continue;
      nodes_[i].table = &alg.table(f.symbol());
      for (const auto& a : f.args()) nodes_[i].kids.push_back(index.at(a));
    }
    allowed_.assign(domain_.size(), ValueSet::all(alg.num_values()));
    index_ = std::move(index);
  }

  void restrict(const Formula& f, ValueSet region) {
    auto it = index_.find(f);
    if (it != index_.end()) allowed_[it->second] = allowed_[it->second] & region;
  }

  std::size_t index_of(const Formula& f) const { return index_.at(f); }
  const std::vector<Formula>& domain() const { return domain_; }

  /// Calls visit(values) for each valuation respecting the restrictions,
  /// in lexicographic order; stops early when visit returns true.
  template <class Visit>
  bool run(Visit&& visit) {
    values_.assign(domain_.size(), 0);
    return step(0, visit);
  }

 private:
  struct Node {
    const NdAlgebra::Table* table = nullptr;
    std::vector<std::size_t> kids;
  };

  template <class Visit>
  bool step(std::size_t i, Visit& visit) {
    if (i == domain_.size()) return visit(values_);
    ValueSet candidates = allowed_[i];
    if (const auto* t = nodes_[i].table) {
      std::size_t cell = 0;
      for (auto k : nodes_[i].kids) cell = cell * alg_.num_values() + values_[k];
      candidates = candidates & t->cells[cell];
    }
    for (std::uint64_t b = candidates.bits(); b != 0; b &= b - 1) {
      values_[i] = static_cast<ValueId>(std::countr_zero(b));
      if (step(i + 1, visit)) return true;
    }
    return false;
  }

  const NdAlgebra& alg_;
  std::vector<Formula> domain_;
  std::vector<Node> nodes_;
  std::vector<ValueSet> allowed_;
  std::map<Formula, std::size_t> index_;
  std::vector<ValueId> values_;
};

Verdict first_countermodel(ClosureSearch& search) {
  Verdict verdict;
  search.run([&](const std::vector<ValueId>& values) {
    verdict.valid = false;
    verdict.countermodel = Valuation(search.domain(), values);
    return true;
  });
  return verdict;
}

}  // namespace

Valuation::Valuation(std::vector<Formula> domain, std::vector<ValueId> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (domain_.size() != values_.size()) throw InputError("valuation domain and values differ in length");
}

std::optional<ValueId> Valuation::find(const Formula& f) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), f);
  if (it == domain_.end() || !(*it == f)) return std::nullopt;
  return values_[static_cast<std::size_t>(it - domain_.begin())];
}

ValueId Valuation::operator()(const Formula& f) const {
  auto v = find(f);
  if (!v) throw InputError("formula " + to_string(f) + " is outside the valuation domain");
  return *v;
}

bool is_coherent(const NdAlgebra& alg, const Valuation& v) {
  if (!std::is_sorted(v.domain().begin(), v.domain().end())) return false;
  for (std::size_t i = 0; i < v.domain().size(); ++i) {
    const Formula& f = v.domain()[i];
    if (v.values()[i] >= alg.num_values()) return false;
    if (f.is_var()) continue;
    std::vector<ValueId> args;
    for (const auto& a : f.args()) {
      auto av = v.find(a);
      if (!av) return false;
      args.push_back(*av);
    }
    if (!alg.signature().contains(f.symbol())) return false;
    if (!alg.interpret(f.symbol(), args).contains(v.values()[i])) return false;
  }
  return true;
}

std::vector<Valuation> coherent_valuations(const NdAlgebra& alg, const FormulaSet& fs) {
  ClosureSearch search(alg, fs);
  std::vector<Valuation> out;
  search.run([&](const std::vector<ValueId>& values) {
    out.emplace_back(search.domain(), values);
    return false;
  });
  return out;
}

ValueSet induced_multifunction(const NdAlgebra& alg, const Formula& f, std::span<const ValueId> inputs) {
  std::set<std::string> vars;
  collect_variables(f, vars);
  if (vars.size() != inputs.size()) {
    throw ArityError("formula " + to_string(f) + " has " + std::to_string(vars.size()) + " variable(s), got " +
                     std::to_string(inputs.size()) + " input(s)");
  }
  ClosureSearch search(alg, FormulaSet{f});
  std::size_t i = 0;
  for (const auto& v : vars) {
    if (inputs[i] >= alg.num_values()) throw InputError("input value out of range");
    search.restrict(Formula::var(v), ValueSet::single(inputs[i++]));
  }
  const std::size_t target = search.index_of(f);
  ValueSet out;
  search.run([&](const std::vector<ValueId>& values) {
    out.insert(values[target]);
    return false;
  });
  return out;
}

Verdict entails_1d(const NdMatrix& m, const Statement1D& s) {
  FormulaSet all = s.antecedent;
  all.insert(s.succedent.begin(), s.succedent.end());
  ClosureSearch search(m.algebra, all);
  const ValueSet undesignated = m.designated.complement(m.algebra.num_values());
  for (const auto& f : s.antecedent) search.restrict(f, m.designated);
  for (const auto& f : s.succedent) search.restrict(f, undesignated);
  return first_countermodel(search);
}

ValueSet region(const BMatrix& b, Attitude a) {
  const std::size_t n = b.algebra.num_values();
  switch (a) {
    case Attitude::acc: return b.designated;
    case Attitude::nacc: return b.designated.complement(n);
    case Attitude::rej: return b.antidesignated;
    case Attitude::nrej: return b.antidesignated.complement(n);
  }
  return {};
}

Verdict b_entails(const BMatrix& b, const BStatement& s) {
  ClosureSearch search(b.algebra, s.all_formulas());
  for (auto a : kAttitudes) {
    for (const auto& f : s[a]) search.restrict(f, region(b, a));
  }
  return first_countermodel(search);
}

Verdict aspect_entails(const BMatrix& b, Aspect aspect, const Statement1D& s) {
  return b_entails(b, aspect == Aspect::t ? as_t_aspect(s) : as_f_aspect(s));
}

bool is_countermodel(const BMatrix& b, const BStatement& s, const Valuation& v) {
  if (!is_coherent(b.algebra, v)) return false;
  const FormulaSet mentioned = s.all_formulas();
  if (!std::includes(v.domain().begin(), v.domain().end(), mentioned.begin(), mentioned.end())) return false;
  for (auto a : kAttitudes) {
    for (const auto& f : s[a]) {
      if (!region(b, a).contains(v(f))) return false;
    }
  }
  return true;
}

bool is_countermodel(const NdMatrix& m, const Statement1D& s, const Valuation& v) {
  return is_countermodel(BMatrix{m.algebra, m.designated, {}}, as_t_aspect(s), v);
}

Verdict validate_rule(const NdMatrix& m, const RuleSchema& rule) {
  if (rule.dimension != 1) {
    throw DimensionMismatchError("rule '" + rule.name + "' is two-dimensional; a B-matrix is required");
  }
  return entails_1d(m, rule.as_statement_1d());
}

Verdict validate_rule(const BMatrix& b, const RuleSchema& rule) {
  if (rule.dimension != 2) {
    throw DimensionMismatchError("rule '" + rule.name + "' is one-dimensional; a one-dimensional matrix is required");
  }
  return b_entails(b, rule.body);
}

std::string to_string(const Valuation& v, const NdAlgebra& alg) {
  std::string out;
  for (std::size_t i = 0; i < v.domain().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v.domain()[i]) + " = " + alg.name(v.values()[i]);
  }
  return out;
}

}  // namespace ndlogic
