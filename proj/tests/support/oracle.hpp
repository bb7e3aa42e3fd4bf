#pragma once

// Brute-force reference semantics for cross-checking the library. It
// enumerates every assignment of values to the subformula closure and keeps
// the coherent ones, with no pruning.

#include <optional>
#include <set>
#include <vector>

#include "ndlogic/entailment.hpp"

namespace oracle {

using namespace ndlogic;

inline void close_under_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  for (const auto& a : f.args()) close_under_subformulas(a, out);
}

/// Visits assignments in lexicographic order (first domain formula most
/// significant); stops when `visit` returns true.
template <class Visit>
void for_each_coherent(const NdAlgebra& alg, const std::vector<Formula>& domain, Visit visit) {
  const std::size_t n = alg.num_values();
  std::vector<ValueId> vals(domain.size(), 0);
  auto index_of = [&](const Formula& f) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] == f) return i;
    }
    return domain.size();
  };
  while (true) {
    bool coherent = true;
    for (std::size_t i = 0; i < domain.size() && coherent; ++i) {
      const Formula& f = domain[i];
      if (f.is_var()) continue;
      std::vector<ValueId> args;
      for (const auto& a : f.args()) args.push_back(vals[index_of(a)]);
      coherent = alg.interpret(f.symbol(), args).contains(vals[i]);
    }
    if (coherent && visit(vals)) return;
    std::size_t k = domain.size();
    while (k > 0 && ++vals[k - 1] == n) vals[--k] = 0;
    if (k == 0) return;
  }
}

/// Countermodel search where `region(f)` lists the required regions of f.
inline std::optional<Valuation> first_countermodel(const NdAlgebra& alg, const BStatement& s,
                                                   const std::array<ValueSet, 4>& regions) {
  std::set<Formula> closure;
  for (auto a : kAttitudes) {
    for (const auto& f : s[a]) close_under_subformulas(f, closure);
  }
  const std::vector<Formula> domain(closure.begin(), closure.end());
  std::optional<Valuation> found;
  for_each_coherent(alg, domain, [&](const std::vector<ValueId>& vals) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (auto a : kAttitudes) {
        if (s[a].contains(domain[i]) && !regions[static_cast<std::size_t>(a)].contains(vals[i])) return false;
      }
    }
    found = Valuation(domain, vals);
    return true;
  });
  return found;
}

inline std::optional<Valuation> countermodel(const BMatrix& b, const BStatement& s) {
  const std::size_t n = b.algebra.num_values();
  return first_countermodel(b.algebra, s,
                            {b.designated, b.designated.complement(n), b.antidesignated, b.antidesignated.complement(n)});
}

inline std::optional<Valuation> countermodel(const NdMatrix& m, const Statement1D& s) {
  return countermodel(BMatrix{m.algebra, m.designated, ValueSet{}}, as_t_aspect(s));
}

inline bool valid(const NdMatrix& m, const Statement1D& s) { return !countermodel(m, s); }
inline bool valid(const BMatrix& b, const BStatement& s) { return !countermodel(b, s); }

}  // namespace oracle
