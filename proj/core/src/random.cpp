#include "ndlogic/random.hpp"

#include "ndlogic/error.hpp"

namespace ndlogic {

FormulaSampler::FormulaSampler(Signature sig, std::vector<std::string> vars, int max_depth, std::uint64_t seed)
    : sig_(std::move(sig)), names_(sig_.names()), vars_(std::move(vars)), max_depth_(max_depth), rng_(seed) {
  if (vars_.empty()) throw InputError("sampler needs at least one variable");
}

int FormulaSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Formula FormulaSampler::formula() { return formula(uniform(0, max_depth_)); }

Formula FormulaSampler::formula(int depth) {
  if (depth == 0 || names_.empty()) return Formula::var(vars_[static_cast<std::size_t>(uniform(0, static_cast<int>(vars_.size()) - 1))]);
  const std::string& c = names_[static_cast<std::size_t>(uniform(0, static_cast<int>(names_.size()) - 1))];
  std::vector<Formula> args;
  for (int i = 0; i < sig_.arity(c); ++i) args.push_back(formula(uniform(0, depth - 1)));
  return Formula::apply(c, std::move(args));
}

FormulaSet FormulaSampler::formula_set(int max_size) {
  FormulaSet out;
  const int n = uniform(0, max_size);
  for (int i = 0; i < n; ++i) out.insert(formula());
  return out;
}

Statement1D FormulaSampler::statement(int max_side) { return Statement1D{formula_set(max_side), formula_set(max_side)}; }

BStatement FormulaSampler::bstatement(int max_side) {
  BStatement s;
  for (auto a : kAttitudes) s[a] = formula_set(max_side);
  return s;
}

Substitution FormulaSampler::substitution() {
  Substitution s;
  for (const auto& v : vars_) s.bind(v, formula(uniform(0, 1)));
  return s;
}

}  // namespace ndlogic
