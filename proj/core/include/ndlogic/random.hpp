#pragma once

#include <random>
#include <string>
#include <vector>

#include "ndlogic/statement.hpp"

namespace ndlogic {

/// Seeded generator of small formulas and statements for property checks.
class FormulaSampler {
 public:
  FormulaSampler(Signature sig, std::vector<std::string> vars, int max_depth, std::uint64_t seed);

  Formula formula();
  /// Between 0 and max_size formulas.
  FormulaSet formula_set(int max_size);
  Statement1D statement(int max_side);
  BStatement bstatement(int max_side);
  /// Maps each variable to a fresh random formula.
  Substitution substitution();

  std::mt19937_64& engine() { return rng_; }
  int uniform(int lo, int hi);

 private:
  Formula formula(int depth);

  Signature sig_;
  std::vector<std::string> names_;
  std::vector<std::string> vars_;
  int max_depth_;
  std::mt19937_64 rng_;
};

}  // namespace ndlogic
