#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndlogic/matrix.hpp"
#include "ndlogic/statement.hpp"

namespace ndlogic {

/// A unary formula pulling two values to opposite sides of a
/// distinguished set.
struct Separation {
  Formula separator;
  /// Attitude::acc for the designated set, Attitude::rej for the
  /// antidesignated one.
  Attitude set = Attitude::acc;
  /// True when theta(x) lies inside the set and theta(y) outside; false for
  /// the reverse orientation.
  bool first_inside = true;
};

/// theta^A(v) for every value v, indexed by ValueId.
std::vector<ValueSet> unary_images(const NdAlgebra& alg, const Formula& theta);

/// First separator for (x, y) in enumerate_unary_formulas order, trying the
/// designated set before the antidesignated one. Absence only means "none up
/// to max_depth". Throws InputError when x == y.
std::optional<Separation> separator_for_pair(const NdMatrix& m, ValueId x, ValueId y, int max_depth);
std::optional<Separation> separator_for_pair(const BMatrix& b, ValueId x, ValueId y, int max_depth);

struct PairSeparation {
  ValueId first = 0;
  ValueId second = 0;
  std::optional<Separation> separation;
};

struct ExpressivenessReport {
  int max_depth = 0;
  /// Unordered pairs in declared value order.
  std::vector<PairSeparation> pairs;

  bool sufficiently_expressive() const;
};

ExpressivenessReport expressiveness_report(const NdMatrix& m, int max_depth);
ExpressivenessReport expressiveness_report(const BMatrix& b, int max_depth);

std::string to_string(const ExpressivenessReport& r, const NdAlgebra& alg);

}  // namespace ndlogic
