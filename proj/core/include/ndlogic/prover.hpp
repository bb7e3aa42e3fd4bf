#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ndlogic/derivation.hpp"

namespace ndlogic {

struct SearchLimits {
  std::size_t max_nodes = 1'000'000;
  /// Defaults to 4 * |fence| when unset.
  std::optional<std::size_t> max_depth;
};

struct ProofOutcome {
  enum class Kind { proved, saturated, limit_exceeded };

  Kind kind = Kind::saturated;
  /// Set when proved.
  std::optional<DerivationTree> tree;
  /// Leftmost open branch label that admits no progressing instance.
  std::optional<NodeLabel> open_label;
  std::size_t nodes = 0;
  std::size_t fence_size = 0;
  /// Human-readable note on the limit hit, if any.
  std::string detail;
};

std::string_view to_string(ProofOutcome::Kind k);

/// Backward saturation search inside the fence gen_subformulas(theta, s).
/// Every proved tree passes check_proof and only mentions fence formulas.
/// Expansions whose added formula the rest of the branch never needs are
/// removed from the returned tree; `nodes` still counts the search.
/// `saturated` means "no proof within the fence", which coincides with
/// unprovability for theta-analytic calculi only.
/// Throws DimensionMismatchError for a one-dimensional calculus.
ProofOutcome prove(const Calculus& c, const BStatement& s, const ThetaSet& theta, const SearchLimits& limits = {});
/// Throws DimensionMismatchError for a two-dimensional calculus.
ProofOutcome prove(const Calculus& c, const Statement1D& s, const ThetaSet& theta, const SearchLimits& limits = {});

}  // namespace ndlogic
