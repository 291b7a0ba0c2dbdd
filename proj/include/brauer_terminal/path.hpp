#pragma once

#include "brauer_terminal/model.hpp"
#include "brauer_terminal/rational.hpp"
#include "brauer_terminal/report.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bterm {

/// Per-slot data carried along a blow-up path.
struct SlotState {
  DivisorId id;
  /// Coefficient of the divisor in the crepant pull-back of K_X + Delta_{X,alpha}: the boundary
  /// coefficient for divisors of the base model, -a(E, X, Delta) for exceptional ones. Empty
  /// when the base model leaves the divisor's degree undetermined.
  std::optional<Rational> crepant;
  DegreeSet degrees;
  InheritedCover inherited;
  bool exceptional_over_base = false;
  Rational b_min_over_base{0};  ///< min candidate b(E, X, alpha), exceptional slots only
};

/// A chart reached from one chart of the base model by a sequence of stratum blow-ups.
struct PathNode {
  LocalPair local;
  std::vector<SlotState> slots;
  std::vector<Center> witness;
  std::vector<Rational> tower_b_min;  ///< min b(E', X, alpha) of every exceptional divisor on the path
};

/// Everything one blow-up of a path node produces.
struct StepOutcome {
  DiscrepancyReport report;            ///< F against the base pair (X, alpha), telescoped
  int monomial_order = 1;              ///< order of the monomial part of the residue along F
  RationalRange a_local;               ///< a(F, Y, Delta_{Y,alpha}), Y the node's variety
  std::vector<RationalRange> b_local;  ///< b(F, Y, alpha), one per candidate of report.e
  bool tower_nonnegative = true;       ///< b(E', X, alpha) >= 0 for all E' on the path
  /// Center lies on an exceptional E of the path, both hypotheses of the propagation bound
  /// b(F) >= b(E) hold, and yet some candidate b(F, X, alpha) < b(E, X, alpha).
  bool propagation_violated = false;
  std::vector<PathNode> children;      ///< one per blow-up chart
};

/// Start of a path at chart `chart_index` of the base model.
PathNode path_root(const BrauerModel& base, std::size_t chart_index);

/// Blows up a coordinate stratum of the node's chart. Throws std::domain_error when a
/// divisor of the center has no determined crepant coefficient.
StepOutcome blow_up_step(const PathNode& node, const Stratum& center);

}  // namespace bterm
