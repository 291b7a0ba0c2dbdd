#pragma once

#include "brauer_terminal/discrepancy.hpp"
#include "brauer_terminal/model.hpp"
#include "brauer_terminal/path.hpp"
#include "brauer_terminal/rational.hpp"
#include "brauer_terminal/report.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bterm {

/// Codimension-2 strata {i,j} with e_i = e_j = 2, no ramification of either cover along
/// the intersection, and exceptional degree e_E = 1 (so b = 0). One stratum per distinct
/// center, oldest chart first, lexicographic within a chart. Requires torsion 2.
std::vector<Stratum> find_bad_strata(const BrauerModel& model);

struct ResolutionEdge {
  std::size_t parent = 0;
  std::size_t child = 0;
  Center center;
  DivisorId exceptional;
  std::vector<std::string> child_charts;
};

/// Models produced by successive fix-up blow-ups; node 0 is the input, the last node the result.
struct ResolutionTree {
  std::vector<BrauerModel> nodes;
  std::vector<ResolutionEdge> edges;

  const BrauerModel& root() const { return nodes.front(); }
  const BrauerModel& leaf() const { return nodes.back(); }
  std::size_t blow_ups() const noexcept { return edges.size(); }
};

class NonTerminationError : public std::runtime_error {
 public:
  NonTerminationError(const std::string& what, ResolutionTree tree)
      : std::runtime_error(what), tree_(std::move(tree)) {}
  const ResolutionTree& tree() const noexcept { return tree_; }

 private:
  ResolutionTree tree_;
};

inline constexpr int kDefaultMaxRounds = 64;
inline constexpr int kDefaultDepth = 3;

/// Blows up bad strata until none is left in any chart. Throws NonTerminationError once
/// max_rounds blow-ups have not sufficed, std::domain_error for torsion other than 2.
ResolutionTree level_one_fixup(const BrauerModel& model, int max_rounds = kDefaultMaxRounds);

struct EnumerationOptions {
  int depth = kDefaultDepth;
  std::size_t budget = 4'000'000;  ///< maximum number of blow-up steps
  int threads = 0;                 ///< 0: OpenMP default
};

struct SideConditionFailure {
  DivisorId divisor;
  std::vector<Center> witness;
  std::string condition;
  Rational value{0};
};

/// Hypotheses of the propagation bound, checked on every enumerated step.
struct SideConditions {
  bool level_one_nonnegative = true;       ///< b(E, X, alpha) >= 0 for every level-one E
  std::size_t steps = 0;
  std::size_t local_a_failures = 0;        ///< steps with a(F, Y, Delta_{Y,alpha}) < 0 possible
  std::size_t propagation_violations = 0;  ///< hypotheses held but b(F) < b(E)
  std::vector<SideConditionFailure> failures;  ///< first few, in enumeration order

  bool passed() const noexcept {
    return level_one_nonnegative && local_a_failures == 0 && propagation_violations == 0;
  }
};

struct Enumeration {
  std::vector<DiscrepancyReport> reports;  ///< one per divisor, sorted by (level, witness)
  SideConditions side;
  std::size_t steps = 0;
  bool truncated = false;
};

/// Every exceptional divisor reachable by at most `depth` stratum blow-ups from any chart of
/// the model, with discrepancies against the model itself. Divisors reached by several
/// sequences are merged: a must agree, candidate degrees are intersected, and the shortest
/// (then lexicographically smallest) witness is kept. Parallel over first blow-ups.
Enumeration enumerate_divisors(const BrauerModel& model, const EnumerationOptions& options = {});

/// Single-threaded reference with the same contract and output.
Enumeration enumerate_divisors_serial(const BrauerModel& model, const EnumerationOptions& options = {});

/// One blow-up of a path: the slots of the center in the current chart, and which of the
/// resulting charts to continue in (index into the center's slots).
struct PathStep {
  std::vector<std::size_t> slots;
  std::size_t child = 0;
};

struct BlowUpPath {
  std::size_t chart = 0;  ///< starting chart of the model
  std::vector<PathStep> steps;
};

struct CompositionStep {
  DiscrepancyReport report;
  RationalRange a_local;
  std::vector<RationalRange> b_local;
  bool tower_nonnegative = true;
};

struct CandidateVerdict {
  int e = 1;
  Rational b{0};  ///< b(F, X, alpha) for this cover degree of F
  bool bound_holds = false;  ///< b >= lambda
};

struct CompositionCheck {
  Rational lambda{0};
  std::vector<CompositionStep> steps;
  std::vector<SideConditionFailure> failures;
  /// The last center lies on an exceptional divisor E of the path with b(E, X, alpha) >= lambda.
  bool premise_holds = false;
  std::vector<CandidateVerdict> candidates;

  bool hypotheses_hold() const noexcept { return failures.empty(); }
  bool passed() const noexcept;
  /// False only if the hypotheses and premise hold and some candidate still breaks the bound.
  bool bound_consistent() const noexcept;
};

/// Walks a blow-up path and evaluates the propagation bound b(F, X, alpha) >= lambda at its
/// last divisor, together with every hypothesis along the way. Throws std::invalid_argument
/// for an empty or malformed path.
CompositionCheck check_composition(const BrauerModel& model, const BlowUpPath& path, const Rational& lambda);

enum class Verdict { terminal_certified, bad_stratum_found, indeterminate };

std::string to_string(Verdict v);

struct CertifyOptions {
  int depth = kDefaultDepth;
  bool fixup = true;
  int max_rounds = kDefaultMaxRounds;
  std::size_t budget = EnumerationOptions{}.budget;
  int threads = 0;
};

struct TerminalityCertificate {
  int level_checked = 0;
  Rational min_weighted{0};
  std::optional<DiscrepancyReport> argmin;
  bool level1_terminal = false;
  SideConditions side;
  Verdict verdict = Verdict::indeterminate;
  std::vector<Center> bad_strata;
  std::vector<DivisorId> indeterminate_divisors;
  std::size_t fixup_blow_ups = 0;
  bool truncated = false;
  std::optional<BrauerModel> model;  ///< the model that was enumerated (after fix-up)
  std::vector<DiscrepancyReport> reports;
};

/// Fix-up (torsion 2, unless disabled), depth-bounded enumeration, and the side conditions
/// of the propagation bound. terminal_certified requires level-one terminality, a positive
/// minimum of e*b, and every side condition.
TerminalityCertificate certify(const BrauerModel& model, const CertifyOptions& options = {});

/// One candidate cover degree of F in the 3-torsion example.
struct RemarkCandidate {
  int e_F = 1;
  Rational b_F_over_Y{0};
  Rational b_F_over_X{0};
  Rational additive_sum{0};  ///< b(F, Y, alpha) + b(E, X, alpha)
  bool additivity_holds = false;
  Rational min_weighted{0};  ///< min e*b over level one and F, for this candidate
  bool may_not_be_terminal = false;
};

struct RemarkReport {
  BrauerModel model;
  Center first_center;
  Center second_center;
  DiscrepancyReport exceptional_E;
  DiscrepancyReport exceptional_F;
  int monomial_order_F = 1;
  bool level_one_terminal = false;
  Rational level_one_min_b{0};
  std::vector<RemarkCandidate> candidates;
  CompositionCheck composition;
};

/// The 3-torsion example: r = 3, alpha = (x1, x2), an unramified 3-cover on V(x3). Blows up
/// V(x1, x3), then E ∩ V(x1).
RemarkReport run_remark();

}  // namespace bterm
