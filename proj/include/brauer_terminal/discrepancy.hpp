#pragma once

#include "brauer_terminal/model.hpp"
#include "brauer_terminal/path.hpp"
#include "brauer_terminal/rational.hpp"
#include "brauer_terminal/report.hpp"

#include <cstddef>
#include <map>
#include <span>

namespace bterm {

/// Delta_{X,alpha} = sum (1 - 1/e_D) D over divisors with e_D > 1.
struct BoundaryDivisor {
  std::map<DivisorId, Rational> coefficients;

  /// 0 for divisors not in the boundary.
  Rational coefficient(const DivisorId& id) const;
};

/// Throws std::domain_error if some divisor's degree is not determined.
BoundaryDivisor boundary_divisor(const BrauerModel& model);

/// a(E, X, Delta_{X,alpha}) = c - 1 - sum_i a_i mult_Z D_i for the blow-up along a stratum.
Rational classical_discrepancy(const BrauerModel& model, const Stratum& center);

/// b(E, X, alpha) = c - 1/e - sum_i a_i mult_Z D_i, with e found by blowing up and taking
/// the residue along the exceptional coordinate. Checks b = a + 1 - 1/e before returning.
DiscrepancyReport brauer_discrepancy(const BrauerModel& model, const Stratum& center);

/// Every level-one report: all strata of codimension >= 2 in every chart, one report per
/// distinct exceptional divisor, in chart then stratum order.
std::vector<DiscrepancyReport> level_one_reports(const BrauerModel& model);

struct WeightedMinimum {
  Rational value{0};
  std::size_t index = 0;  ///< position of the witnessing report
};

/// Minimum of e * b over the reports (minimum over candidates for undetermined e).
/// A depth-bounded lower estimate of bdiscrep. Throws std::invalid_argument on empty input.
WeightedMinimum weighted_infimum(std::span<const DiscrepancyReport> reports);

}  // namespace bterm
