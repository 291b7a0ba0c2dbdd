#pragma once

#include "brauer_terminal/brauer.hpp"
#include "brauer_terminal/model.hpp"
#include "brauer_terminal/rational.hpp"

#include <cstddef>
#include <vector>

namespace bterm {

/// Discrepancies of one exceptional divisor E over a base pair (X, alpha).
///
/// b and weighted are aligned with e.values(): one entry per candidate cover degree. For a
/// determinate e there is exactly one entry and b = a + 1 - 1/e, weighted = e * b.
struct DiscrepancyReport {
  DivisorId divisor;
  std::vector<Center> witness;  ///< blow-up centers reaching E from the base, in order
  DegreeSet e;
  Rational a{0};
  std::vector<Rational> b;
  std::vector<Rational> weighted;

  std::size_t level() const noexcept { return witness.size(); }
  bool is_determinate() const noexcept { return e.is_determinate(); }
  Rational b_value() const;         ///< throws std::logic_error when e is not determined
  Rational weighted_value() const;  ///< throws std::logic_error when e is not determined
  Rational b_min() const;
  Rational weighted_min() const;
};

/// b = a + 1 - 1/e. Throws std::invalid_argument for e <= 0.
Rational b_from_a(const Rational& a, int e);

/// Fills b and weighted from a and the candidate degrees.
DiscrepancyReport make_report(DivisorId divisor, std::vector<Center> witness, DegreeSet e, Rational a);

}  // namespace bterm
