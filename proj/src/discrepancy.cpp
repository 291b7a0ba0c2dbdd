#include "brauer_terminal/discrepancy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bterm {

Rational DiscrepancyReport::b_value() const {
  if (!is_determinate()) throw std::logic_error("b is not determined: several candidate cover degrees");
  return b.front();
}

Rational DiscrepancyReport::weighted_value() const {
  if (!is_determinate()) throw std::logic_error("e*b is not determined: several candidate cover degrees");
  return weighted.front();
}

Rational DiscrepancyReport::b_min() const { return *std::min_element(b.begin(), b.end()); }

Rational DiscrepancyReport::weighted_min() const { return *std::min_element(weighted.begin(), weighted.end()); }

Rational b_from_a(const Rational& a, int e) {
  if (e <= 0) throw std::invalid_argument("b_from_a: cover degree must be positive");
  return a + 1 - Rational(1, e);
}

DiscrepancyReport make_report(DivisorId divisor, std::vector<Center> witness, DegreeSet e, Rational a) {
  DiscrepancyReport r{std::move(divisor), std::move(witness), std::move(e), a, {}, {}};
  for (int deg : r.e.values()) {
    r.b.push_back(b_from_a(a, deg));
    r.weighted.push_back(r.b.back() * deg);
  }
  return r;
}

Rational BoundaryDivisor::coefficient(const DivisorId& id) const {
  auto it = coefficients.find(id);
  return it == coefficients.end() ? Rational(0) : it->second;
}

BoundaryDivisor boundary_divisor(const BrauerModel& model) {
  BoundaryDivisor out;
  for (const auto& [id, d] : model.divisors()) {
    if (!d.degrees.is_determinate())
      throw std::domain_error("boundary_divisor: cover degree of " + d.name + " is not determined");
    if (d.degrees.value() > 1) out.coefficients.emplace(id, boundary_coefficient(d.degrees.value()));
  }
  return out;
}

Rational classical_discrepancy(const BrauerModel& model, const Stratum& center) {
  if (center.codim() < 2) throw std::invalid_argument("classical_discrepancy: center must have codimension >= 2");
  const Chart& chart = model.chart(center.chart_id).chart;
  const BoundaryDivisor delta = boundary_divisor(model);
  Rational sum{0};
  for (const auto& id : chart.coords()) sum += delta.coefficient(id) * multiplicity(chart, center, id);
  return Rational(static_cast<std::int64_t>(center.codim()) - 1) - sum;
}

DiscrepancyReport brauer_discrepancy(const BrauerModel& model, const Stratum& center) {
  if (center.codim() < 2) throw std::invalid_argument("brauer_discrepancy: center must have codimension >= 2");
  const std::size_t ci = model.chart_index(center.chart_id);
  const Chart& chart = model.charts()[ci].chart;
  StepOutcome step = blow_up_step(path_root(model, ci), center);
  DiscrepancyReport& report = step.report;

  const BoundaryDivisor delta = boundary_divisor(model);
  Rational sum{0};
  for (const auto& id : chart.coords()) sum += delta.coefficient(id) * multiplicity(chart, center, id);
  const Rational a = classical_discrepancy(model, center);
  const auto c = static_cast<std::int64_t>(center.codim());
  for (std::size_t k = 0; k < report.e.values().size(); ++k) {
    const int e = report.e.values()[k];
    const Rational b = Rational(c) - Rational(1, e) - sum;
    if (b != report.b[k] || b != b_from_a(a, e))
      throw std::logic_error("brauer_discrepancy: b differs from a + 1 - 1/e");
  }
  return std::move(report);
}

std::vector<DiscrepancyReport> level_one_reports(const BrauerModel& model) {
  std::vector<DiscrepancyReport> out;
  std::set<DivisorId> seen;
  for (const auto& lp : model.charts()) {
    for (std::size_t c = 2; c <= lp.chart.dim(); ++c) {
      for (const auto& s : strata(lp.chart, c)) {
        auto r = brauer_discrepancy(model, s);
        if (seen.insert(r.divisor).second) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

WeightedMinimum weighted_infimum(std::span<const DiscrepancyReport> reports) {
  if (reports.empty()) throw std::invalid_argument("weighted_infimum: no reports");
  WeightedMinimum best{reports.front().weighted_min(), 0};
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const Rational w = reports[i].weighted_min();
    if (w < best.value) best = {w, i};
  }
  return best;
}

}  // namespace bterm
