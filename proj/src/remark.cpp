#include "brauer_terminal/resolution.hpp"

#include <algorithm>

namespace bterm {

RemarkReport run_remark() {
  SymbolMatrix alpha(3, 3);
  alpha.add_symbol(0, 1, 1);
  BrauerModel model = BrauerModel::affine(3, {"x1", "x2", "x3"}, alpha, {{"x3", 3}});

  // E: blow up V(x1, x3). The chart where x3 becomes the exceptional coordinate keeps the
  // strict transform of V(x1) as a coordinate, so F = blow-up of E ∩ V(x1) lives there.
  const BlowUpPath path{0, {PathStep{{0, 2}, 1}, PathStep{{0, 2}, 0}}};

  const Stratum first = model.charts().front().chart.stratum({0, 2});
  DiscrepancyReport e_report = brauer_discrepancy(model, first);

  PathNode root = path_root(model, 0);
  StepOutcome step_e = blow_up_step(root, first);
  const PathNode& y_chart = step_e.children[1];
  const Stratum second = y_chart.local.chart.stratum({0, 2});
  StepOutcome step_f = blow_up_step(y_chart, second);

  const auto level_one = level_one_reports(model);
  Rational level_one_min_b = level_one.front().b_min();
  for (const auto& r : level_one) level_one_min_b = std::min(level_one_min_b, r.b_min());
  const Rational level_one_min_weighted = weighted_infimum(level_one).value;

  RemarkReport out{model,
                   model.center_of(first),
                   step_f.report.witness.back(),
                   e_report,
                   step_f.report,
                   step_f.monomial_order,
                   level_one_min_b > 0,
                   level_one_min_b,
                   {},
                   check_composition(model, path, e_report.b_value())};

  const Rational b_e = e_report.b_value();
  const auto& degrees = step_f.report.e.values();
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    RemarkCandidate c;
    c.e_F = degrees[k];
    // b(F, Y, alpha) is a point: every divisor through the second center has a determined degree.
    c.b_F_over_Y = step_f.b_local[k].lo;
    c.b_F_over_X = step_f.report.b[k];
    c.additive_sum = c.b_F_over_Y + b_e;
    c.additivity_holds = step_f.b_local[k].is_point() && c.additive_sum == c.b_F_over_X;
    c.min_weighted = std::min(level_one_min_weighted, step_f.report.weighted[k]);
    c.may_not_be_terminal = c.b_F_over_X <= 0;
    out.candidates.push_back(c);
  }
  return out;
}

}  // namespace bterm
