#include "brauer_terminal/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace bterm {

PathNode path_root(const BrauerModel& base, std::size_t chart_index) {
  const LocalPair& lp = base.charts().at(chart_index);
  PathNode node{lp, {}, {}, {}};
  node.slots.reserve(lp.chart.dim());
  for (const auto& id : lp.chart.coords()) {
    const DivisorState& d = base.divisor(id);
    SlotState s;
    s.id = id;
    if (d.degrees.is_determinate()) s.crepant = boundary_coefficient(d.degrees.value());
    s.degrees = d.degrees;
    s.inherited = d.inherited;
    node.slots.push_back(std::move(s));
  }
  return node;
}

StepOutcome blow_up_step(const PathNode& node, const Stratum& center) {
  const Chart& chart = node.local.chart;
  std::vector<Chart> charts = blow_up(chart, center);
  const auto c = static_cast<std::int64_t>(center.codim());

  std::vector<SymbolMatrix> symbols;
  symbols.reserve(charts.size());
  std::optional<KummerClass> along_exceptional;
  for (std::size_t j = 0; j < charts.size(); ++j) {
    symbols.push_back(transform(node.local.symbols, charts[j].step_substitution()));
    KummerClass k = residue(symbols.back(), center.indices[j]);
    if (along_exceptional && along_exceptional->order() != k.order())
      throw std::logic_error("blow_up_step: charts disagree on the exceptional residue");
    if (!along_exceptional) along_exceptional = std::move(k);
  }

  std::vector<InheritedCover> comps;
  Center ids;
  Rational crepant_sum{0};
  Rational coeff_lo{0}, coeff_hi{0};
  for (auto i : center.indices) {
    const SlotState& s = node.slots[i];
    if (!s.crepant)
      throw std::domain_error("blow_up_step: divisor " + format_ray(s.id.ray()) + " has no determined cover degree");
    crepant_sum += *s.crepant;
    coeff_lo += boundary_coefficient(s.degrees.min());
    coeff_hi += boundary_coefficient(s.degrees.max());
    comps.push_back(s.inherited);
    ids.push_back(s.id);
  }
  std::sort(ids.begin(), ids.end());

  const InheritedCover inherited = combine_on_center(comps);
  DegreeSet degrees = cover_degree_candidates(*along_exceptional, inherited);
  const Rational a = Rational(c - 1) - crepant_sum;

  StepOutcome out;
  auto witness = node.witness;
  witness.push_back(ids);
  out.report = make_report(charts.front().divisor_at(center.indices.front()), std::move(witness), degrees, a);
  out.monomial_order = along_exceptional->order();
  out.a_local = RationalRange{Rational(c - 1) - coeff_hi, Rational(c - 1) - coeff_lo};
  for (int e : degrees.values())
    out.b_local.push_back(RationalRange{Rational(c) - Rational(1, e) - coeff_hi, Rational(c) - Rational(1, e) - coeff_lo});

  out.tower_nonnegative =
      std::all_of(node.tower_b_min.begin(), node.tower_b_min.end(), [](const Rational& b) { return b >= 0; });
  const Rational b_min = out.report.b_min();
  if (out.tower_nonnegative && out.a_local.lo >= 0) {
    for (auto i : center.indices) {
      const SlotState& s = node.slots[i];
      if (s.exceptional_over_base && b_min < s.b_min_over_base) out.propagation_violated = true;
    }
  }

  SlotState exc;
  exc.id = out.report.divisor;
  exc.crepant = -a;
  exc.degrees = degrees;
  exc.inherited = carried_by_exceptional(inherited);
  exc.exceptional_over_base = true;
  exc.b_min_over_base = b_min;

  out.children.reserve(charts.size());
  for (std::size_t j = 0; j < charts.size(); ++j) {
    PathNode child{LocalPair{std::move(charts[j]), std::move(symbols[j])}, node.slots, out.report.witness,
                   node.tower_b_min};
    child.slots[center.indices[j]] = exc;
    child.tower_b_min.push_back(b_min);
    out.children.push_back(std::move(child));
  }
  return out;
}

}  // namespace bterm
