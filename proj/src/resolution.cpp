#include "brauer_terminal/resolution.hpp"

#include <algorithm>
#include <set>

namespace bterm {

std::vector<Stratum> find_bad_strata(const BrauerModel& model) {
  if (model.torsion() != 2)
    throw std::domain_error("find_bad_strata: the fix-up is defined for 2-torsion classes only");
  std::vector<Stratum> out;
  std::set<Center> seen;
  for (const auto& lp : model.charts()) {
    if (lp.chart.dim() < 2) continue;
    for (const auto& s : strata(lp.chart, 2)) {
      const auto i = s.indices[0], j = s.indices[1];
      const auto& di = model.divisor(lp.chart.divisor_at(i)).degrees;
      const auto& dj = model.divisor(lp.chart.divisor_at(j)).degrees;
      if (!(di == DegreeSet::exactly(2) && dj == DegreeSet::exactly(2))) continue;
      if (ramifies_on(lp.symbols, i, j)) continue;
      const auto report = brauer_discrepancy(model, s);
      if (!(report.e == DegreeSet::exactly(1))) continue;
      if (seen.insert(model.center_of(s)).second) out.push_back(s);
    }
  }
  return out;
}

ResolutionTree level_one_fixup(const BrauerModel& model, int max_rounds) {
  ResolutionTree tree;
  tree.nodes.push_back(model);
  for (int round = 0;; ++round) {
    const BrauerModel& current = tree.nodes.back();
    const auto bad = find_bad_strata(current);
    if (bad.empty()) return tree;
    if (round >= max_rounds)
      throw NonTerminationError("level_one_fixup: bad strata remain after " + std::to_string(max_rounds) +
                                    " blow-ups, next " + current.describe(current.center_of(bad.front())),
                                std::move(tree));

    ResolutionEdge edge;
    edge.parent = tree.nodes.size() - 1;
    edge.child = tree.nodes.size();
    edge.center = current.center_of(bad.front());
    Ray ray(current.dim(), 0);
    for (const auto& d : edge.center)
      for (std::size_t k = 0; k < ray.size(); ++k) ray[k] += d.ray()[k];
    edge.exceptional = DivisorId(std::move(ray));

    BrauerModel next = current.blown_up(edge.center);
    std::set<std::string> old_ids;
    for (const auto& lp : current.charts()) old_ids.insert(lp.chart.id());
    for (const auto& lp : next.charts())
      if (!old_ids.count(lp.chart.id())) edge.child_charts.push_back(lp.chart.id());
    tree.nodes.push_back(std::move(next));
    tree.edges.push_back(std::move(edge));
  }
}

bool CompositionCheck::passed() const noexcept {
  return hypotheses_hold() &&
         std::all_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.bound_holds; });
}

bool CompositionCheck::bound_consistent() const noexcept {
  if (!hypotheses_hold() || !premise_holds) return true;
  return std::all_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.bound_holds; });
}

CompositionCheck check_composition(const BrauerModel& model, const BlowUpPath& path, const Rational& lambda) {
  if (path.steps.empty()) throw std::invalid_argument("check_composition: empty blow-up path");
  if (path.chart >= model.charts().size()) throw std::invalid_argument("check_composition: no such chart");

  CompositionCheck out;
  out.lambda = lambda;
  PathNode node = path_root(model, path.chart);
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    const PathStep& ps = path.steps[k];
    const Stratum center = node.local.chart.stratum(ps.slots);
    if (ps.child >= center.codim()) throw std::invalid_argument("check_composition: child chart index out of range");

    const bool last = k + 1 == path.steps.size();
    if (last) {
      out.premise_holds = std::any_of(center.indices.begin(), center.indices.end(), [&](std::size_t i) {
        const SlotState& s = node.slots[i];
        return s.exceptional_over_base && s.b_min_over_base >= lambda;
      });
    }
    StepOutcome step = blow_up_step(node, center);
    if (!step.tower_nonnegative) {
      for (std::size_t t = 0; t < node.tower_b_min.size(); ++t)
        if (node.tower_b_min[t] < 0)
          out.failures.push_back({DivisorId(), {node.witness.begin(), node.witness.begin() + t + 1},
                                  "b(E',X,alpha) >= 0", node.tower_b_min[t]});
    }
    if (step.a_local.lo < 0)
      out.failures.push_back({step.report.divisor, step.report.witness, "a(F,Y,Delta_{Y,alpha}) >= 0", step.a_local.lo});
    out.steps.push_back({step.report, step.a_local, step.b_local, step.tower_nonnegative});
    if (last) {
      for (std::size_t c = 0; c < step.report.e.values().size(); ++c)
        out.candidates.push_back({step.report.e.values()[c], step.report.b[c], step.report.b[c] >= lambda});
    } else {
      node = std::move(step.children[ps.child]);
    }
  }
  // Name the exceptional divisor behind each tower failure.
  for (auto& f : out.failures)
    if (f.divisor.ray().empty())
      for (const auto& s : out.steps)
        if (s.report.witness == f.witness) f.divisor = s.report.divisor;
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::terminal_certified: return "terminal-certified";
    case Verdict::bad_stratum_found: return "bad-stratum-found";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

TerminalityCertificate certify(const BrauerModel& model, const CertifyOptions& options) {
  if (options.depth < 1) throw std::invalid_argument("certify: depth must be at least 1");
  TerminalityCertificate cert;
  cert.level_checked = options.depth;

  BrauerModel base = model;
  if (options.fixup && model.torsion() == 2) {
    ResolutionTree tree = level_one_fixup(model, options.max_rounds);
    cert.fixup_blow_ups = tree.blow_ups();
    base = tree.leaf();
  }
  cert.model = base;

  cert.indeterminate_divisors = base.undetermined_divisors();
  if (!cert.indeterminate_divisors.empty()) {
    cert.verdict = Verdict::indeterminate;
    return cert;
  }

  Enumeration en = enumerate_divisors(base, {options.depth, options.budget, options.threads});
  cert.side = en.side;
  cert.truncated = en.truncated;
  cert.reports = std::move(en.reports);
  if (cert.reports.empty()) {
    // dim < 2: no exceptional divisor exists, bdiscrep is an infimum over the empty set.
    cert.level1_terminal = true;
    cert.verdict = Verdict::terminal_certified;
    return cert;
  }

  const auto best = weighted_infimum(cert.reports);
  cert.min_weighted = best.value;
  cert.argmin = cert.reports[best.index];

  cert.level1_terminal = true;
  for (const auto& r : cert.reports) {
    if (r.level() == 1) {
      if (r.b_min() <= 0) cert.level1_terminal = false;
      if (r.is_determinate() && r.b_value() <= 0) cert.bad_strata.push_back(r.witness.front());
    } else if (!r.is_determinate()) {
      cert.indeterminate_divisors.push_back(r.divisor);
    }
  }
  for (const auto& r : cert.reports)
    if (r.level() == 1 && !r.is_determinate()) cert.indeterminate_divisors.push_back(r.divisor);

  if (!cert.bad_strata.empty()) {
    cert.verdict = Verdict::bad_stratum_found;
  } else if (cert.truncated || !cert.indeterminate_divisors.empty()) {
    cert.verdict = Verdict::indeterminate;
  } else if (cert.min_weighted <= 0) {
    cert.bad_strata.push_back(cert.argmin->witness.back());
    cert.verdict = Verdict::bad_stratum_found;
  } else if (!cert.side.passed() || !cert.level1_terminal) {
    cert.verdict = Verdict::indeterminate;
  } else {
    cert.verdict = Verdict::terminal_certified;
  }
  return cert;
}

}  // namespace bterm
