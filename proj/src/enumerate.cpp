#include "brauer_terminal/resolution.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>

namespace bterm {

namespace {

constexpr std::size_t kKeptFailures = 16;

struct FirstStep {
  std::size_t chart = 0;
  Stratum center;
};

struct Collector {
  std::vector<DiscrepancyReport> reports;
  SideConditions side;
  std::size_t steps = 0;
  bool truncated = false;
};

struct Budget {
  std::size_t limit;
  std::atomic<std::size_t> used{0};
};

void note_failure(SideConditions& side, SideConditionFailure f) {
  if (side.failures.size() < kKeptFailures) side.failures.push_back(std::move(f));
}

void record(const StepOutcome& step, Collector& out) {
  ++out.steps;
  ++out.side.steps;
  const auto& r = step.report;
  if (r.level() == 1 && r.b_min() < 0) {
    out.side.level_one_nonnegative = false;
    note_failure(out.side, {r.divisor, r.witness, "b(E',X,alpha) >= 0", r.b_min()});
  }
  if (step.a_local.lo < 0) {
    ++out.side.local_a_failures;
    note_failure(out.side, {r.divisor, r.witness, "a(F,Y,Delta_{Y,alpha}) >= 0", step.a_local.lo});
  }
  if (step.propagation_violated) {
    ++out.side.propagation_violations;
    note_failure(out.side, {r.divisor, r.witness, "b(F,X,alpha) >= b(E,X,alpha)", r.b_min()});
  }
  out.reports.push_back(r);
}

void explore(const PathNode& node, int remaining, Collector& out, Budget& budget);

void visit(const PathNode& node, const Stratum& center, int remaining, Collector& out, Budget& budget) {
  if (budget.used.fetch_add(1, std::memory_order_relaxed) >= budget.limit) {
    out.truncated = true;
    return;
  }
  StepOutcome step = blow_up_step(node, center);
  record(step, out);
  if (remaining > 1)
    for (const auto& child : step.children) explore(child, remaining - 1, out, budget);
}

void explore(const PathNode& node, int remaining, Collector& out, Budget& budget) {
  const Chart& chart = node.local.chart;
  for (std::size_t c = 2; c <= chart.dim(); ++c)
    for (const auto& s : strata(chart, c)) visit(node, s, remaining, out, budget);
}

std::vector<FirstStep> first_steps(const BrauerModel& model) {
  std::vector<FirstStep> out;
  for (std::size_t i = 0; i < model.charts().size(); ++i) {
    const Chart& chart = model.charts()[i].chart;
    for (std::size_t c = 2; c <= chart.dim(); ++c)
      for (auto& s : strata(chart, c)) out.push_back({i, std::move(s)});
  }
  return out;
}

bool witness_before(const DiscrepancyReport& x, const DiscrepancyReport& y) {
  if (x.level() != y.level()) return x.level() < y.level();
  return x.witness < y.witness;
}

Enumeration merge(std::vector<Collector>& parts) {
  Enumeration en;
  std::map<DivisorId, DiscrepancyReport> best;
  for (auto& part : parts) {
    en.steps += part.steps;
    en.truncated = en.truncated || part.truncated;
    en.side.steps += part.side.steps;
    en.side.level_one_nonnegative = en.side.level_one_nonnegative && part.side.level_one_nonnegative;
    en.side.local_a_failures += part.side.local_a_failures;
    en.side.propagation_violations += part.side.propagation_violations;
    for (auto& f : part.side.failures) note_failure(en.side, std::move(f));

    for (auto& r : part.reports) {
      auto it = best.find(r.divisor);
      if (it == best.end()) {
        best.emplace(r.divisor, std::move(r));
        continue;
      }
      DiscrepancyReport& kept = it->second;
      if (kept.a != r.a)
        throw std::logic_error("enumerate_divisors: two blow-up sequences give different discrepancies for E" +
                               format_ray(r.divisor.ray()));
      std::vector<int> common;
      std::set_intersection(kept.e.values().begin(), kept.e.values().end(), r.e.values().begin(),
                            r.e.values().end(), std::back_inserter(common));
      if (common.empty())
        throw std::logic_error("enumerate_divisors: incompatible cover degrees for E" + format_ray(r.divisor.ray()));
      auto witness = witness_before(r, kept) ? std::move(r.witness) : std::move(kept.witness);
      kept = make_report(kept.divisor, std::move(witness), DegreeSet(std::move(common)), kept.a);
    }
  }
  en.reports.reserve(best.size());
  for (auto& [id, r] : best) en.reports.push_back(std::move(r));
  std::sort(en.reports.begin(), en.reports.end(), witness_before);
  return en;
}

void check_options(const EnumerationOptions& options) {
  if (options.depth < 1) throw std::invalid_argument("enumerate_divisors: depth must be at least 1");
}

}  // namespace

Enumeration enumerate_divisors_serial(const BrauerModel& model, const EnumerationOptions& options) {
  check_options(options);
  Budget budget{options.budget};
  std::vector<Collector> parts(1);
  for (const auto& fs : first_steps(model))
    visit(path_root(model, fs.chart), fs.center, options.depth, parts.front(), budget);
  return merge(parts);
}

Enumeration enumerate_divisors(const BrauerModel& model, const EnumerationOptions& options) {
  check_options(options);
  const auto tasks = first_steps(model);
  std::vector<Collector> parts(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  Budget budget{options.budget};
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    try {
      const auto& fs = tasks[static_cast<std::size_t>(t)];
      visit(path_root(model, fs.chart), fs.center, options.depth, parts[static_cast<std::size_t>(t)], budget);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return merge(parts);
}

}  // namespace bterm
