// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "brauer_terminal/commands.hpp"
#include "brauer_terminal/discrepancy.hpp"
#include "brauer_terminal/model_io.hpp"
#include "brauer_terminal/path.hpp"
#include "brauer_terminal/resolution.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bterm;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

const std::vector<corpus::Entry>& shared_corpus() {
  static const auto c = corpus::generate(200);
  return c;
}

std::vector<Stratum> all_strata(const Chart& chart) {
  std::vector<Stratum> out;
  for (std::size_t c = 2; c <= chart.dim(); ++c)
    for (auto& s : strata(chart, c)) out.push_back(std::move(s));
  return out;
}

// b(E) = c - 1/e - sum a_i mult_Z D_i against a + 1 - 1/e, for every stratum of every corpus model.
Outcome formula_consistency() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& entry : shared_corpus()) {
    const auto delta = boundary_divisor(entry.model);
    const Chart& chart = entry.model.charts().front().chart;
    for (const auto& s : all_strata(chart)) {
      const auto report = brauer_discrepancy(entry.model, s);
      const int e = report.e.value();
      Rational sum(0);
      for (const auto& id : chart.coords()) sum += delta.coefficient(id) * multiplicity(chart, s, id);
      const Rational by_formula = Rational(static_cast<std::int64_t>(s.codim())) - Rational(1, e) - sum;
      const Rational via_a = classical_discrepancy(entry.model, s) + 1 - Rational(1, e);
      o.require(by_formula == via_a && report.b_value() == by_formula, "mismatch at " + entry.model.describe(entry.model.center_of(s)));
      ++checked;
    }
  }
  o.detail = o.pass ? std::to_string(shared_corpus().size()) + " models, " + std::to_string(checked) + " strata" : o.detail;
  return o;
}

Outcome codim_three_positivity() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& entry : shared_corpus()) {
    const Chart& chart = entry.model.charts().front().chart;
    for (std::size_t c = 3; c <= chart.dim(); ++c)
      for (const auto& s : strata(chart, c)) {
        o.require(brauer_discrepancy(entry.model, s).b_value() > 0, "b <= 0 at codim " + std::to_string(c));
        ++checked;
      }
  }
  if (o.pass) o.detail = std::to_string(checked) + " strata of codim >= 3, b > 0 on all";
  return o;
}

Outcome classical_nonnegativity() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& entry : shared_corpus()) {
    for (const auto& s : all_strata(entry.model.charts().front().chart)) {
      o.require(classical_discrepancy(entry.model, s) >= 0, "a < 0 at level 1");
      ++checked;
    }
    for (const auto& r : enumerate_divisors(entry.model, {.depth = 2}).reports) {
      o.require(r.a >= 0, "a < 0 for " + entry.model.name_of(r.divisor));
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " blow-ups up to level 2, a >= 0 on all";
  return o;
}

Outcome bad_case_lifecycle() {
  Outcome o;
  const std::vector<oracle::RootSymbol> symbols{{0, 2, 1}, {1, 2, 1}};
  const auto model = corpus::make_model(2, 3, symbols);
  const Chart& root = model.charts().front().chart;

  const auto report = brauer_discrepancy(model, root.stratum({0, 1}));
  o.require(report.e == DegreeSet::exactly(1) && report.b_value() == 0, "b(E) at V(x1,x2) is not 0 with e_E = 1");
  for (const auto& c : blow_up(root, root.stratum({0, 1}))) {
    const std::size_t t = c.parent()->center.indices[c.parent()->chart_index];
    o.require(oracle::class_order(oracle::naive_residue(symbols, c.substitution(), t, 2), 2) == 1,
              "symbol expansion gives e_E != 1");
  }
  const auto bad = find_bad_strata(model);
  o.require(bad.size() == 1 && bad[0].indices == std::vector<std::size_t>{0, 1}, "bad strata differ from [V(x1,x2)]");

  const auto tree = level_one_fixup(model);
  o.require(tree.blow_ups() == 1, "fix-up used " + std::to_string(tree.blow_ups()) + " blow-ups");

  const auto cert = certify(model, {.depth = 3});
  o.require(cert.verdict == Verdict::terminal_certified, "certify verdict " + to_string(cert.verdict));
  o.require(cert.min_weighted > 0, "min e*b is not positive");
  const auto brute = enumerate_divisors_serial(tree.leaf(), {.depth = 3});
  o.require(!brute.truncated && weighted_infimum(brute.reports).value == cert.min_weighted,
            "exhaustive depth-3 minimum disagrees with the certificate");
  if (o.pass)
    o.detail = "b = 0, e_E = 1 at V(x1,x2); 1 fix-up blow-up; depth 3 terminal-certified, min e*b = " +
               to_string(cert.min_weighted) + " over " + std::to_string(cert.reports.size()) + " divisors";
  return o;
}

Outcome remark_reproduction() {
  Outcome o;
  const auto rep = run_remark();
  o.require(rep.exceptional_E.b_value() == Rational(1, 3), "b(E,X) != 1/3");
  o.require(rep.exceptional_F.e == DegreeSet({1, 3}), "e_F candidates differ from {1,3}");
  bool saw_one = false;
  for (const auto& c : rep.candidates) {
    o.require(c.b_F_over_X == 1 - Rational(1, c.e_F), "b(F,X) != 1 - 1/e_F for e_F = " + std::to_string(c.e_F));
    o.require(c.additivity_holds && c.b_F_over_Y + rep.exceptional_E.b_value() == c.b_F_over_X,
              "additivity fails for e_F = " + std::to_string(c.e_F));
    if (c.e_F == 1) {
      saw_one = true;
      o.require(c.min_weighted == 0, "e_F = 1 candidate min e*b != 0");
    }
  }
  o.require(saw_one, "no e_F = 1 candidate");
  if (o.pass) o.detail = "b(E) = 1/3; e_F in {1,3}: b(F,X) = 0, 2/3, additive; e_F = 1 gives min e*b = 0";
  return o;
}

Outcome toric_oracle() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::size_t sequences = 0;
  for (const auto& entry : shared_corpus()) {
    const auto delta = boundary_divisor(entry.model);
    std::vector<Rational> d;
    for (const auto& id : entry.model.charts().front().chart.coords()) d.push_back(delta.coefficient(id));
    const std::size_t depth = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto path = corpus::random_path(rng, entry.labels.size(), depth);
    auto tracker = oracle::RayTracker::root(entry.labels.size());
    PathNode node = path_root(entry.model, 0);
    for (const auto& step : path) {
      auto outcome = blow_up_step(node, node.local.chart.stratum(step.center));
      const Ray v = tracker.blow_up(step.center, step.chart);
      o.require(outcome.report.divisor.ray() == v, "engine and oracle disagree on the valuation");
      o.require(outcome.report.a == oracle::toric_discrepancy(v, d), "a != sum v_i (1 - d_i) - 1 at " + format_ray(v));
      node = std::move(outcome.children[step.chart]);
    }
    ++sequences;
  }
  if (o.pass) o.detail = std::to_string(sequences) + " random sequences of depth <= 3";
  return o;
}

Outcome complex_cancellation() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::size_t matrices = 0;
  std::size_t mutations = 0;
  auto check = [&](const SymbolMatrix& m) {
    ++matrices;
    o.require(check_complex(m).ok(), "cancellation fails on a constructed matrix");
    const std::size_t n = m.dim();
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    if (j >= i) ++j;
    IntMatrix raw = m.entries();
    raw(i, j) = (raw(i, j) + 1) % m.torsion();
    const auto mutated = check_complex(SymbolMatrix(m.torsion(), raw));
    ++mutations;
    bool named = false;
    for (const auto& v : mutated.violations) named = named || (v.i == std::min(i, j) && v.j == std::max(i, j));
    o.require(!mutated.ok() && named, "mutation not caught");
  };
  for (const auto& entry : shared_corpus()) {
    check(entry.matrix);
    for (const auto& s : all_strata(entry.model.charts().front().chart))
      for (const auto& c : blow_up(entry.model.charts().front().chart, s)) check(transform(entry.matrix, c.step_substitution()));
    const auto tree = level_one_fixup(entry.model);
    for (const auto& lp : tree.leaf().charts()) check(lp.symbols);
  }
  if (o.pass)
    o.detail = std::to_string(matrices) + " matrices pass, " + std::to_string(mutations) + " mutations caught";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const std::filesystem::path models = BRAUER_TERMINAL_MODELS_DIR;
  const auto dir = std::filesystem::temp_directory_path();
  std::size_t bytes = 0;
  for (const char* name : {"bad_case.model", "trivial.model", "remark.model"}) {
    std::vector<std::string> outputs;
    for (int threads : {0, 0, 1, 3}) {
      CommandOptions opts;
      opts.command = "certify";
      opts.model = models / name;
      opts.threads = threads;
      opts.out = dir / ("brauer_terminal_acceptance_" + std::to_string(outputs.size()) + ".jsonl");
      std::ostringstream out, err;
      run_command(opts, out, err);
      outputs.push_back(slurp(*opts.out));
      std::filesystem::remove(*opts.out);
    }
    for (const auto& s : outputs) o.require(!s.empty() && s == outputs.front(), std::string("output differs for ") + name);
    bytes += outputs.front().size();
  }
  if (o.pass) o.detail = "certify output byte-identical across runs and thread counts (" + std::to_string(bytes) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"formula consistency", formula_consistency},
      {"codim >= 3 positivity", codim_three_positivity},
      {"classical nonnegativity", classical_nonnegativity},
      {"bad-case lifecycle", bad_case_lifecycle},
      {"3-torsion example", remark_reproduction},
      {"toric oracle equivalence", toric_oracle},
      {"complex cancellation", complex_cancellation},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first << " -- "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
