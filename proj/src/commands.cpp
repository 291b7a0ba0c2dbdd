#include "brauer_terminal/commands.hpp"

#include "brauer_terminal/discrepancy.hpp"
#include "brauer_terminal/model_io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bterm {

namespace {

using json = nlohmann::ordered_json;

json rational_json(const Rational& q) { return json::array({q.numerator(), q.denominator()}); }

json names_json(const BrauerModel& model, const Center& center) {
  json a = json::array();
  for (const auto& d : center) a.push_back(model.name_of(d));
  return a;
}

json report_json(const BrauerModel& model, const DiscrepancyReport& r) {
  json rec;
  rec["record"] = "discrepancy";
  rec["divisor"] = model.name_of(r.divisor);
  rec["ray"] = r.divisor.ray();
  rec["level"] = r.level();
  json witness = json::array();
  for (const auto& c : r.witness) witness.push_back(names_json(model, c));
  rec["witness"] = witness;
  rec["e"] = r.e.values();
  rec["a"] = rational_json(r.a);
  json b = json::array(), w = json::array();
  for (const auto& q : r.b) b.push_back(rational_json(q));
  for (const auto& q : r.weighted) w.push_back(rational_json(q));
  rec["b"] = b;
  rec["weighted"] = w;
  return rec;
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string degrees_text(const DegreeSet& e) {
  std::vector<std::string> parts;
  for (int v : e.values()) parts.push_back(std::to_string(v));
  return e.is_determinate() ? parts.front() : "{" + joined(parts, ",") + "}";
}

std::string values_text(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  for (const auto& q : values) parts.push_back(to_string(q));
  return values.size() == 1 ? parts.front() : "{" + joined(parts, ",") + "}";
}

std::string witness_text(const BrauerModel& model, const std::vector<Center>& witness) {
  std::vector<std::string> parts;
  for (const auto& c : witness) parts.push_back(model.describe(c));
  return joined(parts, " -> ");
}

void print_report_table(std::ostream& out, const BrauerModel& model, const std::vector<DiscrepancyReport>& reports) {
  out << std::left << std::setw(26) << "divisor" << std::setw(6) << "level" << std::setw(8) << "e" << std::setw(8)
      << "a" << std::setw(12) << "b" << std::setw(12) << "e*b"
      << "witness\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(26) << model.name_of(r.divisor) << std::setw(6) << r.level() << std::setw(8)
        << degrees_text(r.e) << std::setw(8) << to_string(r.a) << std::setw(12) << values_text(r.b) << std::setw(12)
        << values_text(r.weighted) << witness_text(model, r.witness) << "\n";
  }
}

void print_header(std::ostream& out, const LoadedModel& lm) {
  out << "model: torsion " << lm.spec.torsion << ", dimension " << lm.spec.dimension << ", divisors "
      << joined(lm.spec.labels, ",") << "\n";
}

class RecordSink {
 public:
  explicit RecordSink(const std::optional<std::filesystem::path>& path) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot write output file " + path->string());
    }
  }
  void put(const json& rec) {
    if (file_.is_open()) file_ << rec.dump() << '\n';
  }

 private:
  std::ofstream file_;
};

LoadedModel require_model(const CommandOptions& o, std::ostream& err) {
  if (!o.model) throw std::invalid_argument(o.command + ": --model PATH is required");
  LoadedModel lm = load_model(*o.model);
  for (const auto& w : lm.warnings) err << "warning: " << w << "\n";
  if (!lm.complex.ok()) {
    const auto& v = lm.complex.violations.front();
    throw std::invalid_argument("residues do not cancel on V(" + lm.spec.labels[v.i] + "," + lm.spec.labels[v.j] + ")");
  }
  return lm;
}

int cmd_boundary(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedModel lm = require_model(o, err);
  RecordSink sink(o.out);
  print_header(out, lm);
  const BoundaryDivisor delta = boundary_divisor(lm.model);
  out << std::left << std::setw(12) << "divisor" << std::setw(6) << "e"
      << "coefficient\n";
  for (const auto& [id, d] : lm.model.divisors()) {
    const Rational coeff = delta.coefficient(id);
    out << std::left << std::setw(12) << d.name << std::setw(6) << d.degrees.value() << to_string(coeff) << "\n";
    json rec;
    rec["record"] = "boundary";
    rec["divisor"] = d.name;
    rec["ray"] = id.ray();
    rec["e"] = d.degrees.value();
    rec["coefficient"] = rational_json(coeff);
    sink.put(rec);
  }
  return kExitOk;
}

int cmd_discrepancy(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedModel lm = require_model(o, err);
  RecordSink sink(o.out);
  print_header(out, lm);
  const auto reports = level_one_reports(lm.model);
  print_report_table(out, lm.model, reports);
  for (const auto& r : reports) sink.put(report_json(lm.model, r));
  return kExitOk;
}

int cmd_resolve(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedModel lm = require_model(o, err);
  RecordSink sink(o.out);
  print_header(out, lm);
  const ResolutionTree tree = level_one_fixup(lm.model, o.max_rounds);
  if (tree.edges.empty()) out << "no bad strata: the pair is level-1 Brauer terminal as given\n";
  for (std::size_t k = 0; k < tree.edges.size(); ++k) {
    const auto& e = tree.edges[k];
    const BrauerModel& parent = tree.nodes[e.parent];
    const BrauerModel& child = tree.nodes[e.child];
    out << "blow-up " << (k + 1) << ": " << parent.describe(e.center) << " -> " << child.name_of(e.exceptional)
        << ", charts " << joined(e.child_charts, " ") << "\n";
    json rec;
    rec["record"] = "blow-up";
    rec["step"] = k + 1;
    rec["center"] = names_json(parent, e.center);
    rec["exceptional"] = child.name_of(e.exceptional);
    rec["ray"] = e.exceptional.ray();
    rec["charts"] = e.child_charts;
    sink.put(rec);
  }
  const BrauerModel& leaf = tree.leaf();
  for (const auto& lp : leaf.charts()) {
    std::vector<std::string> coords;
    for (const auto& d : lp.chart.coords()) coords.push_back(leaf.name_of(d));
    out << "chart " << lp.chart.id() << ": " << joined(coords, ", ") << "\n";
    json rec;
    rec["record"] = "chart";
    rec["id"] = lp.chart.id();
    rec["coordinates"] = coords;
    sink.put(rec);
  }
  const auto reports = level_one_reports(leaf);
  const auto best = weighted_infimum(reports);
  out << "level-1 minimum e*b after fix-up: " << to_string(best.value) << " at "
      << witness_text(leaf, reports[best.index].witness) << "\n";
  json rec;
  rec["record"] = "resolution";
  rec["blow_ups"] = tree.blow_ups();
  rec["level1_min_weighted"] = rational_json(best.value);
  sink.put(rec);
  return kExitOk;
}

int cmd_certify(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  const LoadedModel lm = require_model(o, err);
  RecordSink sink(o.out);
  print_header(out, lm);
  CertifyOptions co;
  co.depth = o.depth;
  co.fixup = !o.no_fixup;
  co.max_rounds = o.max_rounds;
  co.threads = o.threads > 0 ? o.threads : threads_from_environment();
  const TerminalityCertificate cert = certify(lm.model, co);
  const BrauerModel& base = *cert.model;

  if (cert.fixup_blow_ups) out << "fix-up blow-ups: " << cert.fixup_blow_ups << "\n";
  out << "verdict: " << to_string(cert.verdict) << "\n";
  out << "levels checked: " << cert.level_checked << " (" << cert.reports.size() << " divisors, "
      << cert.side.steps << " blow-ups" << (cert.truncated ? ", truncated" : "") << ")\n";
  if (cert.argmin)
    out << "min e*b: " << to_string(cert.min_weighted) << " at " << base.name_of(cert.argmin->divisor) << " via "
        << witness_text(base, cert.argmin->witness) << "\n";
  out << "level-1 terminal: " << (cert.level1_terminal ? "yes" : "no") << "\n";
  out << "side conditions: " << (cert.side.passed() ? "pass" : "fail") << "\n";
  for (const auto& f : cert.side.failures)
    out << "  " << f.condition << " fails (" << to_string(f.value) << ") at " << base.name_of(f.divisor) << " via "
        << witness_text(base, f.witness) << "\n";
  for (const auto& c : cert.bad_strata) out << "bad stratum: " << base.describe(c) << "\n";
  for (const auto& d : cert.indeterminate_divisors) out << "undetermined cover degree: " << base.name_of(d) << "\n";

  for (const auto& r : cert.reports) sink.put(report_json(base, r));
  sink.put(json::parse(certificate_record(cert)));

  switch (cert.verdict) {
    case Verdict::terminal_certified: return kExitOk;
    case Verdict::bad_stratum_found: return kExitBadStratum;
    case Verdict::indeterminate: return kExitIndeterminate;
  }
  return kExitError;
}

int cmd_remark(const CommandOptions& o, std::ostream& out, std::ostream&) {
  RecordSink sink(o.out);
  const RemarkReport rep = run_remark();
  const BrauerModel& m = rep.model;
  out << "model: torsion 3, alpha = (x1,x2), unramified 3-cover on V(x3)\n";
  out << "level-1 minimum b: " << to_string(rep.level_one_min_b)
      << (rep.level_one_terminal ? " (level-1 terminal; no fix-up applies)" : "") << "\n";
  out << "E = blow-up of " << m.describe(rep.first_center) << ": e = " << degrees_text(rep.exceptional_E.e)
      << ", b(E,X) = " << values_text(rep.exceptional_E.b) << "\n";
  out << "F = blow-up of " << m.describe(rep.second_center) << ": monomial part of e_F = " << rep.monomial_order_F
      << ", e_F in " << degrees_text(rep.exceptional_F.e) << "\n";
  json cands = json::array();
  for (const auto& c : rep.candidates) {
    out << "  e_F = " << c.e_F << ": b(F,Y) = " << to_string(c.b_F_over_Y) << ", b(F,X) = " << to_string(c.b_F_over_X)
        << ", b(F,Y) + b(E,X) = " << to_string(c.additive_sum) << (c.additivity_holds ? " (additive)" : " (NOT additive)")
        << ", min e*b = " << to_string(c.min_weighted)
        << (c.may_not_be_terminal ? "  -> the pair may not admit a terminal resolution" : "") << "\n";
    json jc;
    jc["e_F"] = c.e_F;
    jc["b_F_Y"] = rational_json(c.b_F_over_Y);
    jc["b_F_X"] = rational_json(c.b_F_over_X);
    jc["additive"] = c.additivity_holds;
    jc["min_weighted"] = rational_json(c.min_weighted);
    jc["may_not_be_terminal"] = c.may_not_be_terminal;
    cands.push_back(jc);
  }
  json rec;
  rec["record"] = "remark";
  rec["b_E"] = rational_json(rep.exceptional_E.b_value());
  rec["e_E"] = rep.exceptional_E.e.value();
  rec["monomial_e_F"] = rep.monomial_order_F;
  rec["e_F"] = rep.exceptional_F.e.values();
  rec["candidates"] = cands;
  sink.put(rec);
  return kExitOk;
}

}  // namespace

int threads_from_environment() {
  const char* v = std::getenv("BRAUER_TERMINAL_THREADS");
  if (!v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1 || n > 4096) return 0;
  return static_cast<int>(n);
}

std::string discrepancy_record(const BrauerModel& model, const DiscrepancyReport& report) {
  return report_json(model, report).dump();
}

std::string certificate_record(const TerminalityCertificate& cert) {
  json rec;
  rec["record"] = "certificate";
  rec["verdict"] = to_string(cert.verdict);
  rec["level_checked"] = cert.level_checked;
  rec["min_weighted"] = rational_json(cert.min_weighted);
  if (cert.model && cert.argmin) rec["argmin"] = cert.model->name_of(cert.argmin->divisor);
  rec["level1_terminal"] = cert.level1_terminal;
  rec["side_conditions"] = cert.side.passed();
  rec["fixup_blow_ups"] = cert.fixup_blow_ups;
  rec["divisors"] = cert.reports.size();
  rec["truncated"] = cert.truncated;
  json bad = json::array();
  if (cert.model)
    for (const auto& c : cert.bad_strata) bad.push_back(names_json(*cert.model, c));
  rec["bad_strata"] = bad;
  json und = json::array();
  if (cert.model)
    for (const auto& d : cert.indeterminate_divisors) und.push_back(cert.model->name_of(d));
  rec["undetermined"] = und;
  return rec.dump();
}

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.depth < 1) throw std::invalid_argument("--depth must be at least 1");
    if (options.max_rounds < 0) throw std::invalid_argument("--max-rounds must be nonnegative");
    if (options.command == "boundary") return cmd_boundary(options, out, err);
    if (options.command == "discrepancy") return cmd_discrepancy(options, out, err);
    if (options.command == "resolve") return cmd_resolve(options, out, err);
    if (options.command == "certify") return cmd_certify(options, out, err);
    if (options.command == "remark") return cmd_remark(options, out, err);
    err << "error: unknown command '" << options.command << "'\n";
  } catch (const ModelParseError& e) {
    err << "error: " << (options.model ? options.model->string() + ": " : "") << e.what() << "\n";
  } catch (const NonTerminationError& e) {
    err << "error: " << e.what() << " (" << e.tree().blow_ups() << " blow-ups performed)\n";
  } catch (const std::exception& e) {
    err << "error: " << options.command << ": " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace bterm
