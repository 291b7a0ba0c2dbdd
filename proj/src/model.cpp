#include "brauer_terminal/model.hpp"

#include "brauer_terminal/path.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bterm {

std::string format_ray(const Ray& ray) {
  std::string s = "(";
  for (std::size_t i = 0; i < ray.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ray[i]);
  }
  return s + ")";
}

BrauerModel BrauerModel::affine(int torsion, const std::vector<std::string>& labels, const SymbolMatrix& symbols,
                                const std::map<std::string, int>& extra_degrees) {
  if (torsion < 1) throw std::invalid_argument("torsion order must be positive");
  if (symbols.torsion() != torsion) throw std::invalid_argument("symbol matrix torsion differs from model torsion");
  Chart root = new_affine_model(labels.size(), labels);
  if (symbols.dim() != labels.size())
    throw std::invalid_argument("symbol matrix size differs from the number of labels");
  const auto check = check_complex(symbols);
  if (!check.ok()) {
    const auto& v = check.violations.front();
    throw std::invalid_argument("residues do not cancel on V(" + labels[v.i] + "," + labels[v.j] + ")");
  }
  for (const auto& [label, degree] : extra_degrees) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end())
      throw std::invalid_argument("extra degree for unknown divisor '" + label + "'");
    if (degree < 1 || torsion % degree != 0)
      throw std::invalid_argument("extra degree of '" + label + "' must divide the torsion order");
  }

  BrauerModel m;
  m.torsion_ = torsion;
  m.labels_ = labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    DivisorState s;
    s.record.id = root.divisor_at(i);
    s.record.kind = DivisorKind::original;
    s.record.level = 0;
    auto it = extra_degrees.find(labels[i]);
    s.record.extra_degree = it == extra_degrees.end() ? 1 : it->second;
    s.name = labels[i];
    s.degrees = DegreeSet::exactly(cover_degree(residue(symbols, i), s.record));
    s.inherited = InheritedCover{s.record.extra_degree, true};
    m.divisors_.emplace(s.record.id, std::move(s));
  }
  m.charts_.push_back(LocalPair{std::move(root), symbols});
  return m;
}

const LocalPair& BrauerModel::chart(const std::string& id) const { return charts_.at(chart_index(id)); }

std::size_t BrauerModel::chart_index(const std::string& id) const {
  for (std::size_t i = 0; i < charts_.size(); ++i)
    if (charts_[i].chart.id() == id) return i;
  throw std::out_of_range("no chart with id " + id);
}

const DivisorState& BrauerModel::divisor(const DivisorId& id) const {
  auto it = divisors_.find(id);
  if (it == divisors_.end()) throw std::out_of_range("divisor " + format_ray(id.ray()) + " is not in the model");
  return it->second;
}

std::string BrauerModel::name_of(const DivisorId& id) const {
  if (auto it = divisors_.find(id); it != divisors_.end()) return it->second.name;
  return "E" + format_ray(id.ray());
}

std::string BrauerModel::describe(const Center& center) const {
  std::string s = "V(";
  for (std::size_t i = 0; i < center.size(); ++i) {
    if (i) s += ',';
    s += name_of(center[i]);
  }
  return s + ")";
}

Center BrauerModel::center_of(const Stratum& stratum) const {
  const auto& ch = chart(stratum.chart_id).chart;
  Center c;
  for (auto i : stratum.indices) c.push_back(ch.divisor_at(i));
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<DivisorId> BrauerModel::undetermined_divisors() const {
  std::vector<DivisorId> out;
  for (const auto& [id, s] : divisors_)
    if (!s.degrees.is_determinate()) out.push_back(id);
  return out;
}

BrauerModel BrauerModel::blown_up(const Center& center) const {
  if (center.size() < 2) throw std::invalid_argument("blown_up: center must have codimension >= 2");
  BrauerModel out;
  out.torsion_ = torsion_;
  out.labels_ = labels_;
  out.divisors_ = divisors_;

  std::vector<LocalPair> added;
  std::optional<DivisorState> exceptional;
  for (std::size_t ci = 0; ci < charts_.size(); ++ci) {
    const auto& ch = charts_[ci].chart;
    std::vector<std::size_t> slots;
    for (const auto& d : center)
      if (auto s = ch.slot_of(d)) slots.push_back(*s);
    if (slots.size() != center.size()) {
      out.charts_.push_back(charts_[ci]);
      continue;
    }
    const StepOutcome step = blow_up_step(path_root(*this, ci), ch.stratum(slots));
    DivisorState e;
    e.record.id = step.report.divisor;
    e.record.kind = DivisorKind::exceptional;
    int level = 0;
    std::vector<InheritedCover> comps;
    for (const auto& d : center) {
      level = std::max(level, divisor(d).record.level);
      comps.push_back(divisor(d).inherited);
    }
    e.record.level = level + 1;
    e.name = name_of(e.record.id);
    e.degrees = step.report.e;
    e.inherited = carried_by_exceptional(combine_on_center(comps));
    if (exceptional && !(exceptional->degrees == e.degrees))
      throw std::logic_error("blown_up: charts disagree on the exceptional cover degree");
    exceptional = std::move(e);
    for (const auto& child : step.children) added.push_back(child.local);
  }
  if (!exceptional) throw std::invalid_argument("blown_up: no chart meets " + describe(center));
  out.divisors_.emplace(exceptional->record.id, *exceptional);
  for (auto& lp : added) out.charts_.push_back(std::move(lp));
  return out;
}

}  // namespace bterm
