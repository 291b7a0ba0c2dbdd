#include "brauer_terminal/chart.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bterm {

bool DivisorId::is_root_coordinate() const {
  return std::count(ray_.begin(), ray_.end(), 1) == 1 &&
         std::count(ray_.begin(), ray_.end(), 0) == static_cast<std::ptrdiff_t>(ray_.size()) - 1;
}

std::strong_ordering DivisorId::operator<=>(const DivisorId& other) const {
  const auto weight = [](const Ray& r) {
    std::int64_t w = 0;
    for (auto v : r) w += v;
    return w;
  };
  if (auto c = weight(ray_) <=> weight(other.ray_); c != 0) return c;
  return other.ray_ <=> ray_;
}

std::optional<std::size_t> Chart::slot_of(const DivisorId& id) const {
  auto it = std::find(coords_.begin(), coords_.end(), id);
  if (it == coords_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - coords_.begin());
}

Monomial Chart::pull_back(const Monomial& parent_monomial) const {
  if (parent_monomial.exponents.size() != dim())
    throw std::invalid_argument("pull_back: monomial length differs from chart dimension");
  Monomial out{std::vector<std::int64_t>(dim(), 0)};
  for (std::size_t p = 0; p < dim(); ++p)
    for (std::size_t k = 0; k < dim(); ++k) out.exponents[p] += step_(p, k) * parent_monomial.exponents[k];
  return out;
}

Stratum Chart::stratum(std::vector<std::size_t> indices) const {
  std::sort(indices.begin(), indices.end());
  if (indices.empty()) throw std::invalid_argument("stratum: empty index set");
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::invalid_argument("stratum: duplicate index");
  if (indices.back() >= dim()) throw std::out_of_range("stratum: index out of range");
  return Stratum{id_, std::move(indices)};
}

Chart new_affine_model(std::size_t dim, const std::vector<std::string>& labels) {
  if (dim == 0) throw std::invalid_argument("new_affine_model: dimension must be positive");
  if (labels.size() != dim) throw std::invalid_argument("new_affine_model: need one label per coordinate");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("new_affine_model: empty label");
    if (!seen.insert(l).second) throw std::invalid_argument("new_affine_model: duplicate label '" + l + "'");
  }
  Chart c;
  c.id_ = "X";
  c.substitution_ = IntMatrix::identity(dim);
  c.step_ = IntMatrix::identity(dim);
  c.coords_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) c.coords_.emplace_back(c.substitution_.row(i));
  return c;
}

std::vector<Chart> blow_up(const Chart& chart, const Stratum& center) {
  if (center.chart_id != chart.id())
    throw std::invalid_argument("blow_up: center belongs to chart " + center.chart_id + ", not " + chart.id());
  if (center.codim() < 2) throw std::invalid_argument("blow_up: center must have codimension >= 2");
  const std::size_t n = chart.dim();
  for (std::size_t k = 0; k < center.indices.size(); ++k) {
    if (center.indices[k] >= n) throw std::out_of_range("blow_up: center index out of range");
    if (k > 0 && center.indices[k] <= center.indices[k - 1])
      throw std::invalid_argument("blow_up: center indices must be sorted and distinct");
  }

  std::string tag;
  for (std::size_t k = 0; k < center.indices.size(); ++k) {
    if (k) tag += ',';
    tag += std::to_string(center.indices[k] + 1);
  }

  std::vector<Chart> children;
  children.reserve(center.codim());
  for (std::size_t j = 0; j < center.codim(); ++j) {
    const std::size_t t = center.indices[j];
    IntMatrix step = IntMatrix::identity(n);
    for (std::size_t l : center.indices) step(t, l) = 1;

    Chart child;
    child.id_ = chart.id() + "/" + tag + "#" + std::to_string(j + 1);
    child.parent_ = ChartParent{chart.id(), center, j};
    child.step_ = step;
    child.substitution_ = step * chart.substitution();
    child.coords_ = chart.coords();
    child.coords_[t] = DivisorId(child.substitution_.row(t));
    children.push_back(std::move(child));
  }
  return children;
}

std::vector<Stratum> strata(const Chart& chart, std::size_t codim) {
  const std::size_t n = chart.dim();
  if (codim < 2 || codim > n)
    throw std::invalid_argument("strata: codimension must lie in [2, " + std::to_string(n) + "]");
  std::vector<Stratum> out;
  std::vector<std::size_t> idx(codim);
  for (std::size_t i = 0; i < codim; ++i) idx[i] = i;
  while (true) {
    out.push_back(Stratum{chart.id(), idx});
    std::size_t k = codim;
    while (k > 0 && idx[k - 1] == n - codim + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t m = k; m < codim; ++m) idx[m] = idx[m - 1] + 1;
  }
  return out;
}

int multiplicity(const Chart& chart, const Stratum& center, const DivisorId& divisor) {
  auto slot = chart.slot_of(divisor);
  if (!slot) throw std::invalid_argument("multiplicity: divisor is not a coordinate of chart " + chart.id());
  return std::binary_search(center.indices.begin(), center.indices.end(), *slot) ? 1 : 0;
}

}  // namespace bterm
