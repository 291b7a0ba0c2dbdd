#pragma once

#include "brauer_terminal/int_matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bterm {

/// Valuation vector of a divisor on the root coordinates x_1..x_n.
using Ray = std::vector<std::int64_t>;

/// Identity of a prime divisor over the root chart.
///
/// Every divisor met by coordinate-stratum blow-ups of an SNC chart is toric, so it is
/// determined by its valuation ray on the root coordinates: original divisors V(x_i) carry
/// the unit rays, the exceptional divisor of a center carries the sum of the rays of the
/// divisors cutting out that center. Strict transforms keep their ray, and the two charts of
/// one blow-up, or two blow-up sequences reaching the same valuation, agree on it. Ids are
/// therefore content-addressed: no counter, no shared state.
class DivisorId {
 public:
  DivisorId() = default;
  explicit DivisorId(Ray ray) : ray_(std::move(ray)) {}

  const Ray& ray() const noexcept { return ray_; }

  /// Unit ray, i.e. an original coordinate hyperplane of the root chart.
  bool is_root_coordinate() const;

  bool operator==(const DivisorId&) const = default;
  /// Original divisors first in coordinate order, then by total valuation, then by ray
  /// (larger leading entries first).
  std::strong_ordering operator<=>(const DivisorId& other) const;

 private:
  Ray ray_;
};

/// Exponents of a monomial in one chart's coordinates.
struct Monomial {
  std::vector<std::int64_t> exponents;
  bool operator==(const Monomial&) const = default;
};

/// A coordinate stratum V(x_i : i in indices) of one chart. Indices are zero-based slots.
struct Stratum {
  std::string chart_id;
  std::vector<std::size_t> indices;

  std::size_t codim() const noexcept { return indices.size(); }
  bool operator==(const Stratum&) const = default;
};

/// Where a chart came from: the parent chart, the center blown up, and which of the
/// center's coordinates became the exceptional coordinate.
struct ChartParent {
  std::string chart_id;
  Stratum center;
  std::size_t chart_index = 0;
};

/// An étale-local SNC coordinate patch spec k{y_1..y_n} over the root chart.
///
/// substitution() expresses the root coordinates as monomials in this chart's coordinates:
/// x_k = prod_p y_p^{S(p,k)}. Row p is therefore the ray of the divisor V(y_p), and column k
/// is the exponent vector of the root coordinate x_k. step_substitution() is the same
/// matrix relative to the parent chart; substitution() = step_substitution() * parent's.
class Chart {
 public:
  const std::string& id() const noexcept { return id_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<DivisorId>& coords() const noexcept { return coords_; }
  const DivisorId& divisor_at(std::size_t slot) const { return coords_.at(slot); }
  std::optional<std::size_t> slot_of(const DivisorId& id) const;
  const std::optional<ChartParent>& parent() const noexcept { return parent_; }
  const IntMatrix& substitution() const noexcept { return substitution_; }
  const IntMatrix& step_substitution() const noexcept { return step_; }

  /// Rewrites a monomial in the parent chart's coordinates in this chart's coordinates.
  Monomial pull_back(const Monomial& parent_monomial) const;

  /// Stratum of this chart cut out by the given slots (sorted, duplicate-free, in range).
  Stratum stratum(std::vector<std::size_t> indices) const;

 private:
  friend Chart new_affine_model(std::size_t, const std::vector<std::string>&);
  friend std::vector<Chart> blow_up(const Chart&, const Stratum&);

  std::string id_;
  std::vector<DivisorId> coords_;
  std::optional<ChartParent> parent_;
  IntMatrix substitution_;
  IntMatrix step_;
};

/// Root chart spec k{x_1..x_dim}; coordinate i is bound to the original divisor V(x_i).
/// Throws std::invalid_argument for dim == 0, a label count different from dim, or
/// duplicate labels.
Chart new_affine_model(std::size_t dim, const std::vector<std::string>& labels);

/// Standard affine charts of the blow-up along a coordinate stratum of codimension c >= 2.
///
/// Chart j makes slot indices[j] the exceptional coordinate t and rewrites every other slot
/// i_l of the center as t * y_{i_l}; slots outside the center are untouched. All c charts
/// bind the exceptional slot to the same divisor.
std::vector<Chart> blow_up(const Chart& chart, const Stratum& center);

/// All C(dim, codim) coordinate strata of the given codimension, lexicographic order.
std::vector<Stratum> strata(const Chart& chart, std::size_t codim);

/// mult_Z D for a coordinate stratum Z and a divisor bound to one of the chart's slots: 0 or 1.
int multiplicity(const Chart& chart, const Stratum& center, const DivisorId& divisor);

}  // namespace bterm
