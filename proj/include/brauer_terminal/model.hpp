#pragma once

#include "brauer_terminal/brauer.hpp"
#include "brauer_terminal/chart.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace bterm {

/// A blow-up center given by the divisors cutting it out, sorted. Chart independent.
using Center = std::vector<DivisorId>;

/// One chart of the model with alpha written in its coordinates.
struct LocalPair {
  Chart chart;
  SymbolMatrix symbols;
};

/// Everything the engine knows about one divisor of the model.
struct DivisorState {
  DivisorRecord record;
  std::string name;
  DegreeSet degrees;
  InheritedCover inherited;
};

/// An étale-local Brauer pair: SNC charts covering the model, alpha in each chart, and the
/// divisors met by the charts. A freshly constructed model has the single root chart; the
/// fix-up step produces multi-chart models.
class BrauerModel {
 public:
  /// Root model spec k{x_1..x_n} with the given symbols and declared extra cover degrees
  /// (label -> degree). Throws std::invalid_argument if the symbol matrix is not alternating,
  /// its size differs from the label count, a label is unknown, or an extra degree does
  /// not divide the torsion order.
  static BrauerModel affine(int torsion, const std::vector<std::string>& labels, const SymbolMatrix& symbols,
                            const std::map<std::string, int>& extra_degrees = {});

  int torsion() const noexcept { return torsion_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<LocalPair>& charts() const noexcept { return charts_; }
  const LocalPair& chart(const std::string& id) const;
  std::size_t chart_index(const std::string& id) const;
  const std::map<DivisorId, DivisorState>& divisors() const noexcept { return divisors_; }
  const DivisorState& divisor(const DivisorId& id) const;

  /// Label of an original divisor, model name of a known divisor, "E(v_1,..,v_n)" otherwise.
  std::string name_of(const DivisorId& id) const;
  /// "V(x1,x3)".
  std::string describe(const Center& center) const;
  Center center_of(const Stratum& stratum) const;

  /// Divisors whose cover degree is not determined by the model data.
  std::vector<DivisorId> undetermined_divisors() const;

  /// Blows up the whole model along a center: every chart containing all of the center's
  /// divisors is replaced by its blow-up charts (appended after the untouched charts, in
  /// order). Throws std::invalid_argument if no chart meets the center.
  BrauerModel blown_up(const Center& center) const;

 private:
  int torsion_ = 2;
  std::vector<std::string> labels_;
  std::vector<LocalPair> charts_;
  std::map<DivisorId, DivisorState> divisors_;
};

std::string format_ray(const Ray& ray);

}  // namespace bterm
