#pragma once

#include "brauer_terminal/chart.hpp"
#include "brauer_terminal/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bterm {

/// Brauer class alpha in Br_r, written étale-locally as a sum of tame symbols of chart
/// coordinates: alpha = sum_{i<j} M(i,j) (x_i, x_j) with M alternating mod r.
///
/// The constructor only reduces mod r; it does not reject non-alternating input, so that a
/// corrupted matrix can be represented and caught by check_complex().
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  SymbolMatrix(int torsion, std::size_t dim);
  SymbolMatrix(int torsion, const IntMatrix& entries);

  /// alpha += m (x_i, x_j): writes M(i,j) += m and M(j,i) -= m.
  void add_symbol(std::size_t i, std::size_t j, std::int64_t m);

  int torsion() const noexcept { return torsion_; }
  std::size_t dim() const noexcept { return entries_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  bool is_alternating() const;
  bool is_zero() const;

  bool operator==(const SymbolMatrix&) const = default;

 private:
  int torsion_ = 1;
  IntMatrix entries_;
};

/// Kummer class of a monomial in the coordinates of V(x_omitted): exponents mod r, with the
/// omitted slot held at 0. Realizes the residue a(alpha)_D in H^1(k(D), Z/r).
struct KummerClass {
  int torsion = 1;
  std::size_t omitted = 0;
  std::vector<std::int64_t> exponents;

  bool is_trivial() const;
  /// Multiplicative order of the class, a divisor of r.
  int order() const;
};

enum class DivisorKind { original, exceptional };

/// Identity and declared cover data of a boundary or exceptional divisor.
struct DivisorRecord {
  DivisorId id;
  DivisorKind kind = DivisorKind::original;
  int level = 0;  ///< 0 for original divisors, >= 1 for exceptional ones
  /// Degree of a declared non-monomial cover component, unramified along every
  /// coordinate intersection. Divides r.
  int extra_degree = 1;
};

/// Non-monomial cover component a divisor carries, as far as the engine can see it.
struct InheritedCover {
  int order = 1;  ///< bound on the order of the component; 1 means none
  /// True while the component is the declared unramified cover of an original divisor
  /// (or its restriction to a center on such divisors). Such a component cannot cancel a
  /// ramified monomial class. Once it passes through an exceptional divisor its interaction
  /// with the monomial part is no longer tracked.
  bool independent = true;

  bool operator==(const InheritedCover&) const = default;
};

/// Possible cover degrees of one divisor; a single value when the degree is determined.
class DegreeSet {
 public:
  DegreeSet() = default;
  explicit DegreeSet(std::vector<int> values);
  static DegreeSet exactly(int e) { return DegreeSet({e}); }

  const std::vector<int>& values() const noexcept { return values_; }
  bool is_determinate() const noexcept { return values_.size() == 1; }
  int value() const;  ///< throws std::logic_error unless determinate
  int min() const { return values_.front(); }
  int max() const { return values_.back(); }
  bool contains(int e) const;
  DegreeSet intersect(const DegreeSet& other) const;

  bool operator==(const DegreeSet&) const = default;

 private:
  std::vector<int> values_;
};

struct ComplexViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t sum = 0;  ///< M(i,j) + M(j,i) mod r (or M(i,i) when i == j)
};

/// Outcome of the cancellation check on codimension-2 strata.
struct ComplexCheck {
  std::vector<std::pair<std::size_t, std::size_t>> verified;
  std::vector<ComplexViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Residue of alpha along V(x_i): row i of M read as prod_{j != i} x_j^{M(i,j)}.
KummerClass residue(const SymbolMatrix& m, std::size_t i);

/// e = lcm(order of the class, record.extra_degree).
int cover_degree(const KummerClass& monomial_part, const DivisorRecord& record);

/// Candidate degrees for a monomial residue combined with an inherited component.
DegreeSet cover_degree_candidates(const KummerClass& monomial_part, const InheritedCover& inherited);

/// Component seen on the exceptional divisor of a center through divisors with the given
/// components: orders combine by lcm, and it stays independent only if every contributing
/// component is. Use it for the exceptional divisor's own degree candidates.
InheritedCover combine_on_center(const std::vector<InheritedCover>& center_components);

/// The component the new exceptional divisor passes on to later blow-ups: same order, no
/// longer independent of the monomial part.
InheritedCover carried_by_exceptional(const InheritedCover& combined);

/// Whether the cover on V(x_i) ramifies along V(x_i) ∩ V(x_j).
bool ramifies_on(const SymbolMatrix& m, std::size_t i, std::size_t j);

/// Second residues on every codimension-2 stratum {i,j} must cancel: M(i,j) + M(j,i) = 0 mod r.
ComplexCheck check_complex(const SymbolMatrix& m);

/// Pulls alpha back along one blow-up step. step(p,k) is the exponent of the child coordinate
/// y_p in the parent coordinate x_k, as in Chart::step_substitution().
SymbolMatrix transform(const SymbolMatrix& m, const IntMatrix& step);

std::int64_t mod_floor(std::int64_t a, std::int64_t r);

}  // namespace bterm
