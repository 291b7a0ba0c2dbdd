#include "brauer_terminal/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bterm {

std::int64_t mod_floor(std::int64_t a, std::int64_t r) {
  const auto m = a % r;
  return m < 0 ? m + r : m;
}

namespace {

void require_torsion(int r) {
  if (r < 1) throw std::invalid_argument("torsion order must be positive");
}

int order_of(std::int64_t value, int r) {
  const auto g = std::gcd(mod_floor(value, r), static_cast<std::int64_t>(r));
  return g == 0 ? 1 : static_cast<int>(r / g);
}

}  // namespace

SymbolMatrix::SymbolMatrix(int torsion, std::size_t dim) : torsion_(torsion), entries_(dim, dim) {
  require_torsion(torsion);
}

SymbolMatrix::SymbolMatrix(int torsion, const IntMatrix& entries) : torsion_(torsion), entries_(entries) {
  require_torsion(torsion);
  if (entries.rows() != entries.cols()) throw std::invalid_argument("SymbolMatrix: matrix must be square");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) entries_(i, j) = mod_floor(entries_(i, j), torsion_);
}

void SymbolMatrix::add_symbol(std::size_t i, std::size_t j, std::int64_t m) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("add_symbol: index out of range");
  entries_(i, j) = mod_floor(entries_(i, j) + m, torsion_);
  entries_(j, i) = mod_floor(entries_(j, i) - m, torsion_);
}

bool SymbolMatrix::is_alternating() const { return check_complex(*this).ok(); }

bool SymbolMatrix::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (entries_(i, j) != 0) return false;
  return true;
}

bool KummerClass::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [&](auto e) { return mod_floor(e, torsion) == 0; });
}

int KummerClass::order() const {
  std::int64_t g = torsion;
  for (auto e : exponents) g = std::gcd(g, mod_floor(e, torsion));
  return static_cast<int>(torsion / g);
}

DegreeSet::DegreeSet(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.empty()) throw std::invalid_argument("DegreeSet: no candidate degrees");
  if (values_.front() < 1) throw std::invalid_argument("DegreeSet: degrees must be positive");
}

int DegreeSet::value() const {
  if (!is_determinate()) throw std::logic_error("DegreeSet: cover degree is not determined");
  return values_.front();
}

bool DegreeSet::contains(int e) const { return std::binary_search(values_.begin(), values_.end(), e); }

DegreeSet DegreeSet::intersect(const DegreeSet& other) const {
  std::vector<int> common;
  std::set_intersection(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                        std::back_inserter(common));
  return DegreeSet(std::move(common));
}

KummerClass residue(const SymbolMatrix& m, std::size_t i) {
  if (i >= m.dim()) throw std::out_of_range("residue: coordinate index out of range");
  KummerClass k{m.torsion(), i, std::vector<std::int64_t>(m.dim(), 0)};
  for (std::size_t j = 0; j < m.dim(); ++j)
    if (j != i) k.exponents[j] = m(i, j);
  return k;
}

int cover_degree(const KummerClass& monomial_part, const DivisorRecord& record) {
  if (record.extra_degree < 1 || monomial_part.torsion % record.extra_degree != 0)
    throw std::invalid_argument("cover_degree: extra degree must divide the torsion order");
  return std::lcm(monomial_part.order(), record.extra_degree);
}

DegreeSet cover_degree_candidates(const KummerClass& monomial_part, const InheritedCover& inherited) {
  const int r = monomial_part.torsion;
  const int o = monomial_part.order();
  const int u = inherited.order;
  if (u < 1 || r % u != 0) throw std::invalid_argument("cover_degree_candidates: component order must divide r");
  if (u == 1) return DegreeSet::exactly(o);

  std::vector<int> out;
  if (inherited.independent) {
    for (int k = 1; k <= u; ++k)
      if (u % k == 0) out.push_back(std::lcm(o, k));
    return DegreeSet(std::move(out));
  }
  // Unknown u-torsion class x, possibly related to the monomial class m: orders of m + x
  // with m = (r/o, 0) and x = (a, b) in (Z/r)^2, u*x = 0.
  const std::int64_t m0 = r / o;
  for (std::int64_t a = 0; a < r; ++a) {
    if ((a * u) % r != 0) continue;
    for (std::int64_t b = 0; b < r; ++b) {
      if ((b * u) % r != 0) continue;
      out.push_back(std::lcm(order_of(m0 + a, r), order_of(b, r)));
    }
  }
  return DegreeSet(std::move(out));
}

InheritedCover combine_on_center(const std::vector<InheritedCover>& center_components) {
  InheritedCover out;
  for (const auto& c : center_components)
    if (c.order > 1) out.order = std::lcm(out.order, c.order);
  bool all_independent = true;
  for (const auto& c : center_components)
    if (c.order > 1 && !c.independent) all_independent = false;
  out.independent = all_independent;
  return out;
}

InheritedCover carried_by_exceptional(const InheritedCover& combined) {
  return InheritedCover{combined.order, combined.order == 1};
}

bool ramifies_on(const SymbolMatrix& m, std::size_t i, std::size_t j) {
  if (i >= m.dim() || j >= m.dim()) throw std::out_of_range("ramifies_on: index out of range");
  if (i == j) throw std::invalid_argument("ramifies_on: indices must differ");
  return m(i, j) != 0;
}

ComplexCheck check_complex(const SymbolMatrix& m) {
  ComplexCheck out;
  const auto r = static_cast<std::int64_t>(m.torsion());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m(i, i) != 0) out.violations.push_back({i, i, m(i, i)});
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const auto s = mod_floor(m(i, j) + m(j, i), r);
      if (s != 0)
        out.violations.push_back({i, j, s});
      else
        out.verified.emplace_back(i, j);
    }
  }
  return out;
}

SymbolMatrix transform(const SymbolMatrix& m, const IntMatrix& step) {
  const std::size_t n = m.dim();
  if (step.rows() != n || step.cols() != n) throw std::invalid_argument("transform: dimension mismatch");
  if (!m.is_alternating()) throw std::invalid_argument("transform: symbol matrix is not alternating");
  // alpha = sum_{k<l} M(k,l) (x_k, x_l); by bilinearity the coefficient of (y_p, y_q) is
  // C = step * U * step^T with U the strict upper triangle. (y_p, y_p) = (y_p, -1) is trivial,
  // so the diagonal drops and (y_q, y_p) = -(y_p, y_q) re-alternates.
  IntMatrix upper(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) upper(k, l) = m(k, l);
  const IntMatrix c = step * upper * step.transposed();
  IntMatrix out(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) out(p, q) = c(p, q) - c(q, p);
  return SymbolMatrix(m.torsion(), out);
}

}  // namespace bterm
